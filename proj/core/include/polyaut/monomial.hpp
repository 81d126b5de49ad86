#pragma once

#include <cstdint>
#include <vector>

namespace polyaut {

/// A power product of the ambient variables, stored as a fixed-length
/// exponent vector. Length always equals the ring arity.
class Monomial {
public:
    explicit Monomial(int arity) : exps_(static_cast<std::size_t>(arity), 0), degree_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents);

    int arity() const { return static_cast<int>(exps_.size()); }
    std::uint32_t exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint64_t degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_;  // cached sum of exponents
};

/// Graded reverse lexicographic order: higher total degree wins; on ties the
/// monomial with the *smaller* exponent at the last differing variable is the
/// larger one.
bool grevlex_less(const Monomial& a, const Monomial& b);

/// grevlex restricted to the variable range [lo, hi); used by block orders.
int grevlex_compare_range(const Monomial& a, const Monomial& b, int lo, int hi);

}  // namespace polyaut
