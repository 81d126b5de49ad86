#pragma once

#include <utility>
#include <vector>

#include "polyaut/monomial.hpp"
#include "polyaut/rational.hpp"

namespace polyaut {

/// Sparse multivariate polynomial over the rationals.
///
/// Canonical form: terms are kept sorted in descending grevlex order with no
/// zero coefficients, so structural equality is polynomial equality. All
/// operations are pure; instances are safe to share across threads.
class Polynomial {
public:
    struct Term {
        Monomial monomial;
        Rational coefficient;
    };

    /// The zero polynomial of the given arity (empty term list).
    explicit Polynomial(int arity);

    static Polynomial constant(int arity, const Rational& value);
    static Polynomial variable(int arity, int var);  // 0-based variable index
    static Polynomial term(const Monomial& m, const Rational& c);
    /// Sums up arbitrary (monomial, coefficient) pairs into canonical form.
    static Polynomial from_terms(int arity, std::vector<Term> terms);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].monomial.is_unit(); }
    /// Requires is_constant().
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const { return terms_.empty() ? 0 : terms_[0].monomial.degree(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    Polynomial pow(unsigned exponent) const;

    Polynomial partial_derivative(int var) const;
    /// Replaces variable v by images[v]; images must share one common arity.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    int arity_;
    std::vector<Term> terms_;  // descending grevlex, no zero coefficients

    void normalize();
    static void require_same_arity(const Polynomial& a, const Polynomial& b);
};

/// Quotient p/q in the polynomial ring. Throws InexactDivision if q does not
/// divide p exactly; in the Bareiss pipeline that signals a bug upstream.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

}  // namespace polyaut
