#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "polyaut/nambu.hpp"
#include "polyaut/polynomial.hpp"

namespace polyaut {

/// Term orders used by the Groebner engine. `block_elimination(s)` eliminates
/// variables [0, s): monomials are compared grevlex on the eliminated block
/// first, with ties broken grevlex on the retained block. Both orders are
/// multiplicative well-orders.
class MonomialOrder {
public:
    enum class Kind { grevlex, block_elimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder block_elimination(int split) { return MonomialOrder(Kind::block_elimination, split); }

    Kind kind() const { return kind_; }
    int block_split() const { return split_; }

    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    MonomialOrder(Kind kind, int split) : kind_(kind), split_(split) {}
    Kind kind_;
    int split_;
};

/// Caps on a Groebner run: reduction steps plus an optional wall-clock
/// deadline. Exceeding either throws BudgetExceeded.
struct Budget {
    std::uint64_t max_steps = 10'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Budget unlimited();
    static Budget with_steps(std::uint64_t steps);
};

/// Throws BudgetExceeded(Reason::deadline) once the deadline has passed.
void check_deadline(const Budget& budget);

class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order, bool reduced);

    const std::vector<Polynomial>& generators() const { return generators_; }
    const MonomialOrder& order() const { return order_; }
    bool reduced() const { return reduced_; }
    int arity() const { return arity_; }

    /// Leading monomial of generator g under the basis order.
    const Monomial& leading_monomial(std::size_t g) const;
    /// Generator terms sorted descending under the basis order.
    const std::vector<Polynomial::Term>& ordered_terms(std::size_t g) const;

private:
    std::vector<Polynomial> generators_;
    MonomialOrder order_;
    bool reduced_;
    int arity_;
    std::vector<std::vector<Polynomial::Term>> ordered_;  // cache for division
};

/// Complete multivariate division remainder: no term of the result is
/// divisible by any basis leading term, and result == g modulo the ideal.
Polynomial normal_form(const Polynomial& g, const GroebnerBasis& basis);

/// Buchberger's algorithm with normal pair selection (minimal lcm degree
/// first) and the coprime and chain discard criteria. Returns the reduced
/// Groebner basis with monic generators.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                         const Budget& budget = Budget{});

struct MembershipResult {
    bool is_member;
    Polynomial normal_form;                   // in the 2n-variable ring
    std::optional<Polynomial> f_expression;   // arity n, in the y-variables; set iff member
};

/// The elimination basis of <y_1 - F_1, ..., y_n - F_n> in
/// Q[x_1..x_n, y_1..y_n] with the x-block eliminated. Compute once per map
/// and reuse across membership queries.
GroebnerBasis subalgebra_basis(const PolynomialMap& map, const Budget& budget = Budget{});

/// Decides g in Q[F_1, ..., F_n] by reducing g modulo the elimination basis;
/// the normal form is free of x-variables exactly when g is a member, and
/// then reads back as the polynomial expression of g in F.
MembershipResult subalgebra_membership(const Polynomial& g, const PolynomialMap& map,
                                       const GroebnerBasis* cached_basis = nullptr,
                                       const Budget& budget = Budget{});

/// Polynomial inverse G with G(F(x)) = x, if every x_i lies in Q[F].
/// Accepts any constant nonzero Jacobian determinant; non-unit constants are
/// normalized away and folded back into G.
std::optional<std::vector<Polynomial>> invert_map(const PolynomialMap& map,
                                                  const Budget& budget = Budget{});

/// Same, for a map already known to have det(J_F) = 1, reusing its
/// elimination basis.
std::optional<std::vector<Polynomial>> invert_normalized(const PolynomialMap& normalized_map,
                                                         const GroebnerBasis& basis,
                                                         const Budget& budget = Budget{});

namespace detail {
/// g(x_1..x_n) viewed in Q[x_1..x_n, y_1..y_n].
Polynomial embed_in_double_ring(const Polynomial& g, int n);
/// True if some term uses a variable from the x-block [0, n).
bool uses_x_block(const Polynomial& g, int n);
/// Reads an x-free 2n-ring polynomial as an arity-n polynomial in y.
Polynomial extract_y_polynomial(const Polynomial& g, int n);
}  // namespace detail

}  // namespace polyaut
