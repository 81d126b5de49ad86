#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polyaut/poly_matrix.hpp"
#include "polyaut/polynomial.hpp"

namespace polyaut {

/// A polynomial map F = (F_1, ..., F_n) : Q^n -> Q^n.
struct PolynomialMap {
    int n;
    std::vector<Polynomial> components;  // each of arity n
    std::string label;

    PolynomialMap(std::vector<Polynomial> comps, std::string map_label = "");
};

PolynomialMap identity_map(int n);

/// det(J_F) is not a constant; carries the offending determinant polynomial.
class NotConstantJacobian : public std::runtime_error {
public:
    explicit NotConstantJacobian(Polynomial det);
    const Polynomial& determinant() const { return det_; }

private:
    Polynomial det_;
};

/// det(J_F) == 0, so F cannot be an automorphism candidate.
class SingularJacobian : public std::runtime_error {
public:
    SingularJacobian() : std::runtime_error("Jacobian determinant is zero") {}
};

struct JacobianData {
    PolyMatrix jacobian;          // J_F[i][j] = dF_{i+1}/dx_{j+1}
    Rational det;                 // the constant c
    PolyMatrix inverse_jacobian;  // adj(J_F)/c, polynomial entries
};

PolyMatrix jacobian_matrix(const PolynomialMap& map);

/// Computes J_F, checks det(J_F) is a nonzero constant, and returns the
/// polynomial inverse Jacobian. Throws NotConstantJacobian / SingularJacobian.
JacobianData jacobian_data(const PolynomialMap& map);

/// Rescales F_1 by 1/c so the result has Jacobian determinant exactly 1.
/// F is an automorphism iff the rescaled map is.
PolynomialMap normalize_to_unit_jacobian(const PolynomialMap& map);

/// First- and second-order Nambu derivative tables for a map with det(J_F)=1.
///
/// first(i, j) = delta_{i+1} x_{j+1} (the transpose of the inverse Jacobian);
/// second entries delta_k delta_i x_j are stored once per unordered pair
/// {k, i}. Commutativity of the two orders is cross-checked on construction.
class DerivationTables {
public:
    int n() const { return n_; }
    const PolyMatrix& jacobian() const { return jacobian_; }
    const PolyMatrix& inverse_jacobian() const { return inverse_jacobian_; }
    const PolyMatrix& first() const { return first_; }

    /// delta_{k+1} delta_{i+1} x_{j+1}; symmetric in (k, i). 0-based indices.
    const Polynomial& second(int k, int i, int j) const;

    /// The Nambu derivation delta_{k+1} applied to g (0-based k).
    Polynomial apply(int k, const Polynomial& g) const;

    friend DerivationTables build_tables(const PolynomialMap& map);
    friend DerivationTables build_tables(const PolynomialMap& map, const JacobianData& data);

private:
    DerivationTables(int n, PolyMatrix jac, PolyMatrix inv);

    int n_;
    PolyMatrix jacobian_;
    PolyMatrix inverse_jacobian_;
    PolyMatrix first_;
    std::vector<std::vector<Polynomial>> second_;  // indexed by unordered pair

    static std::size_t pair_index(int a, int b);  // requires a <= b
};

/// Builds the derivation tables; requires det(J_F) = 1 (normalize first).
DerivationTables build_tables(const PolynomialMap& map);
DerivationTables build_tables(const PolynomialMap& map, const JacobianData& data);

/// delta_{k+1}(g) = sum_r (J_F^-1)[r][k] * dg/dx_r  (0-based k).
Polynomial nambu_apply(const DerivationTables& tables, int k, const Polynomial& g);

}  // namespace polyaut
