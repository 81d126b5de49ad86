#include "polyaut/nambu.hpp"

#include "polyaut/errors.hpp"
#include "polyaut/polynomial_io.hpp"

namespace polyaut {

PolynomialMap::PolynomialMap(std::vector<Polynomial> comps, std::string map_label)
    : n(static_cast<int>(comps.size())), components(std::move(comps)), label(std::move(map_label)) {
    if (n < 1) throw std::invalid_argument("PolynomialMap: needs at least one component");
    for (const auto& f : components) {
        if (f.arity() != n) throw std::invalid_argument("PolynomialMap: component arity must equal n");
    }
}

PolynomialMap identity_map(int n) {
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
    return PolynomialMap(std::move(comps), "identity" + std::to_string(n));
}

NotConstantJacobian::NotConstantJacobian(Polynomial det)
    : std::runtime_error("Jacobian determinant is not constant: det(J_F) = " + to_string(det)),
      det_(std::move(det)) {}

PolyMatrix jacobian_matrix(const PolynomialMap& map) {
    PolyMatrix j(map.n, map.n, map.n);
    for (int i = 0; i < map.n; ++i) {
        for (int c = 0; c < map.n; ++c) {
            j.set(i, c, map.components[static_cast<std::size_t>(i)].partial_derivative(c));
        }
    }
    return j;
}

JacobianData jacobian_data(const PolynomialMap& map) {
    PolyMatrix jac = jacobian_matrix(map);
    Polynomial det = jac.determinant();
    if (!det.is_constant()) throw NotConstantJacobian(std::move(det));
    const Rational c = det.constant_value();
    if (c.is_zero()) throw SingularJacobian();
    PolyMatrix inverse = jac.adjugate();
    const Rational inv_c = c.reciprocal();
    for (int r = 0; r < map.n; ++r) {
        for (int col = 0; col < map.n; ++col) {
            inverse.set(r, col, inverse.at(r, col).scaled(inv_c));
        }
    }
    return JacobianData{std::move(jac), c, std::move(inverse)};
}

PolynomialMap normalize_to_unit_jacobian(const PolynomialMap& map) {
    JacobianData data = jacobian_data(map);
    if (data.det.is_one()) return map;
    std::vector<Polynomial> comps = map.components;
    comps[0] = comps[0].scaled(data.det.reciprocal());
    return PolynomialMap(std::move(comps), map.label);
}

DerivationTables::DerivationTables(int n, PolyMatrix jac, PolyMatrix inv)
    : n_(n),
      jacobian_(std::move(jac)),
      inverse_jacobian_(std::move(inv)),
      first_(inverse_jacobian_.transposed()) {}

std::size_t DerivationTables::pair_index(int a, int b) {
    // a <= b; dense index into the upper triangle including the diagonal
    return static_cast<std::size_t>(b) * (static_cast<std::size_t>(b) + 1) / 2 + static_cast<std::size_t>(a);
}

const Polynomial& DerivationTables::second(int k, int i, int j) const {
    if (k < 0 || k >= n_ || i < 0 || i >= n_ || j < 0 || j >= n_) {
        throw std::invalid_argument("DerivationTables: index out of range");
    }
    const int lo = k < i ? k : i;
    const int hi = k < i ? i : k;
    return second_[pair_index(lo, hi)][static_cast<std::size_t>(j)];
}

Polynomial DerivationTables::apply(int k, const Polynomial& g) const {
    if (k < 0 || k >= n_) throw std::invalid_argument("DerivationTables: derivation index out of range");
    if (g.arity() != n_) throw std::invalid_argument("DerivationTables: polynomial arity mismatch");
    Polynomial acc(n_);
    for (int r = 0; r < n_; ++r) {
        const Polynomial& weight = inverse_jacobian_.at(r, k);
        if (weight.is_zero()) continue;
        Polynomial dg = g.partial_derivative(r);
        if (dg.is_zero()) continue;
        acc += weight * dg;
    }
    return acc;
}

DerivationTables build_tables(const PolynomialMap& map) {
    return build_tables(map, jacobian_data(map));
}

DerivationTables build_tables(const PolynomialMap& map, const JacobianData& data) {
    if (!data.det.is_one()) {
        throw std::invalid_argument("build_tables: det(J_F) must be 1; call normalize_to_unit_jacobian first");
    }
    DerivationTables t(map.n, data.jacobian, data.inverse_jacobian);
    const int n = map.n;
    t.second_.resize(DerivationTables::pair_index(n - 1, n - 1) + 1);
    for (int hi = 0; hi < n; ++hi) {
        for (int lo = 0; lo <= hi; ++lo) {
            std::vector<Polynomial> row;
            row.reserve(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) row.push_back(t.apply(lo, t.first_.at(hi, j)));
            t.second_[DerivationTables::pair_index(lo, hi)] = std::move(row);
        }
    }
    // delta_k delta_i = delta_i delta_k is what the symmetry reduction rests
    // on; cross-check one mixed pair per map and fail loudly on violation.
    if (n >= 2) {
        for (int j = 0; j < n; ++j) {
            Polynomial other_order = t.apply(1, t.first_.at(0, j));
            if (other_order != t.second(0, 1, j)) {
                throw CommutativityViolation(
                    "Nambu derivations do not commute on delta_1 delta_2 x_" + std::to_string(j + 1));
            }
        }
    }
    return t;
}

Polynomial nambu_apply(const DerivationTables& tables, int k, const Polynomial& g) {
    return tables.apply(k, g);
}

}  // namespace polyaut
