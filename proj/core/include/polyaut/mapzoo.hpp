#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyaut/nambu.hpp"
#include "polyaut/rational.hpp"

namespace polyaut {

/// Parses the line-oriented map format: one `F<k> = <polynomial>` per line,
/// `#` comments, n inferred from the number of components. Component indices
/// must be exactly 1..n, each once; variable indices must stay within n.
PolynomialMap parse_map(const std::string& text, const std::string& label = "");

/// Canonical text of a map, one `F<k> = ...` line per component in index
/// order. parse_map(print_map(m)) == m.
std::string print_map(const PolynomialMap& map);

/// Coefficient matrix of a cubic-linear map F_i = X_i + (sum_j a_ij X_j)^3.
struct DruzkowskiSpec {
    int n;
    std::vector<Rational> entries;  // row-major n*n

    DruzkowskiSpec(int size, std::vector<Rational> coefficients);
    const Rational& at(int r, int c) const;
};

/// Matrix file format: first line n, then n whitespace-separated rows.
DruzkowskiSpec parse_druzkowski_matrix(const std::string& text);

struct DruzkowskiMap {
    PolynomialMap map;
    int rank;             // rank of the coefficient matrix A
    bool a_squared_zero;  // whether A^2 = 0
};

/// Expands F_i = X_i + (sum_j a_ij X_j)^3 into canonical polynomials and
/// attaches the rank and nilpotency diagnostics. Whether det(J_F) is constant
/// is the expensive diagnostic; query it separately via
/// has_constant_jacobian_det.
DruzkowskiMap druzkowski_from_matrix(const DruzkowskiSpec& spec, const std::string& label = "");

bool has_constant_jacobian_det(const PolynomialMap& map);

/// Linear map x -> M x; M given row-major, must be square.
PolynomialMap linear_map(int n, const std::vector<Rational>& row_major, const std::string& label = "");

/// Rank of a rational matrix (exact Gaussian elimination).
int rational_matrix_rank(int n, const std::vector<Rational>& row_major);

/// The named example maps: identity1..identity4, toy2 = (x1, x2 + x1^2),
/// nagata, and druzkowski13 (the dimension-13 cubic-linear example).
/// Built once per process.
const std::map<std::string, PolynomialMap>& fixtures();

/// The coefficient matrix behind the druzkowski13 fixture.
DruzkowskiSpec druzkowski13_matrix();

}  // namespace polyaut
