#pragma once

#include <vector>

#include "polyaut/polynomial.hpp"

namespace polyaut {

/// Dense matrix with polynomial entries sharing one arity. Immutable in
/// spirit: operations return new matrices.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, int arity);  // zero-filled
    static PolyMatrix identity(int n, int arity);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int arity() const { return arity_; }
    bool is_square() const { return rows_ == cols_; }

    const Polynomial& at(int r, int c) const;
    void set(int r, int c, Polynomial value);

    PolyMatrix transposed() const;
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

    /// Exact determinant. Dispatches to cofactor expansion for dimension <= 4
    /// and fraction-free Bareiss elimination above that.
    Polynomial determinant() const;
    /// Single-step Bareiss with simplest-pivot row selection (fewest terms,
    /// then lowest degree). Every division is exact by the Bareiss identity.
    Polynomial determinant_bareiss() const;
    Polynomial determinant_cofactor() const;

    /// Transposed cofactor matrix; satisfies m * adjugate(m) = det(m) * I.
    PolyMatrix adjugate() const;

    /// Determinant of *this with row `row` (0-based) replaced by
    /// `replacement`; *this is left untouched.
    Polynomial row_replaced_determinant(int row, const std::vector<Polynomial>& replacement) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    int rows_, cols_, arity_;
    std::vector<Polynomial> entries_;  // row-major

    PolyMatrix minor_matrix(int drop_row, int drop_col) const;
};

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace polyaut
