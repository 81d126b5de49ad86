#include "polyaut/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace polyaut {

PolyMatrix::PolyMatrix(int rows, int cols, int arity)
    : rows_(rows), cols_(cols), arity_(arity) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("PolyMatrix: dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Polynomial(arity));
}

PolyMatrix PolyMatrix::identity(int n, int arity) {
    PolyMatrix m(n, n, arity);
    for (int i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(arity, Rational(1)));
    return m;
}

const Polynomial& PolyMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::invalid_argument("PolyMatrix: index out of range");
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
}

void PolyMatrix::set(int r, int c, Polynomial value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::invalid_argument("PolyMatrix: index out of range");
    if (value.arity() != arity_) throw std::invalid_argument("PolyMatrix: entry arity mismatch");
    entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)] =
        std::move(value);
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix out(cols_, rows_, arity_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    }
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
    if (a.arity_ != b.arity_) throw std::invalid_argument("PolyMatrix: arity mismatch in product");
    PolyMatrix out(a.rows_, b.cols_, a.arity_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int c = 0; c < b.cols_; ++c) {
            Polynomial acc(a.arity_);
            for (int k = 0; k < a.cols_; ++k) acc += a.at(r, k) * b.at(k, c);
            out.set(r, c, std::move(acc));
        }
    }
    return out;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }

Polynomial PolyMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("PolyMatrix: determinant of non-square matrix");
    return rows_ <= 4 ? determinant_cofactor() : determinant_bareiss();
}

Polynomial PolyMatrix::determinant_cofactor() const {
    if (!is_square()) throw std::invalid_argument("PolyMatrix: determinant of non-square matrix");
    const int n = rows_;
    if (n == 1) return at(0, 0);
    Polynomial acc(arity_);
    for (int r = 0; r < n; ++r) {
        const Polynomial& e = at(r, 0);
        if (e.is_zero()) continue;
        Polynomial sub = minor_matrix(r, 0).determinant_cofactor();
        acc += (r % 2 == 0) ? e * sub : -(e * sub);
    }
    return acc;
}

Polynomial PolyMatrix::determinant_bareiss() const {
    if (!is_square()) throw std::invalid_argument("PolyMatrix: determinant of non-square matrix");
    const int n = rows_;
    if (n == 1) return at(0, 0);

    std::vector<std::vector<Polynomial>> m;
    m.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        std::vector<Polynomial> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) row.push_back(at(r, c));
        m.push_back(std::move(row));
    }

    bool negate = false;
    Polynomial previous_pivot = Polynomial::constant(arity_, Rational(1));
    for (int k = 0; k < n - 1; ++k) {
        // Simplest nonzero pivot in column k: fewest terms, then lowest degree.
        int pivot_row = -1;
        for (int r = k; r < n; ++r) {
            const Polynomial& cand = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            if (cand.is_zero()) continue;
            if (pivot_row < 0) {
                pivot_row = r;
                continue;
            }
            const Polynomial& best = m[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(k)];
            if (cand.term_count() < best.term_count() ||
                (cand.term_count() == best.term_count() && cand.total_degree() < best.total_degree())) {
                pivot_row = r;
            }
        }
        if (pivot_row < 0) return Polynomial(arity_);  // zero column
        if (pivot_row != k) {
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot_row)]);
            negate = !negate;
        }
        const Polynomial& pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            auto& row_i = m[static_cast<std::size_t>(i)];
            const Polynomial head = row_i[static_cast<std::size_t>(k)];
            if (head.is_zero() && pivot == previous_pivot) continue;  // row is unchanged
            for (int j = k + 1; j < n; ++j) {
                Polynomial numer = pivot * row_i[static_cast<std::size_t>(j)];
                if (!head.is_zero()) {
                    numer -= head * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                }
                row_i[static_cast<std::size_t>(j)] = exact_divide(numer, previous_pivot);
            }
            row_i[static_cast<std::size_t>(k)] = Polynomial(arity_);
        }
        previous_pivot = pivot;
    }
    Polynomial det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return negate ? -det : det;
}

PolyMatrix PolyMatrix::minor_matrix(int drop_row, int drop_col) const {
    PolyMatrix out(rows_ - 1, cols_ - 1, arity_);
    int rr = 0;
    for (int r = 0; r < rows_; ++r) {
        if (r == drop_row) continue;
        int cc = 0;
        for (int c = 0; c < cols_; ++c) {
            if (c == drop_col) continue;
            out.set(rr, cc, at(r, c));
            ++cc;
        }
        ++rr;
    }
    return out;
}

PolyMatrix PolyMatrix::adjugate() const {
    if (!is_square()) throw std::invalid_argument("PolyMatrix: adjugate of non-square matrix");
    const int n = rows_;
    PolyMatrix out(n, n, arity_);
    if (n == 1) {
        out.set(0, 0, Polynomial::constant(arity_, Rational(1)));
        return out;
    }
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Polynomial cof = minor_matrix(r, c).determinant();
            if ((r + c) % 2 != 0) cof = -cof;
            out.set(c, r, std::move(cof));  // transposed on the fly
        }
    }
    return out;
}

Polynomial PolyMatrix::row_replaced_determinant(int row, const std::vector<Polynomial>& replacement) const {
    if (!is_square()) throw std::invalid_argument("PolyMatrix: row replacement needs a square matrix");
    if (row < 0 || row >= rows_) throw std::invalid_argument("PolyMatrix: row index out of range");
    if (static_cast<int>(replacement.size()) != cols_) {
        throw std::invalid_argument("PolyMatrix: replacement row has wrong length");
    }
    PolyMatrix copy = *this;
    for (int c = 0; c < cols_; ++c) copy.set(row, c, replacement[static_cast<std::size_t>(c)]);
    return copy.determinant();
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.arity_ == b.arity_ && a.entries_ == b.entries_;
}

}  // namespace polyaut
