#include "gstar/matrix.hpp"

namespace gstar {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         std::size_t cols, const FieldSpec& f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw ValidationError("shape_mismatch", "row length differs from column count");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(rows[i][j].field() == f))
                throw ValidationError("field_mismatch", "matrix entry over a different field");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    return std::vector<Scalar>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::stacked(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols())
        throw ValidationError("shape_mismatch", "stacking matrices with different column counts");
    if (!(top.field() == bottom.field()))
        throw ValidationError("field_mismatch", "stacking matrices over different fields");
    Matrix m(top.rows() + bottom.rows(), top.cols(), top.field());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!(entries_[i] == o.entries_[i])) return false;
    return true;
}

int Matrix::compare(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
    if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (int c = entries_[i].compare(o.entries_[i]); c != 0) return c;
    return 0;
}

RrefResult rref_rank(const Matrix& m) {
    RrefResult out;
    out.rref = m;
    Matrix& r = out.rref;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        // first-nonzero pivoting: take the topmost available nonzero entry
        std::size_t pivot = lead;
        while (pivot < r.rows() && r.at(pivot, col).is_zero()) ++pivot;
        if (pivot == r.rows()) continue;
        if (pivot != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(pivot, j), r.at(lead, j));
        Scalar inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) = r.at(lead, j) * inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Scalar f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - f * r.at(lead, j);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = out.pivots.size();
    return out;
}

std::size_t rank_of(const Matrix& m) { return rref_rank(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult rr = rref_rank(m);
    const FieldSpec& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.rref.at(i, free_col);
        basis.push_back(std::move(v));
    }
    // canonical echelon form of the kernel itself
    return rref_rank(Matrix::from_rows(basis, m.cols(), f)).rref;
}

bool span_contains(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw ValidationError("shape_mismatch", "span comparison needs equal column counts");
    if (!(a.field() == b.field()))
        throw ValidationError("field_mismatch", "span comparison over different fields");
    return rank_of(b) == rank_of(Matrix::stacked(b, a));
}

std::vector<std::vector<mpz_class>> integer_kernel(
    const std::vector<std::vector<mpz_class>>& rows, std::size_t cols) {
    std::vector<std::vector<mpz_class>> a(rows);
    for (const auto& r : a)
        if (r.size() != cols)
            throw ValidationError("shape_mismatch", "row length differs from column count");

    // transform = k x k unimodular, tracked column-wise
    std::vector<std::vector<mpz_class>> u(cols, std::vector<mpz_class>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;  // u[j] is column j

    auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (auto& row : a) row[dst] -= q * row[src];
        for (std::size_t i = 0; i < cols; ++i) u[dst][i] -= q * u[src][i];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (auto& row : a) std::swap(row[x], row[y]);
        std::swap(u[x], u[y]);
    };

    std::size_t lead = 0;
    for (std::size_t r = 0; r < a.size() && lead < cols; ++r) {
        // gcd elimination across the free columns of this row
        while (true) {
            std::size_t pivot = cols;
            for (std::size_t j = lead; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                if (pivot == cols || cmp(abs(a[r][j]), abs(a[r][pivot])) < 0) pivot = j;
            }
            if (pivot == cols) break;  // row already zero on free columns
            bool reduced = true;
            for (std::size_t j = lead; j < cols; ++j) {
                if (j == pivot || a[r][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][pivot].get_mpz_t());
                col_axpy(j, pivot, q);
                if (a[r][j] != 0) reduced = false;
            }
            if (reduced) {
                col_swap(lead, pivot == lead ? lead : pivot);
                ++lead;
                break;
            }
        }
    }

    std::vector<std::vector<mpz_class>> kernel;
    kernel.reserve(cols - lead);
    for (std::size_t j = lead; j < cols; ++j) kernel.push_back(u[j]);
    return kernel;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& x) {
    if (x.size() != m.cols())
        throw ValidationError("shape_mismatch", "vector length differs from column count");
    std::vector<Scalar> out(m.rows(), Scalar::zero(m.field()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar acc = Scalar::zero(m.field());
        for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + m.at(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace gstar
