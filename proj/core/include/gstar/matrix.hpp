#pragma once

#include <cstddef>
#include <vector>

#include "gstar/field.hpp"

namespace gstar {

// Dense matrix over one exact field, row major.  Immutable in practice:
// operations return fresh matrices.
class Matrix {
public:
    Matrix() : field_(FieldSpec::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f);
    static Matrix identity(std::size_t n, const FieldSpec& f);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                            std::size_t cols, const FieldSpec& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    std::vector<Scalar> row(std::size_t i) const;

    Matrix transposed() const;
    // top over bottom; same field and column count required
    static Matrix stacked(const Matrix& top, const Matrix& bottom);

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    // deterministic order: dims first, then entry-wise
    int compare(const Matrix& o) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix rref;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank = 0;
};

// Unique reduced row-echelon form; exact Gauss-Jordan with first-nonzero pivoting.
RrefResult rref_rank(const Matrix& m);
std::size_t rank_of(const Matrix& m);

// Rows form a canonical (rref) basis of the right kernel; row count = cols - rank.
Matrix kernel_basis(const Matrix& m);

// True iff the row space of b contains the row space of a.
bool span_contains(const Matrix& a, const Matrix& b);

// m (r x c) times column vector x (length c).
std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& x);

// Basis of the full integer kernel {x in Z^cols : rows . x = 0}, computed by
// unimodular column elimination.  The resulting lattice is saturated, so its
// reduction mod any prime keeps full rank.
std::vector<std::vector<mpz_class>> integer_kernel(
    const std::vector<std::vector<mpz_class>>& rows, std::size_t cols);

}  // namespace gstar
