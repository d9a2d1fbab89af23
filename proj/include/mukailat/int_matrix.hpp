#pragma once

// Dense matrices of arbitrary-precision integers and the exact algorithms
// everything else is built on: Smith and Hermite normal forms, saturated
// integer kernels, determinants. Vectors are rows throughout; a matrix acts
// on a row vector by right multiplication.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "mukailat/numeric.hpp"

namespace mukailat {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> init);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    void set_row(std::size_t i, const IntVec& v);

    IntMatrix transposed() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row(i) += c * row(j)
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    /// col(i) += c * col(j)
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;  // row-major
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& scalar, const IntMatrix& m);

IntMatrix matrix_from_rows(const std::vector<IntVec>& rows, std::size_t cols);

/// v * M for a row vector v.
IntVec row_times_matrix(const IntVec& v, const IntMatrix& m);
Int dot(const IntVec& a, const IntVec& b);

/// Exact determinant (Bareiss fraction-free elimination). Square input.
Int determinant(const IntMatrix& m);

/// Block-diagonal direct sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
    IntMatrix s;  ///< diagonal, nonnegative, d1 | d2 | ..., zeros trailing
    IntMatrix u;  ///< unimodular row transform
    IntMatrix v;  ///< unimodular column transform;  u * m * v == s
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form H = U*m: echelon with positive pivots and
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Rank over the rationals.
std::size_t matrix_rank(const IntMatrix& m);

/// Saturated basis (as rows, in Hermite normal form) of
/// { x in Z^cols : m * x^T = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace mukailat
