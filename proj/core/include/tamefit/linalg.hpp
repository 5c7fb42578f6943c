#pragma once

#include "tamefit/numeric.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace tamefit {

/// Dense integer matrix with exact entries, row major. Sized for the tiny
/// systems that appear here (relation matrices, rank-2 lattices); nothing
/// is optimized for scale.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMat(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMat transposed() const;

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row i -= q * row j
    void submul_row(std::size_t i, std::size_t j, const Integer& q);

    friend IntMat operator*(const IntMat& x, const IntMat& y);
    friend bool operator==(const IntMat& x, const IntMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Hermite normal form of the lattice spanned by the rows of m: row echelon
/// with positive pivots and the entries above each pivot reduced into
/// [0, pivot). Zero rows are trimmed, so the result has rank(m) rows. This
/// is the unique canonical basis of the row lattice.
IntMat row_hermite_form(IntMat m);

/// Same reduction but keeping zero rows and returning the unimodular
/// transform: (h, u) with u * m = h.
std::pair<IntMat, IntMat> row_hermite_form_with_transform(IntMat m);

/// Basis, as rows, of the left kernel { x : x * m = 0 }.
IntMat left_kernel(const IntMat& m);

/// Index [Z^n : row lattice] for a matrix with n columns; 0 when the rows
/// do not span a finite-index sublattice.
Integer row_lattice_index(const IntMat& m);

}  // namespace tamefit
