#include "tamefit/linalg.hpp"

namespace tamefit {

IntMat::IntMat(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("IntMat: entry count does not match shape");
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMat::submul_row(std::size_t i, std::size_t j, const Integer& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) -= q * at(j, k);
}

IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols() != y.rows())
        throw std::invalid_argument("IntMat: shape mismatch in product");
    IntMat z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Integer& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Row-reduces m in place; u, when non-null, receives the same row
// operations (starting from the identity).
std::size_t reduce(IntMat& m, IntMat* u) {
    const std::size_t n = m.rows();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < n; ++col) {
        // Euclid on the column entries below the pivot row.
        while (true) {
            std::size_t best = n;
            for (std::size_t r = pivot_row; r < n; ++r) {
                if (m.at(r, col) == 0) continue;
                if (best == n ||
                    mpz_cmpabs(m.at(r, col).get_mpz_t(), m.at(best, col).get_mpz_t()) < 0)
                    best = r;
            }
            if (best == n) break;  // column is zero below pivot_row
            m.swap_rows(best, pivot_row);
            if (u) u->swap_rows(best, pivot_row);
            bool cleared = true;
            for (std::size_t r = pivot_row + 1; r < n; ++r) {
                if (m.at(r, col) == 0) continue;
                Integer q = floor_div(m.at(r, col), m.at(pivot_row, col));
                m.submul_row(r, pivot_row, q);
                if (u) u->submul_row(r, pivot_row, q);
                if (m.at(r, col) != 0) cleared = false;
            }
            if (cleared) {
                if (m.at(pivot_row, col) < 0) {
                    m.negate_row(pivot_row);
                    if (u) u->negate_row(pivot_row);
                }
                // reduce the entries above the pivot into [0, pivot)
                for (std::size_t r = 0; r < pivot_row; ++r) {
                    Integer q = floor_div(m.at(r, col), m.at(pivot_row, col));
                    m.submul_row(r, pivot_row, q);
                    if (u) u->submul_row(r, pivot_row, q);
                }
                ++pivot_row;
                break;
            }
        }
    }
    return pivot_row;  // rank
}

}  // namespace

IntMat row_hermite_form(IntMat m) {
    std::size_t rank = reduce(m, nullptr);
    IntMat h(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) h.at(i, j) = m.at(i, j);
    return h;
}

std::pair<IntMat, IntMat> row_hermite_form_with_transform(IntMat m) {
    IntMat u = IntMat::identity(m.rows());
    reduce(m, &u);
    return {std::move(m), std::move(u)};
}

IntMat left_kernel(const IntMat& m) {
    IntMat work = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t rank = reduce(work, &u);
    IntMat k(m.rows() - rank, m.rows());
    for (std::size_t i = rank; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) k.at(i - rank, j) = u.at(i, j);
    return k;
}

Integer row_lattice_index(const IntMat& m) {
    IntMat h = row_hermite_form(m);
    if (h.rows() < m.cols()) return 0;
    Integer index = 1;
    for (std::size_t i = 0; i < m.cols(); ++i) index *= h.at(i, i);
    return index;
}

}  // namespace tamefit
