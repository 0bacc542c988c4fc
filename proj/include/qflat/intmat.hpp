#ifndef QFLAT_INTMAT_HPP
#define QFLAT_INTMAT_HPP

#include "qflat/numeric.hpp"

#include <initializer_list>
#include <vector>

namespace qflat {

// Dense matrix over Z. Row-major, arbitrary precision entries.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    IntMat transpose() const;
    IntMat mul(const IntMat& o) const;
    Vec mul(const Vec& v) const;

    bool is_symmetric() const;

    // Elementary column operations (used by reduction/LLL transforms).
    void swap_cols(int i, int j);
    void add_col(int dst, int src, const Int& factor);  // col[dst] += factor * col[src]
    void negate_col(int i);

    std::string str() const;  // "a b; c d" style, for diagnostics

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

// Signs of the leading principal minors; returns the 1-based index of the
// first minor that is <= 0, or 0 when all are positive.
int first_nonpositive_minor(const IntMat& m);

// Rank over Q.
int rank(const IntMat& m);

// v^T m v for symmetric m.
Int eval_quadratic(const IntMat& m, const Vec& v);

// x^T m y.
Int eval_bilinear(const IntMat& m, const Vec& x, const Vec& y);

// Column-style Hermite reduction with recorded transform: returns unimodular U
// with (m * U) = [H | 0], H lower-staircase. Kernel columns of m*U are the
// trailing zero columns; U's trailing columns are a basis of ker(m) over Z
// (saturated, since U is unimodular).
struct HnfResult {
    IntMat h;  // m * u
    IntMat u;  // unimodular
    int rank;  // number of nonzero columns of h
};
HnfResult column_hnf(const IntMat& m);

}  // namespace qflat

#endif
