#include "qflat/intmat.hpp"

#include <sstream>
#include <utility>

namespace qflat {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.resize(static_cast<size_t>(rows_) * cols_);
    int i = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw ParseError("jagged initializer matrix");
        int j = 0;
        for (long v : r) at(i, j++) = v;
        ++i;
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::mul(const IntMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix dimension mismatch in mul");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

Vec IntMat::mul(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("vector dimension mismatch in mul");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

bool IntMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

void IntMat::swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_col(int dst, int src, const Int& factor) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMat::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
    }
    return os.str();
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw Error("det of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = t;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

int first_nonpositive_minor(const IntMat& m) {
    // Bareiss without pivoting: pivot a(k,k) after step k equals the k+1-st
    // leading principal minor, so the sign sequence falls out directly. A zero
    // pivot means the minor is zero, which already fails positivity.
    int n = m.rows();
    IntMat a = m;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k) <= 0) return k + 1;
        if (k == n - 1) break;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = t;
            }
        prev = a.at(k, k);
    }
    return 0;
}

int rank(const IntMat& m) {
    IntMat a = m;
    int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
        for (int i = r + 1; i < rows; ++i) {
            if (a.at(i, c) == 0) continue;
            Int f = a.at(i, c), g = a.at(r, c);
            for (int j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) * g - f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

Int eval_quadratic(const IntMat& m, const Vec& v) {
    return eval_bilinear(m, v, v);
}

Int eval_bilinear(const IntMat& m, const Vec& x, const Vec& y) {
    Int s = 0;
    int n = m.rows();
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < n; ++j)
            if (y[j] != 0) row += m.at(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

HnfResult column_hnf(const IntMat& m) {
    HnfResult res{m, IntMat::identity(m.cols()), 0};
    IntMat& h = res.h;
    IntMat& u = res.u;
    int rows = h.rows(), cols = h.cols();
    int c = 0;
    for (int r = 0; r < rows && c < cols; ++r) {
        // gcd-reduce row r across columns c..cols-1
        while (true) {
            int p = -1;
            for (int j = c; j < cols; ++j)
                if (h.at(r, j) != 0) {
                    p = j;
                    break;
                }
            if (p < 0) break;
            // move a nonzero to column c, then clear the rest of the row
            if (p != c) {
                h.swap_cols(c, p);
                u.swap_cols(c, p);
            }
            bool cleared = true;
            for (int j = c + 1; j < cols; ++j) {
                if (h.at(r, j) == 0) continue;
                Int q = floor_div(h.at(r, j), h.at(r, c));
                if (q != 0) {
                    h.add_col(j, c, -q);
                    u.add_col(j, c, -q);
                }
                if (h.at(r, j) != 0) {
                    h.swap_cols(c, j);
                    u.swap_cols(c, j);
                    cleared = false;
                }
            }
            if (cleared) break;
        }
        if (h.at(r, c) != 0) {
            if (h.at(r, c) < 0) {
                h.negate_col(c);
                u.negate_col(c);
            }
            ++c;
        }
    }
    res.rank = c;
    return res;
}

}  // namespace qflat
