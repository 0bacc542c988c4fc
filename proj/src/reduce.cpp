#include "qflat/reduce.hpp"

#include <sstream>

namespace qflat {

Lattice ReducedBinary::lattice() const {
    IntMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = m.at(1, 0) = b;
    m.at(1, 1) = c;
    return Lattice(GramMatrix::trusted(std::move(m)), disc());
}

std::string ReducedBinary::str() const {
    std::ostringstream os;
    os << "[" << a << " " << b << "; " << b << " " << c << "]";
    return os.str();
}

BinaryReduction reduce_binary(const Lattice& l) {
    if (l.rank() != 2) throw PreconditionFailed("reduce_binary needs a rank-2 lattice");
    Int a = l.at(0, 0), b = l.at(0, 1), c = l.at(1, 1);
    IntMat u = IntMat::identity(2);
    while (true) {
        bool changed = false;
        if (a > c) {
            std::swap(a, c);
            u.swap_cols(0, 1);
            changed = true;
        }
        Int t = round_rat(Rat(b) / Rat(a));
        if (t != 0) {
            // x2 <- x2 - t x1
            c += t * t * a - 2 * t * b;
            b -= t * a;
            u.add_col(1, 0, -t);
            changed = true;
        }
        if (!changed) break;
    }
    if (a > c) {
        std::swap(a, c);
        u.swap_cols(0, 1);
    }
    if (b < 0) {
        b = -b;
        u.negate_col(1);
    }
    return BinaryReduction{ReducedBinary{a, b, c}, std::move(u)};
}

ReducedBinary reduce_binary(const Int& a, const Int& b, const Int& c) {
    IntMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = m.at(1, 0) = b;
    m.at(1, 1) = c;
    return reduce_binary(make_lattice(m)).reduced;
}

std::vector<ReducedBinary> enumerate_reduced_binaries(const Int& max_mu2, const Int& min_mu1) {
    if (min_mu1 > max_mu2) throw PreconditionFailed("min_mu1 must be <= max_mu2");
    std::vector<ReducedBinary> out;
    for (Int a = std::max(Int(1), min_mu1); a <= max_mu2; ++a)
        for (Int c = a; c <= max_mu2; ++c)
            for (Int b = 0; 2 * b <= a; ++b) out.push_back(ReducedBinary{a, b, c});
    return out;
}

namespace {

// Gram-space Gram-Schmidt data, recomputed from scratch (ranks here are small).
struct Gso {
    std::vector<Rat> B;                  // squared lengths of the GS vectors
    std::vector<std::vector<Rat>> mu;    // mu[i][j], j < i

    explicit Gso(const IntMat& g) {
        int n = g.rows();
        B.assign(n, Rat(0));
        mu.assign(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                Rat s(g.at(i, j));
                for (int l = 0; l < j; ++l) s -= mu[i][l] * mu[j][l] * B[l];
                mu[i][j] = s / B[j];
            }
            Rat b(g.at(i, i));
            for (int l = 0; l < i; ++l) b -= mu[i][l] * mu[i][l] * B[l];
            B[i] = b;
        }
    }
};

void gram_shear(IntMat& g, int dst, int src, const Int& f) {
    // G <- E^T G E with E = I + f * e_src e_dst^T
    int n = g.rows();
    for (int i = 0; i < n; ++i) g.at(i, dst) += f * g.at(i, src);
    for (int i = 0; i < n; ++i) g.at(dst, i) += f * g.at(src, i);
}

void gram_swap(IntMat& g, int i, int j) {
    int n = g.rows();
    for (int r = 0; r < n; ++r) std::swap(g.at(r, i), g.at(r, j));
    for (int c = 0; c < n; ++c) std::swap(g.at(i, c), g.at(j, c));
}

}  // namespace

LllResult lll_reduce(const Lattice& l) {
    int n = l.rank();
    IntMat g = l.gram().mat();
    IntMat u = IntMat::identity(n);
    if (n <= 1) return LllResult{l, std::move(u)};
    const Rat delta(3, 4);
    Gso gso(g);
    int k = 1;
    while (k < n) {
        for (int j = k - 1; j >= 0; --j) {
            Int q = round_rat(gso.mu[k][j]);
            if (q != 0) {
                gram_shear(g, k, j, -q);
                u.add_col(k, j, -q);
                gso = Gso(g);
            }
        }
        if (gso.B[k] >= (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.B[k - 1]) {
            ++k;
        } else {
            gram_swap(g, k, k - 1);
            u.swap_cols(k, k - 1);
            gso = Gso(g);
            k = std::max(k - 1, 1);
        }
    }
    return LllResult{Lattice(GramMatrix::trusted(std::move(g)), l.disc()), std::move(u)};
}

}  // namespace qflat
