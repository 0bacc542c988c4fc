#ifndef QFLAT_REDUCE_HPP
#define QFLAT_REDUCE_HPP

#include "qflat/gram.hpp"
#include "qflat/intmat.hpp"

#include <optional>
#include <vector>

namespace qflat {

// Minkowski-reduced binary Gram [[a,b],[b,c]] with 0 <= 2b <= a <= c.
// One representative per isometry class; successive minima are (a, c).
struct ReducedBinary {
    Int a, b, c;

    Int disc() const { return a * c - b * b; }
    bool is_reduced() const { return b >= 0 && 2 * b <= a && a <= c && disc() > 0; }
    Lattice lattice() const;
    bool is_even() const { return mod_nonneg(a, 2) == 0 && mod_nonneg(c, 2) == 0; }

    bool operator==(const ReducedBinary& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const ReducedBinary& o) const { return !(*this == o); }
    // (a, c, b) ascending - the order golden lists are emitted in
    bool operator<(const ReducedBinary& o) const {
        if (a != o.a) return a < o.a;
        if (c != o.c) return c < o.c;
        return b < o.b;
    }
    std::string str() const;
};

struct BinaryReduction {
    ReducedBinary reduced;
    IntMat transform;  // unimodular; transform^T * G * transform = reduced gram
};

// Gauss reduction of a rank-2 positive definite Gram matrix.
BinaryReduction reduce_binary(const Lattice& l);
ReducedBinary reduce_binary(const Int& a, const Int& b, const Int& c);

// All reduced binaries with min_mu1 <= a and c <= max_mu2, sorted by (a, c, b).
std::vector<ReducedBinary> enumerate_reduced_binaries(const Int& max_mu2, const Int& min_mu1);

struct LllResult {
    Lattice reduced;
    IntMat transform;  // unimodular; transform^T * G * transform = reduced gram
};

// Exact Gram-based LLL, delta = 3/4, all arithmetic rational.
LllResult lll_reduce(const Lattice& l);

// Isometry test via embedding search: equal rank, equal discriminant and a
// representation force a unimodular witness. Defined alongside the
// representation engine.
std::optional<IntMat> is_isometric(const Lattice& a, const Lattice& b, Budget& budget);
std::optional<IntMat> is_isometric(const Lattice& a, const Lattice& b);

}  // namespace qflat

#endif
