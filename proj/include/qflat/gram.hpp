#ifndef QFLAT_GRAM_HPP
#define QFLAT_GRAM_HPP

#include "qflat/intmat.hpp"
#include "qflat/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qflat {

// Symmetric positive-definite integer matrix. Rank 0 (the empty matrix) is
// allowed and acts as the identity for orthogonal sums.
class GramMatrix {
  public:
    GramMatrix() = default;
    explicit GramMatrix(IntMat m);  // validates symmetry and positive definiteness

    // Caller vouches for the invariants (block-diagonal assembly of validated
    // blocks, scaling by a positive integer). Skips the O(n^3) minor check.
    static GramMatrix trusted(IntMat m);

    int dim() const { return m_.rows(); }
    const Int& at(int i, int j) const { return m_.at(i, j); }
    const IntMat& mat() const { return m_; }

    bool operator==(const GramMatrix& o) const { return m_ == o.m_; }

    // true iff the ideal generated by all entries is Z (gcd of entries is 1)
    bool has_unit_scale() const;

  private:
    IntMat m_;
};

class Lattice {
  public:
    Lattice() : disc_(1) {}  // rank 0
    explicit Lattice(GramMatrix g);
    Lattice(GramMatrix g, Int known_disc);  // trusted caller (sum/scale fast paths)

    int rank() const { return gram_.dim(); }
    const GramMatrix& gram() const { return gram_; }
    const Int& at(int i, int j) const { return gram_.at(i, j); }
    const Int& disc() const { return disc_; }

    Int norm(const Vec& v) const { return eval_quadratic(gram_.mat(), v); }
    Int inner(const Vec& x, const Vec& y) const { return eval_bilinear(gram_.mat(), x, y); }

    bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

  private:
    GramMatrix gram_;
    Int disc_;
};

// Validating constructor: rejects non-square, non-symmetric and
// non-positive-definite input (reporting the failing minor index).
Lattice make_lattice(const IntMat& rows);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice scale(const Lattice& l, const Int& a);  // requires a >= 1

// Named constructors.
Lattice diag_lattice(const std::vector<Int>& d);
Lattice cubic_lattice(int n);  // I_n
enum class RootFamily { A, D };
Lattice root_lattice(RootFamily f, int n);

// Binary quadratic form a x^2 + b xy + c y^2 (b may be odd; the Gram matrix
// then has half-integer entries and is handled through the doubled form).
struct FormTriple {
    Int a, b, c;
    Int disc() const { return b * b - 4 * a * c; }
    bool positive_definite() const { return a > 0 && disc() < 0; }
    Int eval(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
    bool operator==(const FormTriple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const FormTriple& o) const;
    std::string str() const;
};

// Unit-scale Gram [[a, b/2], [b/2, c]]; requires b even.
Lattice triple_to_gram(const FormTriple& f);
// Doubled Gram [[2a, b], [b, 2c]]; always integral.
Lattice triple_to_doubled_gram(const FormTriple& f);
// Inverse of triple_to_gram.
FormTriple gram_to_triple(const Lattice& g);

// --- lattice file formats ---------------------------------------------------

// JSON: {"gram": [[...], ...]}; text: rows separated by ';', entries by spaces.
Lattice lattice_from_json(const std::string& text);
Lattice lattice_from_text(const std::string& text);
Lattice lattice_from_file(const std::string& path);  // sniffs format
std::string lattice_to_json(const Lattice& l);

}  // namespace qflat

#endif
