#ifndef QFLAT_CRITERION_HPP
#define QFLAT_CRITERION_HPP

#include "qflat/gram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qflat {

// Strictly increasing set of positive integers: a finite list, or all of N.
class IntegerSet {
  public:
    static IntegerSet naturals();
    static IntegerSet finite(std::vector<Int> elements);

    bool is_naturals() const { return naturals_; }
    bool has_element(size_t i) const;
    Int element(size_t i) const;  // s_i, 0-based
    bool contains(const Int& v) const;
    std::vector<Int> elements_upto(const Int& bound) const;
    std::string str() const;

  private:
    bool naturals_ = false;
    std::vector<Int> elems_;
};

struct TruantCertificate {
    size_t index;
    Int value;
    Lattice witness;  // represents s_0..s_{i-1}, misses s_i (both re-verified)
};

enum class TruantStatus {
    witness_found,      // certificate attached
    space_exhausted,    // full escalation space searched: s_i is not a truant
    budget_exhausted,   // no conclusion within budget
};

struct TruantOutcome {
    size_t index = 0;
    Int value;
    TruantStatus status = TruantStatus::budget_exhausted;
    std::optional<TruantCertificate> certificate;
    unsigned long long nodes = 0;
};

// Escalation search over all positive-semidefinite integer Gram matrices with
// diagonal (s_0, ..., s_{i-1}); degenerate matrices are replaced by their
// nondegenerate quotient lattice. Returns the first witness in canonical
// order that fails to represent s_i.
TruantOutcome find_truant_witness(const IntegerSet& s, size_t i, Budget& budget);

std::vector<TruantOutcome> truant_prefix(const IntegerSet& s, size_t upto,
                                         unsigned long long budget_per_index);

struct ExcluderRecipe {
    Lattice base;               // ell
    size_t k = 0;
    Int modulus;                // s_{k+1}
    std::vector<Int> residues;  // the classes C
    std::vector<Int> mins;      // s(c) per class
    Lattice result;             // ell + s_{k+1} I_4 + <s(c_1), ..., s(c_v)>
};

struct ExcluderResult {
    ExcluderRecipe recipe;
    bool pass = false;
    Int verify_bound;
    std::string detail;  // empty on pass, else the first failure
};

// Builds the excluder lattice for (S, ell, k) and verifies
// Q(result) cap S = S - {s_k} for all elements <= verify_bound.
ExcluderResult build_excluder(const Lattice& ell, const IntegerSet& s, size_t k,
                              const Int& verify_bound, Budget& budget);

struct GadgetCheck {
    int i;            // gadget index (1 for <k+2>)
    bool pass;
    std::string detail;
};

struct GadgetsResult {
    bool pass = true;
    std::vector<GadgetCheck> checks;
};

// M_1 = <k+2> misses k+1; M_i = <k+1, ..., k+i-1> represents k+1..k+i-1 and
// misses k+i, for i = 2..k.
GadgetsResult verify_theorem23_gadgets(int k, Budget& budget);

// Nondegenerate quotient of a positive-semidefinite integer Gram: the lattice
// generated by the images of the basis vectors in the quadratic space.
Lattice psd_quotient(const IntMat& gram);

// w = x^2+y^2+z^2+t^2 decomposition (Lagrange); n >= 0.
std::array<Int, 4> four_squares(const Int& n);

}  // namespace qflat

#endif
