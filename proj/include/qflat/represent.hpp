#ifndef QFLAT_REPRESENT_HPP
#define QFLAT_REPRESENT_HPP

#include "qflat/enumerate.hpp"
#include "qflat/gram.hpp"

#include <optional>
#include <vector>

namespace qflat {

// Integer coordinate matrix witnessing source -> target: columns are the
// images of the source basis and matrix^T * Gram(target) * matrix equals
// Gram(source) exactly.
struct Embedding {
    IntMat matrix;  // target_rank x source_rank
};

// Exact re-verification of the embedding identity (inner-product form, so it
// also works for assemblies whose full Gram is never materialized).
bool verify_embedding(const Assembly& target, const Lattice& source, const IntMat& m);
bool verify_embedding(const Lattice& target, const Lattice& source, const IntMat& m);

std::optional<Vec> represents_integer(const Lattice& l, const Int& n, Budget& budget);
std::optional<Vec> represents_integer(const Lattice& l, const Int& n);
std::optional<Vec> represents_integer(const Assembly& l, const Int& n, Budget& budget);

// Complete backtracking search: source basis ordered by norm, candidate images
// drawn from vectors_of_norm(target, .) pruned by exact inner products.
// nullopt is only returned after the tree is exhausted.
std::optional<Embedding> represents_lattice(const Assembly& target, const Lattice& source,
                                            Budget& budget);
std::optional<Embedding> represents_lattice(const Lattice& target, const Lattice& source,
                                            Budget& budget);
std::optional<Embedding> represents_lattice(const Lattice& target, const Lattice& source);

struct RepresentsAll {
    bool all_represented = true;
    long first_failure = -1;  // index into sources when a failure exists
};

RepresentsAll represents_all(const Lattice& target, const std::vector<Lattice>& sources,
                             Budget& budget);

// --- binary form classes and genera ------------------------------------------

struct GenusClassList {
    Int disc;
    std::vector<FormTriple> classes;         // reduced, one per proper class
    std::vector<std::vector<int>> genera;    // partition of class indices
};

// All reduced forms of discriminant D < 0 (|b| <= a <= c, b >= 0 when |b| = a
// or a = c), partitioned into genera by the residues they represent modulo
// 8 * (odd primes of D) - the assigned-character data read off set-wise.
GenusClassList reduced_forms_of_disc(const Int& D);

// Number of classes in the genus of f.
int genus_class_count(const FormTriple& f);

// true iff some class in the genus of f represents m.
bool genus_represents(const FormTriple& f, const Int& m, Budget& budget);
bool genus_represents(const FormTriple& f, const Int& m);

}  // namespace qflat

#endif
