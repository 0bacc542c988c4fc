#ifndef QFLAT_ENUMERATE_HPP
#define QFLAT_ENUMERATE_HPP

#include "qflat/gram.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qflat {

struct ShortEntry {
    Vec v;     // coordinates in the lattice's own basis
    Int norm;  // Q(v)
};

// Complete list of nonzero vectors with Q(v) <= bound, one of {v, -v} each
// (first nonzero coordinate positive), sorted by (norm, lexicographic coords).
struct ShortVectorList {
    Int bound;
    std::vector<ShortEntry> entries;
};

// A lattice split along its Gram block structure. Orthogonal sums built by
// direct_sum split back into their parts here, which keeps enumeration
// feasible for sums of many small blocks: a vector of norm <= B can only
// touch components whose minimum is <= B.
class Assembly {
  public:
    explicit Assembly(const Lattice& l);
    explicit Assembly(std::vector<Lattice> components);

    int rank() const { return rank_; }
    int components() const { return static_cast<int>(parts_.size()); }
    const Lattice& component(int i) const { return parts_[i].lat; }
    const std::vector<int>& component_coords(int i) const { return parts_[i].idx; }

    const Int& component_min(int i) const;  // mu_1 of component i

    Int norm(const Vec& v) const;
    Int inner(const Vec& x, const Vec& y) const;

    ShortVectorList short_vectors(const Int& bound, Budget& budget) const;
    std::vector<ShortEntry> vectors_of_norm(const Int& n, Budget& budget) const;

    // Witness search with early exit; nullopt only after exhausting the tree.
    std::optional<Vec> find_vector_of_norm(const Int& n, Budget& budget) const;

  private:
    struct Part {
        Lattice lat;
        std::vector<int> idx;  // coordinates of this block in the parent
        mutable std::shared_ptr<struct DenseEngine> engine;
    };

    struct DenseEngine& engine(int i) const;
    template <typename Leaf>
    void compose(const Int& bound, bool exact, Budget& budget, const Leaf& leaf) const;

    std::vector<Part> parts_;
    std::vector<int> by_min_;  // component order of ascending minimum
    int rank_ = 0;
    mutable bool order_ready_ = false;
    void ensure_order() const;
};

ShortVectorList short_vectors(const Lattice& l, const Int& bound, Budget& budget);
ShortVectorList short_vectors(const Lattice& l, const Int& bound);  // default budget
std::vector<ShortEntry> vectors_of_norm(const Lattice& l, const Int& n, Budget& budget);
std::vector<ShortEntry> vectors_of_norm(const Lattice& l, const Int& n);

struct MinimaProfile {
    std::vector<Int> minima;  // mu_1 <= ... <= mu_rank
};

MinimaProfile successive_minima(const Lattice& l, Budget& budget);
MinimaProfile successive_minima(const Lattice& l);

Int min_norm(const Lattice& l);  // mu_1

}  // namespace qflat

#endif
