#include "qflat/enumerate.hpp"

#include "qflat/reduce.hpp"

#include <algorithm>
#include <map>

namespace qflat {

namespace {

bool lex_less(const Vec& x, const Vec& y) {
    for (size_t i = 0; i < x.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool entry_less(const ShortEntry& x, const ShortEntry& y) {
    int c = cmp(x.norm, y.norm);
    if (c != 0) return c < 0;
    return lex_less(x.v, y.v);
}

bool sign_canonical(const Vec& v) {
    for (const Int& x : v) {
        if (x != 0) return x > 0;
    }
    return false;  // zero vector, excluded anyway
}

void negate(Vec& v) {
    for (Int& x : v) x = -x;
}

// sqrt of a nonnegative rational when it is rational, else nullopt
std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (!is_square(num) || !is_square(den)) return std::nullopt;
    return Rat(isqrt(num), isqrt(den));
}

}  // namespace

// Exact quadratic completion Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2
// of a positive definite Gram matrix.
struct Ldl {
    int n = 0;
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> u;

    explicit Ldl(const IntMat& g) {
        n = g.rows();
        std::vector<std::vector<Rat>> a(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = Rat(g.at(i, j));
        d.resize(static_cast<size_t>(n));
        u.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i) {
            d[i] = a[i][i];
            if (d[i] <= 0) throw NotPositiveDefinite("gram not positive definite in ldl", i + 1);
            for (int j = i + 1; j < n; ++j) u[i][j] = a[i][j] / d[i];
            for (int j = i + 1; j < n; ++j)
                for (int k = j; k < n; ++k) a[j][k] -= d[i] * u[i][j] * u[i][k];
        }
    }
};

// Per-block enumeration engine: LLL-reduced copy of the Gram plus its exact
// completion; results are mapped back to the block's own coordinates.
struct DenseEngine {
    Lattice lat;       // original block
    IntMat transform;  // unimodular, transform^T G transform = reduced
    std::unique_ptr<Ldl> ldl;
    Int mu1 = 0;
    bool mu1_known = false;

    Int cached_bound = -1;  // widest ball computed so far
    std::vector<ShortEntry> cache;

    explicit DenseEngine(const Lattice& l) : lat(l) {
        if (lat.rank() >= 3) {
            LllResult r = lll_reduce(lat);
            transform = r.transform;
            ldl = std::make_unique<Ldl>(r.reduced.gram().mat());
        } else {
            transform = IntMat::identity(lat.rank());
            ldl = std::make_unique<Ldl>(lat.gram().mat());
        }
    }

    // complete ball, sign-normalized, sorted by (norm, lex)
    const std::vector<ShortEntry>& list(const Int& bound, Budget& budget) {
        if (cached_bound < bound) {
            cache = ball(bound, budget);
            cached_bound = bound;
        }
        return cache;
    }

    const Int& minimum(Budget& budget) {
        if (!mu1_known) {
            Int b = lat.at(0, 0);
            for (int i = 1; i < lat.rank(); ++i) b = std::min(b, lat.at(i, i));
            const auto& l = list(b, budget);
            mu1 = l.empty() ? b : l.front().norm;
            mu1_known = true;
        }
        return mu1;
    }

    std::vector<ShortEntry> ball(const Int& bound, Budget& budget) const {
        std::vector<ShortEntry> out;
        int n = ldl->n;
        if (n == 0 || bound < 0) return out;
        Vec x(static_cast<size_t>(n));
        Rat limit(bound);
        ball_level(n - 1, Rat(0), x, limit, budget, out);
        for (auto& e : out)
            if (!sign_canonical(e.v)) negate(e.v);
        std::sort(out.begin(), out.end(), entry_less);
        out.erase(std::unique(out.begin(), out.end(),
                              [](const ShortEntry& a, const ShortEntry& b) { return a.v == b.v; }),
                  out.end());
        return out;
    }

    // complete shell of norm exactly n; the last coordinate is solved, not
    // scanned, so the tree is one dimension smaller than the ball's. Output
    // contains both v and -v; callers pick the signs they need.
    std::vector<ShortEntry> shell(const Int& n, Budget& budget, bool first_only = false) const {
        std::vector<ShortEntry> out;
        if (ldl->n == 0 || n <= 0) return out;
        Vec x(static_cast<size_t>(ldl->n));
        shell_level(ldl->n - 1, Rat(0), x, Rat(n), n, budget, out, first_only);
        return out;
    }

  private:
    void ball_level(int i, const Rat& partial, Vec& x, const Rat& limit, Budget& budget,
                    std::vector<ShortEntry>& out) const {
        Rat c(0);
        for (int j = i + 1; j < ldl->n; ++j)
            if (x[static_cast<size_t>(j)] != 0) c += ldl->u[i][j] * Rat(x[static_cast<size_t>(j)]);
        Int x0 = round_rat(-c);
        for (int dir = 0; dir < 2; ++dir) {
            Int xi = dir == 0 ? x0 : x0 + 1;
            Int step = dir == 0 ? -1 : 1;
            while (true) {
                budget.spend();
                Rat t = Rat(xi) + c;
                Rat val = partial + ldl->d[i] * t * t;
                if (val > limit) break;
                x[static_cast<size_t>(i)] = xi;
                if (i == 0)
                    emit(x, out);
                else
                    ball_level(i - 1, val, x, limit, budget, out);
                xi += step;
            }
        }
        x[static_cast<size_t>(i)] = 0;
    }

    void shell_level(int i, const Rat& partial, Vec& x, const Rat& limit, const Int& n,
                     Budget& budget, std::vector<ShortEntry>& out, bool first_only) const {
        Rat c(0);
        for (int j = i + 1; j < ldl->n; ++j)
            if (x[static_cast<size_t>(j)] != 0) c += ldl->u[i][j] * Rat(x[static_cast<size_t>(j)]);
        if (i == 0) {
            budget.spend();
            // d0 (x0 + c)^2 = n - partial
            auto s = rat_sqrt((Rat(n) - partial) / ldl->d[0]);
            if (!s) return;
            for (int sign = 0; sign < (*s == 0 ? 1 : 2); ++sign) {
                Rat x0 = (sign == 0 ? *s : -*s) - c;
                if (x0.get_den() != 1) continue;
                x[0] = x0.get_num();
                emit(x, out, &n);
                if (first_only && !out.empty()) return;
            }
            x[0] = 0;
            return;
        }
        Int x0 = round_rat(-c);
        for (int dir = 0; dir < 2; ++dir) {
            Int xi = dir == 0 ? x0 : x0 + 1;
            Int step = dir == 0 ? -1 : 1;
            while (true) {
                budget.spend();
                Rat t = Rat(xi) + c;
                Rat val = partial + ldl->d[i] * t * t;
                if (val > limit) break;
                x[static_cast<size_t>(i)] = xi;
                shell_level(i - 1, val, x, limit, n, budget, out, first_only);
                if (first_only && !out.empty()) return;
                xi += step;
            }
        }
        x[static_cast<size_t>(i)] = 0;
    }

    void emit(const Vec& xr, std::vector<ShortEntry>& out, const Int* expect = nullptr) const {
        bool zero = true;
        for (const Int& v : xr)
            if (v != 0) {
                zero = false;
                break;
            }
        if (zero) return;
        Vec orig = transform.mul(xr);
        Int q = lat.norm(orig);  // integer re-evaluation of the candidate
        if (expect && q != *expect) throw Error("shell enumeration produced a wrong norm");
        out.push_back(ShortEntry{std::move(orig), std::move(q)});
    }
};

Assembly::Assembly(const Lattice& l) {
    rank_ = l.rank();
    // connected components of the nonzero off-diagonal pattern
    std::vector<int> root(static_cast<size_t>(rank_));
    for (int i = 0; i < rank_; ++i) root[static_cast<size_t>(i)] = i;
    auto find = [&](int i) {
        while (root[static_cast<size_t>(i)] != i)
            i = root[static_cast<size_t>(i)] = root[static_cast<size_t>(root[static_cast<size_t>(i)])];
        return i;
    };
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (l.at(i, j) != 0) root[static_cast<size_t>(find(i))] = find(j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < rank_; ++i) groups[find(i)].push_back(i);
    for (auto& [r, idx] : groups) {
        IntMat g(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b)
                g.at(static_cast<int>(a), static_cast<int>(b)) = l.at(idx[a], idx[b]);
        parts_.push_back(Part{Lattice(GramMatrix::trusted(std::move(g))), idx, nullptr});
    }
    std::sort(parts_.begin(), parts_.end(),
              [](const Part& a, const Part& b) { return a.idx.front() < b.idx.front(); });
}

Assembly::Assembly(std::vector<Lattice> components) {
    rank_ = 0;
    for (auto& c : components) {
        std::vector<int> idx(static_cast<size_t>(c.rank()));
        for (int i = 0; i < c.rank(); ++i) idx[static_cast<size_t>(i)] = rank_ + i;
        rank_ += c.rank();
        parts_.push_back(Part{std::move(c), std::move(idx), nullptr});
    }
}

DenseEngine& Assembly::engine(int i) const {
    if (!parts_[static_cast<size_t>(i)].engine)
        parts_[static_cast<size_t>(i)].engine =
            std::make_shared<DenseEngine>(parts_[static_cast<size_t>(i)].lat);
    return *parts_[static_cast<size_t>(i)].engine;
}

const Int& Assembly::component_min(int i) const {
    Budget b(Budget::default_limit());
    return engine(i).minimum(b);
}

void Assembly::ensure_order() const {
    if (order_ready_) return;
    auto* self = const_cast<Assembly*>(this);
    self->by_min_.resize(parts_.size());
    for (size_t i = 0; i < parts_.size(); ++i) self->by_min_[i] = static_cast<int>(i);
    std::sort(self->by_min_.begin(), self->by_min_.end(), [&](int a, int b) {
        int c = cmp(component_min(a), component_min(b));
        if (c != 0) return c < 0;
        return a < b;
    });
    self->order_ready_ = true;
}

Int Assembly::norm(const Vec& v) const {
    return inner(v, v);
}

Int Assembly::inner(const Vec& x, const Vec& y) const {
    Int s = 0;
    for (const auto& p : parts_) {
        int pr = static_cast<int>(p.idx.size());
        for (int a = 0; a < pr; ++a) {
            const Int& xa = x[static_cast<size_t>(p.idx[static_cast<size_t>(a)])];
            if (xa == 0) continue;
            Int row = 0;
            for (int b = 0; b < pr; ++b) {
                const Int& yb = y[static_cast<size_t>(p.idx[static_cast<size_t>(b)])];
                if (yb != 0) row += p.lat.at(a, b) * yb;
            }
            s += xa * row;
        }
    }
    return s;
}

namespace {

struct PlaceGuard {
    Vec& coords;
    const std::vector<int>& idx;
    void place(const Vec& v, bool neg) {
        for (size_t k = 0; k < idx.size(); ++k)
            coords[static_cast<size_t>(idx[k])] = neg ? Int(-v[k]) : v[k];
    }
    void clear() {
        for (int c : idx) coords[static_cast<size_t>(c)] = 0;
    }
};

}  // namespace

// Ball walk: every nonzero combination of per-component vectors with total
// norm <= bound; leaf returns false to stop.
template <typename Leaf>
void Assembly::compose(const Int& bound, bool exact, Budget& budget, const Leaf& leaf) const {
    if (bound < (exact ? 1 : 0)) return;
    ensure_order();
    int m = static_cast<int>(parts_.size());
    Vec coords(static_cast<size_t>(rank_));
    bool stop = false;

    auto rec = [&](auto&& self, int pos, Int rem, bool first, const Int& used) -> void {
        if (stop) return;
        if (!exact && !first) {
            if (!leaf(coords, used)) {
                stop = true;
                return;
            }
        }
        for (int t = pos; t < m && !stop; ++t) {
            int part = by_min_[static_cast<size_t>(t)];
            if (component_min(part) > rem) break;  // ascending minima
            PlaceGuard pg{coords, parts_[static_cast<size_t>(part)].idx};
            if (exact) {
                // close the vector here: this component takes all that is left
                auto solutions = engine(part).shell(rem, budget, false);
                for (const auto& e : solutions) {
                    if (stop) break;
                    if (first && !sign_canonical(e.v)) continue;
                    budget.spend();
                    pg.place(e.v, false);
                    if (!leaf(coords, used + e.norm)) stop = true;
                }
                pg.clear();
                if (stop) break;
                if (t + 1 >= m) continue;  // nothing after this component
            }
            const auto& lst = engine(part).list(rem, budget);
            for (const auto& e : lst) {
                if (exact ? e.norm >= rem : e.norm > rem) break;
                budget.spend();
                int signs = first ? 1 : 2;
                for (int s = 0; s < signs && !stop; ++s) {
                    pg.place(e.v, s == 1);
                    self(self, t + 1, rem - e.norm, false, used + e.norm);
                }
                pg.clear();
                if (stop) break;
            }
        }
    };
    rec(rec, 0, bound, true, Int(0));
}

ShortVectorList Assembly::short_vectors(const Int& bound, Budget& budget) const {
    ShortVectorList out;
    out.bound = bound;
    compose(bound, false, budget, [&](const Vec& v, const Int& n) {
        Vec w = v;
        if (!sign_canonical(w)) negate(w);
        out.entries.push_back(ShortEntry{std::move(w), n});
        return true;
    });
    std::sort(out.entries.begin(), out.entries.end(), entry_less);
    return out;
}

std::vector<ShortEntry> Assembly::vectors_of_norm(const Int& n, Budget& budget) const {
    std::vector<ShortEntry> out;
    if (n <= 0) return out;
    compose(n, true, budget, [&](const Vec& v, const Int& q) {
        Vec w = v;
        if (!sign_canonical(w)) negate(w);
        out.push_back(ShortEntry{std::move(w), q});
        return true;
    });
    std::sort(out.begin(), out.end(), entry_less);
    return out;
}

std::optional<Vec> Assembly::find_vector_of_norm(const Int& n, Budget& budget) const {
    if (n == 0) return Vec(static_cast<size_t>(rank_));
    if (n < 0) return std::nullopt;
    std::optional<Vec> found;
    compose(n, true, budget, [&](const Vec& v, const Int&) {
        Vec w = v;
        if (!sign_canonical(w)) negate(w);
        found = std::move(w);
        return false;
    });
    return found;
}

ShortVectorList short_vectors(const Lattice& l, const Int& bound, Budget& budget) {
    return Assembly(l).short_vectors(bound, budget);
}

ShortVectorList short_vectors(const Lattice& l, const Int& bound) {
    Budget b;
    return short_vectors(l, bound, b);
}

std::vector<ShortEntry> vectors_of_norm(const Lattice& l, const Int& n, Budget& budget) {
    return Assembly(l).vectors_of_norm(n, budget);
}

std::vector<ShortEntry> vectors_of_norm(const Lattice& l, const Int& n) {
    Budget b;
    return vectors_of_norm(l, n, b);
}

MinimaProfile successive_minima(const Lattice& l, Budget& budget) {
    if (l.rank() == 0) return MinimaProfile{};
    Int bound = l.at(0, 0);
    for (int i = 1; i < l.rank(); ++i) bound = std::max(bound, l.at(i, i));
    // the basis vectors are independent with norms = diagonal, so every
    // successive minimum is at most max(diagonal)
    ShortVectorList sv = short_vectors(l, bound, budget);
    MinimaProfile mp;
    IntMat chosen(l.rank(), l.rank());
    int r = 0;
    for (const auto& e : sv.entries) {
        IntMat trial = chosen;
        for (int j = 0; j < l.rank(); ++j) trial.at(r, j) = e.v[static_cast<size_t>(j)];
        if (rank(trial) > r) {
            chosen = trial;
            ++r;
            mp.minima.push_back(e.norm);
            if (r == l.rank()) break;
        }
    }
    return mp;
}

MinimaProfile successive_minima(const Lattice& l) {
    Budget b;
    return successive_minima(l, b);
}

Int min_norm(const Lattice& l) {
    Assembly a(l);
    Int m = -1;
    for (int i = 0; i < a.components(); ++i) {
        const Int& c = a.component_min(i);
        if (m < 0 || c < m) m = c;
    }
    return m;
}

}  // namespace qflat
