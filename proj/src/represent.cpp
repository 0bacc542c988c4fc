#include "qflat/represent.hpp"

#include "qflat/reduce.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qflat {

bool verify_embedding(const Assembly& target, const Lattice& source, const IntMat& m) {
    int k = source.rank();
    if (m.rows() != target.rank() || m.cols() != k) return false;
    std::vector<Vec> cols(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        Vec c(static_cast<size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i) c[static_cast<size_t>(i)] = m.at(i, j);
        cols[static_cast<size_t>(j)] = std::move(c);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            if (target.inner(cols[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]) !=
                source.at(i, j))
                return false;
    return true;
}

bool verify_embedding(const Lattice& target, const Lattice& source, const IntMat& m) {
    return verify_embedding(Assembly(target), source, m);
}

std::optional<Vec> represents_integer(const Assembly& l, const Int& n, Budget& budget) {
    if (n < 0) throw PreconditionFailed("represents_integer needs n >= 0");
    return l.find_vector_of_norm(n, budget);
}

std::optional<Vec> represents_integer(const Lattice& l, const Int& n, Budget& budget) {
    Assembly a(l);
    return represents_integer(a, n, budget);
}

std::optional<Vec> represents_integer(const Lattice& l, const Int& n) {
    Budget b;
    return represents_integer(l, n, b);
}

namespace {

struct EmbedSearch {
    const Assembly& target;
    const Lattice& source;
    Budget& budget;
    std::vector<int> order;                      // source indices, ascending norm
    std::map<Int, std::vector<ShortEntry>> cand; // candidate images per norm
    std::vector<Vec> images;                     // images for order[0..j-1]

    EmbedSearch(const Assembly& t, const Lattice& s, Budget& b) : target(t), source(s), budget(b) {
        int k = source.rank();
        order.resize(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) order[static_cast<size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return source.at(x, x) < source.at(y, y); });
    }

    const std::vector<ShortEntry>& candidates(const Int& q) {
        auto it = cand.find(q);
        if (it == cand.end()) it = cand.emplace(q, target.vectors_of_norm(q, budget)).first;
        return it->second;
    }

    bool dfs(int j) {
        int k = source.rank();
        if (j == k) return true;
        int sj = order[static_cast<size_t>(j)];
        const auto& list = candidates(source.at(sj, sj));
        for (const auto& e : list) {
            int signs = j == 0 ? 1 : 2;
            for (int s = 0; s < signs; ++s) {
                budget.spend();
                Vec img = e.v;
                if (s) {
                    for (Int& x : img) x = -x;
                }
                bool ok = true;
                for (int i = 0; i < j && ok; ++i) {
                    int si = order[static_cast<size_t>(i)];
                    if (target.inner(images[static_cast<size_t>(i)], img) != source.at(si, sj))
                        ok = false;
                }
                if (!ok) continue;
                images.push_back(std::move(img));
                if (dfs(j + 1)) return true;
                images.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> represents_lattice(const Assembly& target, const Lattice& source,
                                            Budget& budget) {
    int k = source.rank();
    if (k == 0) return Embedding{IntMat(target.rank(), 0)};
    if (k > target.rank()) return std::nullopt;
    EmbedSearch search(target, source, budget);
    if (!search.dfs(0)) return std::nullopt;
    IntMat m(target.rank(), k);
    for (int j = 0; j < k; ++j) {
        const Vec& img = search.images[static_cast<size_t>(j)];
        int col = search.order[static_cast<size_t>(j)];
        for (int i = 0; i < target.rank(); ++i) m.at(i, col) = img[static_cast<size_t>(i)];
    }
    if (!verify_embedding(target, source, m)) throw Error("embedding failed re-verification");
    return Embedding{std::move(m)};
}

std::optional<Embedding> represents_lattice(const Lattice& target, const Lattice& source,
                                            Budget& budget) {
    Assembly a(target);
    return represents_lattice(a, source, budget);
}

std::optional<Embedding> represents_lattice(const Lattice& target, const Lattice& source) {
    Budget b;
    return represents_lattice(target, source, b);
}

RepresentsAll represents_all(const Lattice& target, const std::vector<Lattice>& sources,
                             Budget& budget) {
    Assembly a(target);
    RepresentsAll r;
    for (size_t i = 0; i < sources.size(); ++i) {
        if (!represents_lattice(a, sources[i], budget)) {
            r.all_represented = false;
            r.first_failure = static_cast<long>(i);
            return r;
        }
    }
    return r;
}

std::optional<IntMat> is_isometric(const Lattice& a, const Lattice& b, Budget& budget) {
    if (a.rank() != b.rank() || a.disc() != b.disc()) return std::nullopt;
    auto emb = represents_lattice(b, a, budget);
    if (!emb) return std::nullopt;
    // equal rank and discriminant force the witness to be unimodular
    Int d = det(emb->matrix);
    if (d != 1 && d != -1) throw Error("isometry witness is not unimodular");
    return emb->matrix;
}

std::optional<IntMat> is_isometric(const Lattice& a, const Lattice& b) {
    Budget bud;
    return is_isometric(a, b, bud);
}

// --- binary form classes and genera ------------------------------------------

namespace {

std::vector<Int> odd_prime_divisors(Int n) {
    std::vector<Int> ps;
    if (n < 0) n = -n;
    while (mod_nonneg(n, 2) == 0) n /= 2;
    for (Int p = 3; p * p <= n; p += 2) {
        if (mod_nonneg(n, p) == 0) {
            ps.push_back(p);
            while (mod_nonneg(n, p) == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Residues modulo m = 8 * (odd primes of the discriminant) that the primitive
// form represents coprime to m. Values of f modulo m are the values of f on
// (Z/m)^2, so the set is exact, and it is a genus invariant: locally
// equivalent forms take the same value sets in every Z_p.
std::set<long> coprime_residues(const FormTriple& f, long m) {
    std::set<long> res;
    long a = mpz_fdiv_ui(f.a.get_mpz_t(), static_cast<unsigned long>(m));
    long b = mpz_fdiv_ui(f.b.get_mpz_t(), static_cast<unsigned long>(m));
    long c = mpz_fdiv_ui(f.c.get_mpz_t(), static_cast<unsigned long>(m));
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            long v = (a * x % m * x + b * x % m * y + c * y % m * y) % m;
            if (std::gcd(v, m) == 1) res.insert(v);
        }
    return res;
}

struct GenusKey {
    Int content;
    long modulus;
    std::set<long> residues;
    bool operator<(const GenusKey& o) const {
        if (content != o.content) return content < o.content;
        if (modulus != o.modulus) return modulus < o.modulus;
        return residues < o.residues;
    }
    bool operator==(const GenusKey& o) const {
        return content == o.content && modulus == o.modulus && residues == o.residues;
    }
};

GenusKey genus_key(const FormTriple& f) {
    Int d;
    mpz_gcd(d.get_mpz_t(), f.a.get_mpz_t(), f.b.get_mpz_t());
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), f.c.get_mpz_t());
    FormTriple prim{f.a / d, f.b / d, f.c / d};
    Int m = 8;
    for (const Int& p : odd_prime_divisors(prim.disc())) m *= p;
    long ml = m.get_si();
    return GenusKey{d, ml, coprime_residues(prim, ml)};
}

}  // namespace

GenusClassList reduced_forms_of_disc(const Int& D) {
    if (D >= 0) throw InvalidDiscriminant("discriminant must be negative");
    Int r = mod_nonneg(D, 4);
    if (r != 0 && r != 1) throw InvalidDiscriminant("discriminant must be 0 or 1 mod 4");
    GenusClassList out;
    out.disc = D;
    for (Int b = mod_nonneg(D, 2); 3 * b * b <= -D; b += 2) {
        Int n4 = b * b - D;  // = 4ac
        Int n = n4 / 4;
        for (Int a = std::max(b, Int(1)); a * a <= n; ++a) {
            if (mod_nonneg(n, a) != 0) continue;
            Int c = n / a;
            out.classes.push_back(FormTriple{a, b, c});
            if (b > 0 && b < a && a < c) out.classes.push_back(FormTriple{a, -b, c});
        }
    }
    std::sort(out.classes.begin(), out.classes.end(), [](const FormTriple& x, const FormTriple& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.c != y.c) return x.c < y.c;
        return x.b > y.b;  // +b before -b
    });
    std::map<GenusKey, std::vector<int>> blocks;
    for (size_t i = 0; i < out.classes.size(); ++i)
        blocks[genus_key(out.classes[i])].push_back(static_cast<int>(i));
    for (auto& [k, idx] : blocks) out.genera.push_back(idx);
    std::sort(out.genera.begin(), out.genera.end());
    return out;
}

int genus_class_count(const FormTriple& f) {
    GenusClassList g = reduced_forms_of_disc(f.disc());
    GenusKey key = genus_key(f);
    for (const auto& block : g.genera)
        if (genus_key(g.classes[static_cast<size_t>(block.front())]) == key)
            return static_cast<int>(block.size());
    throw Error("form not located in its own discriminant's class list");
}

bool genus_represents(const FormTriple& f, const Int& m, Budget& budget) {
    if (!f.positive_definite()) throw PreconditionFailed("form must be positive definite");
    GenusClassList g = reduced_forms_of_disc(f.disc());
    GenusKey key = genus_key(f);
    for (const auto& block : g.genera) {
        if (!(genus_key(g.classes[static_cast<size_t>(block.front())]) == key)) continue;
        for (int ci : block) {
            const FormTriple& cls = g.classes[static_cast<size_t>(ci)];
            Assembly dbl(triple_to_doubled_gram(cls));
            if (dbl.find_vector_of_norm(2 * m, budget)) return true;
        }
        return false;
    }
    throw Error("form not located in its own discriminant's class list");
}

bool genus_represents(const FormTriple& f, const Int& m) {
    Budget b;
    return genus_represents(f, m, b);
}

}  // namespace qflat
