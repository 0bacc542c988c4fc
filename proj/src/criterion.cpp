#include "qflat/criterion.hpp"

#include "qflat/enumerate.hpp"
#include "qflat/reduce.hpp"
#include "qflat/represent.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace qflat {

IntegerSet IntegerSet::naturals() {
    IntegerSet s;
    s.naturals_ = true;
    return s;
}

IntegerSet IntegerSet::finite(std::vector<Int> elements) {
    IntegerSet s;
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] <= 0) throw PreconditionFailed("set elements must be positive");
        if (i > 0 && elements[i] <= elements[i - 1])
            throw PreconditionFailed("set elements must be strictly increasing");
    }
    s.elems_ = std::move(elements);
    return s;
}

bool IntegerSet::has_element(size_t i) const {
    return naturals_ || i < elems_.size();
}

Int IntegerSet::element(size_t i) const {
    if (naturals_) return Int(static_cast<long>(i) + 1);
    if (i >= elems_.size()) throw PreconditionFailed("set has no element of that index");
    return elems_[i];
}

bool IntegerSet::contains(const Int& v) const {
    if (v <= 0) return false;
    if (naturals_) return true;
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::vector<Int> IntegerSet::elements_upto(const Int& bound) const {
    std::vector<Int> out;
    if (naturals_) {
        for (Int v = 1; v <= bound; ++v) out.push_back(v);
    } else {
        for (const Int& v : elems_) {
            if (v > bound) break;
            out.push_back(v);
        }
    }
    return out;
}

std::string IntegerSet::str() const {
    if (naturals_) return "naturals";
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << elems_[i];
    os << "}";
    return os.str();
}

Lattice psd_quotient(const IntMat& gram) {
    HnfResult h = column_hnf(gram);
    int r = h.rank;
    // u^T g u is block-diagonal: kernel columns of u pair to zero against
    // everything, so the leading r x r block is the quotient Gram.
    IntMat gu = gram.mul(h.u);
    IntMat full = h.u.transpose().mul(gu);
    IntMat q(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) q.at(i, j) = full.at(i, j);
    return make_lattice(q);
}

std::array<Int, 4> four_squares(const Int& n) {
    if (n < 0) throw PreconditionFailed("four_squares needs n >= 0");
    for (Int x = isqrt(n); x >= 0; --x) {
        Int r1 = n - x * x;
        for (Int y = isqrt(r1); y * y * 2 >= r1 && y >= 0; --y) {
            Int r2 = r1 - y * y;
            for (Int z = isqrt(r2); z * z * 2 >= r2 && z >= 0; --z) {
                Int r3 = r2 - z * z;
                if (is_square(r3)) return {x, y, z, isqrt(r3)};
            }
        }
    }
    throw Error("four-square decomposition not found");  // unreachable (Lagrange)
}

// --- escalation search --------------------------------------------------------

namespace {

// Skipped LDL data for the current partial Gram: pivot columns carry the
// quadratic completion, dependent columns carry their rational expression
// over the pivots.
struct Decomp {
    std::vector<int> pivots;
    std::vector<Rat> d;                                // per pivot position
    std::vector<std::vector<Rat>> u;                   // ucoef(s,t) for pivot positions s < t
    std::vector<std::optional<std::vector<Rat>>> dep;  // per column, coords over pivots

    // u[s] holds coefficients for pivot positions s+1, s+2, ... in order
    const Rat& ucoef(size_t s, size_t t) const { return u[s][t - s - 1]; }

    explicit Decomp(const IntMat& g) {
        int n = g.rows();
        dep.resize(static_cast<size_t>(n));
        for (int t = 0; t < n; ++t) {
            size_t np = pivots.size();
            std::vector<Rat> w(np);
            for (size_t s = 0; s < np; ++s) {
                Rat ws(g.at(pivots[s], t));
                for (size_t s2 = 0; s2 < s; ++s2) ws -= ucoef(s2, s) * w[s2];
                w[s] = ws;
            }
            Rat proj(0);
            for (size_t s = 0; s < np; ++s) proj += w[s] * w[s] / d[s];
            Rat q = Rat(g.at(t, t)) - proj;
            if (q < 0) throw Error("gram not positive semidefinite in decomp");
            if (q == 0) {
                // alpha = U^{-1} D^{-1} w
                std::vector<Rat> alpha(np);
                for (size_t s = np; s-- > 0;) {
                    Rat a = w[s] / d[s];
                    for (size_t s2 = s + 1; s2 < np; ++s2) a -= ucoef(s, s2) * alpha[s2];
                    alpha[s] = a;
                }
                dep[static_cast<size_t>(t)] = std::move(alpha);
            } else {
                for (size_t s = 0; s < np; ++s) u[s].push_back(w[s] / d[s]);
                u.emplace_back();
                d.push_back(q);
                pivots.push_back(t);
            }
        }
    }
};

struct Escalation {
    std::vector<Int> norms;  // s_0 .. s_{i-1}
    Int target;              // s_i
    Budget& budget;

    IntMat gram;
    std::optional<Lattice> witness;

    // isometry-memo of fully explored witness-free subtrees, keyed by depth
    struct MemoEntry {
        Int disc;
        std::vector<Int> theta;
        Lattice lat;
    };
    std::vector<std::vector<MemoEntry>> memo;  // per depth

    Escalation(std::vector<Int> ns, Int tgt, Budget& b)
        : norms(std::move(ns)), target(std::move(tgt)), budget(b) {
        int n = static_cast<int>(norms.size());
        gram = IntMat(n, n);
        for (int i = 0; i < n; ++i) gram.at(i, i) = norms[static_cast<size_t>(i)];
        memo.resize(norms.size() + 1);
    }

    std::vector<Int> theta_prefix(const Lattice& l) {
        Budget local(1u << 22);
        ShortVectorList sv = short_vectors(l, target, local);
        std::vector<Int> counts(static_cast<size_t>(target.get_si()) + 1, Int(0));
        for (const auto& e : sv.entries) ++counts[static_cast<size_t>(e.norm.get_si())];
        return counts;
    }

    bool memo_hit(int depth, const Lattice& q, const std::vector<Int>& theta) {
        for (const auto& m : memo[static_cast<size_t>(depth)]) {
            if (m.lat.rank() != q.rank() || m.disc != q.disc() || m.theta != theta) continue;
            Budget local(1u << 22);
            try {
                if (is_isometric(m.lat, q, local)) return true;
            } catch (const BudgetExceeded&) {
            }
        }
        return false;
    }

    // dfs over rows; depth = number of vectors already placed
    bool run() { return row_done(0); }

    bool row_done(int depth) {
        int n = static_cast<int>(norms.size());
        // quotient of the current partial gram
        IntMat sub(depth, depth);
        for (int i = 0; i < depth; ++i)
            for (int j = 0; j < depth; ++j) sub.at(i, j) = gram.at(i, j);
        Lattice q = psd_quotient(sub);
        {
            Budget local(1u << 22);
            if (Assembly(q).find_vector_of_norm(target, local)) return false;  // prune
        }
        if (depth == n) {
            witness = q;
            return true;
        }
        std::vector<Int> theta = theta_prefix(q);
        if (memo_hit(depth, q, theta)) return false;
        Decomp dec(sub);
        std::vector<Int> row(static_cast<size_t>(depth));
        if (fill_row(depth, dec, row, 0, {}, Rat(0), true)) return true;
        memo[static_cast<size_t>(depth)].push_back(
            MemoEntry{q.disc(), std::move(theta), std::move(q)});
        return false;
    }

    // choose entries of row `depth` column by column; w = partial forward solve
    bool fill_row(int depth, const Decomp& dec, std::vector<Int>& row, int t, std::vector<Rat> w,
                  Rat proj, bool all_zero) {
        if (t == depth) {
            for (int j = 0; j < depth; ++j) {
                gram.at(depth, j) = row[static_cast<size_t>(j)];
                gram.at(j, depth) = row[static_cast<size_t>(j)];
            }
            return row_done(depth + 1);
        }
        const Int& sj = norms[static_cast<size_t>(depth)];
        if (dec.dep[static_cast<size_t>(t)]) {
            const auto& alpha = *dec.dep[static_cast<size_t>(t)];
            Rat forced(0);
            for (size_t s = 0; s < alpha.size(); ++s)
                forced += alpha[s] * Rat(row[static_cast<size_t>(dec.pivots[s])]);
            if (forced.get_den() != 1) return false;
            row[static_cast<size_t>(t)] = forced.get_num();
            return fill_row(depth, dec, row, t + 1, std::move(w), std::move(proj), all_zero);
        }
        size_t s = w.size();  // this column's pivot position
        Rat offset(0);
        for (size_t s2 = 0; s2 < s; ++s2) offset += dec.ucoef(s2, s) * w[s2];
        // feasible window of integer values around the minimizer of proj growth
        Rat room = Rat(sj) - proj;
        auto feasible = [&](const Int& v) {
            Rat ws = Rat(v) - offset;
            return ws * ws <= room * dec.d[s];
        };
        Int center = round_rat(offset);
        if (!feasible(center)) return false;
        Int lo = center, hi = center;
        while (feasible(lo - 1)) --lo;
        while (feasible(hi + 1)) ++hi;
        // visit by |value| ascending, positive first; skip negatives while the
        // row is still all zero (sign-normalized escalation vectors)
        std::vector<Int> vals;
        Int maxabs = std::max(abs(lo), abs(hi));
        for (Int m = 0; m <= maxabs; ++m) {
            if (m >= lo && m <= hi) vals.push_back(m);
            if (m > 0 && !all_zero) {
                Int neg = -m;
                if (neg >= lo && neg <= hi) vals.push_back(neg);
            }
        }
        for (const Int& v : vals) {
            budget.spend();
            Rat ws = Rat(v) - offset;
            std::vector<Rat> w2 = w;
            w2.push_back(ws);
            Rat proj2 = proj + ws * ws / dec.d[s];
            row[static_cast<size_t>(t)] = v;
            if (fill_row(depth, dec, row, t + 1, std::move(w2), std::move(proj2),
                         all_zero && v == 0))
                return true;
        }
        row[static_cast<size_t>(t)] = 0;
        return false;
    }
};

}  // namespace

TruantOutcome find_truant_witness(const IntegerSet& s, size_t i, Budget& budget) {
    TruantOutcome out;
    out.index = i;
    out.value = s.element(i);
    if (i == 0) {
        // the empty lattice represents no positive integer
        out.status = TruantStatus::witness_found;
        out.certificate = TruantCertificate{0, out.value, Lattice()};
        out.nodes = 0;
        return out;
    }
    std::vector<Int> norms;
    for (size_t j = 0; j < i; ++j) norms.push_back(s.element(j));
    Escalation esc(norms, out.value, budget);
    unsigned long long before = budget.used();
    try {
        if (esc.run()) {
            const Lattice& w = *esc.witness;
            // independent re-verification of the certificate
            Budget ver(1u << 26);
            Assembly aw(w);
            for (const Int& n : norms)
                if (!aw.find_vector_of_norm(n, ver))
                    throw Error("truant witness fails to represent an earlier element");
            if (aw.find_vector_of_norm(out.value, ver))
                throw Error("truant witness represents the truant value");
            out.status = TruantStatus::witness_found;
            out.certificate = TruantCertificate{i, out.value, w};
        } else {
            out.status = TruantStatus::space_exhausted;
        }
    } catch (const BudgetExceeded&) {
        out.status = TruantStatus::budget_exhausted;
    }
    out.nodes = budget.used() - before;
    return out;
}

std::vector<TruantOutcome> truant_prefix(const IntegerSet& s, size_t upto,
                                         unsigned long long budget_per_index) {
    std::vector<TruantOutcome> out;
    for (size_t i = 0; i <= upto && s.has_element(i); ++i) {
        Budget b(budget_per_index);
        out.push_back(find_truant_witness(s, i, b));
    }
    return out;
}

// --- excluder ------------------------------------------------------------------

ExcluderResult build_excluder(const Lattice& ell, const IntegerSet& s, size_t k,
                              const Int& verify_bound, Budget& budget) {
    if (!s.has_element(k + 1))
        throw PreconditionFailed("the construction needs an element s_{k+1}");
    Assembly aell(ell);
    for (size_t j = 0; j < k; ++j)
        if (!aell.find_vector_of_norm(s.element(j), budget))
            throw PreconditionFailed("base lattice misses s_" + std::to_string(j) + " = " +
                                     s.element(j).get_str());
    Int sk = s.element(k);
    if (aell.find_vector_of_norm(sk, budget))
        throw PreconditionFailed("base lattice represents s_k = " + sk.get_str());

    ExcluderRecipe recipe;
    recipe.base = ell;
    recipe.k = k;
    recipe.modulus = s.element(k + 1);
    const Int& mod = recipe.modulus;

    // classes u mod s_{k+1} met by the tail {s_{k+1}, s_{k+2}, ...} and the
    // least tail element in each class
    if (s.is_naturals()) {
        for (Int u = 0; u < mod; ++u) {
            recipe.residues.push_back(u);
            Int c = mod_nonneg(u - mod, mod);
            recipe.mins.push_back(mod + c);
        }
    } else {
        std::vector<std::optional<Int>> first(static_cast<size_t>(mod.get_si()));
        for (size_t j = k + 1; s.has_element(j); ++j) {
            Int v = s.element(j);
            size_t u = static_cast<size_t>(mod_nonneg(v, mod).get_si());
            if (!first[u]) first[u] = v;
        }
        for (size_t u = 0; u < first.size(); ++u)
            if (first[u]) {
                recipe.residues.push_back(Int(static_cast<long>(u)));
                recipe.mins.push_back(*first[u]);
            }
    }

    Lattice i4scaled = scale(cubic_lattice(4), mod);
    recipe.result = direct_sum({ell, i4scaled, diag_lattice(recipe.mins)});

    ExcluderResult res;
    res.recipe = recipe;
    res.verify_bound = verify_bound;
    res.pass = true;

    Assembly target(recipe.result);
    // s_k must stay missing (exhaustive; nothing above s_k can contribute)
    if (target.find_vector_of_norm(sk, budget)) {
        res.pass = false;
        res.detail = "excluder represents s_k = " + sk.get_str();
        return res;
    }
    int ell_rank = ell.rank();
    for (const Int& v : s.elements_upto(verify_bound)) {
        if (v == sk) continue;
        if (v < sk) {
            if (!target.find_vector_of_norm(v, budget)) {
                res.pass = false;
                res.detail = "element " + v.get_str() + " not represented";
                return res;
            }
            continue;
        }
        // v >= s_{k+1}: witness by construction, v = s_{k+1} * M + s(c_j)
        size_t u = 0;
        bool found = false;
        Int vres = mod_nonneg(v, mod);
        for (size_t j = 0; j < recipe.residues.size(); ++j)
            if (recipe.residues[j] == vres && recipe.mins[j] <= v) {
                u = j;
                found = true;
                break;
            }
        if (!found) {
            res.pass = false;
            res.detail = "no residue class witness for " + v.get_str();
            return res;
        }
        Int m = (v - recipe.mins[u]) / mod;
        auto sq = four_squares(m);
        Vec w(static_cast<size_t>(recipe.result.rank()));
        for (int t = 0; t < 4; ++t) w[static_cast<size_t>(ell_rank + t)] = sq[static_cast<size_t>(t)];
        w[static_cast<size_t>(ell_rank + 4 + static_cast<int>(u))] = 1;
        if (recipe.result.norm(w) != v) {
            res.pass = false;
            res.detail = "constructed witness for " + v.get_str() + " has wrong norm";
            return res;
        }
    }
    return res;
}

GadgetsResult verify_theorem23_gadgets(int k, Budget& budget) {
    if (k < 2) throw PreconditionFailed("verify_theorem23_gadgets needs k >= 2");
    GadgetsResult res;
    auto check = [&](int i, const Lattice& m, const Int& lo, const Int& hi, const Int& miss) {
        GadgetCheck c{i, true, ""};
        Assembly am(m);
        for (Int v = lo; v <= hi; ++v)
            if (!am.find_vector_of_norm(v, budget)) {
                c.pass = false;
                c.detail = "gadget misses " + v.get_str();
                break;
            }
        if (c.pass && am.find_vector_of_norm(miss, budget)) {
            c.pass = false;
            c.detail = "gadget represents " + miss.get_str();
        }
        res.checks.push_back(c);
        res.pass = res.pass && c.pass;
    };
    check(1, diag_lattice({Int(k + 2)}), Int(1), Int(0), Int(k + 1));  // only the miss matters
    for (int i = 2; i <= k; ++i) {
        std::vector<Int> d;
        for (int j = 1; j <= i - 1; ++j) d.push_back(Int(k + j));
        check(i, diag_lattice(d), Int(k + 1), Int(k + i - 1), Int(k + i));
    }
    return res;
}

}  // namespace qflat
