#include "qflat/recover.hpp"

#include "qflat/criterion.hpp"
#include "qflat/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qflat {

namespace {

Lattice block2(long a, long b, long c) {
    IntMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = m.at(1, 0) = b;
    m.at(1, 1) = c;
    return make_lattice(m);
}

}  // namespace

Lattice quinary_a() {
    return direct_sum(diag_lattice({1, 2, 3}), block2(2, 1, 5));
}

Lattice quinary_b() {
    return direct_sum(diag_lattice({1, 2, 6}), block2(2, 1, 5));
}

std::vector<ReducedBinary> known_exception_binaries() {
    auto rb = [](long a, long b, long c) { return ReducedBinary{a, b, c}; };
    return {rb(1, 0, 1),  rb(1, 0, 6),  rb(2, 1, 2),  rb(2, 1, 3),  rb(2, 1, 4),
            rb(4, 0, 6),  rb(4, 1, 4),  rb(4, 1, 13), rb(4, 2, 7),  rb(6, 0, 7),
            rb(6, 0, 10), rb(6, 3, 7),  rb(6, 3, 10), rb(7, 1, 10), rb(10, 2, 10)};
}

std::vector<ReducedBinary> recoverability_test_lattices() {
    auto rb = [](long a, long b, long c) { return ReducedBinary{a, b, c}; };
    return {rb(2, 1, 4), rb(3, 1, 4), rb(4, 0, 4), rb(4, 0, 5), rb(4, 1, 6), rb(4, 1, 7),
            rb(4, 0, 8), rb(4, 1, 8), rb(4, 2, 8), rb(4, 0, 9), rb(4, 1, 9), rb(4, 2, 9)};
}

std::vector<FormTriple> recoverability_test_forms() {
    auto ft = [](long a, long b, long c) { return FormTriple{a, b, c}; };
    return {ft(1, 0, 1), ft(1, 0, 2), ft(1, 1, 2), ft(1, 1, 3), ft(1, 0, 5),
            ft(1, 1, 7), ft(1, 0, 8), ft(1, 1, 9), ft(1, 0, 9)};
}

std::vector<FormTriple> recoverability_test_genus_forms() {
    return {FormTriple{1, 1, 6}, FormTriple{1, 1, 8}};
}

Lattice non_recoverable_quaternary() {
    IntMat m{{2, 1, 1, 0}, {1, 8, 0, 0}, {1, 0, 8, 4}, {0, 0, 4, 10}};
    return make_lattice(m);
}

Lattice prop44_m6_ternary() {
    IntMat m{{4, 0, 2}, {0, 5, 1}, {2, 1, 7}};
    return make_lattice(m);
}

Lattice nine_i5() {
    return scale(cubic_lattice(5), 9);
}

// --- sublattices -----------------------------------------------------------------

SublatticeList proper_sublattices(const Lattice& ell, long max_index) {
    if (ell.rank() != 2) throw PreconditionFailed("proper_sublattices needs a rank-2 lattice");
    if (max_index < 2) throw PreconditionFailed("max_index must be >= 2");
    SublatticeList out;
    out.parent = ell;
    out.max_index = max_index;
    const IntMat& g = ell.gram().mat();
    std::set<std::pair<long, ReducedBinary>> seen;
    for (long k = 2; k <= max_index; ++k) {
        for (long alpha = 1; alpha <= k; ++alpha) {
            if (k % alpha != 0) continue;
            long delta = k / alpha;
            for (long beta = 0; beta < alpha; ++beta) {
                IntMat h(2, 2);
                h.at(0, 0) = alpha;
                h.at(0, 1) = beta;
                h.at(1, 1) = delta;
                IntMat sub = h.transpose().mul(g).mul(h);
                ReducedBinary red = reduce_binary(make_lattice(sub)).reduced;
                if (seen.insert({k, red}).second)
                    out.items.push_back(SublatticeClass{k, red});
            }
        }
    }
    std::sort(out.items.begin(), out.items.end(),
              [](const SublatticeClass& x, const SublatticeClass& y) {
                  if (x.index != y.index) return x.index < y.index;
                  return x.reduced < y.reduced;
              });
    return out;
}

std::vector<SublatticeClass> sublattices_with_mu2_bound(const Lattice& ell, const Int& bound) {
    // disc(sub) = k^2 disc(ell) <= mu1 mu2 <= bound^2
    Int kmax = isqrt(bound * bound / ell.disc());
    if (kmax < 2) return {};
    SublatticeList all = proper_sublattices(ell, kmax.get_si());
    std::vector<SublatticeClass> out;
    for (const auto& s : all.items)
        if (s.reduced.c <= bound) out.push_back(s);
    return out;
}

// --- phi9 ------------------------------------------------------------------------

ReducedBinary phi9(const ReducedBinary& k) {
    if (!k.is_reduced()) throw PreconditionFailed("phi9 needs a reduced binary");
    if (k.c < 13) throw NotInL13("phi9 needs second successive minimum >= 13");
    return reduce_binary(k.a, k.b, k.c - 9);
}

ReducedBinary phi9(const Lattice& rank2) {
    ReducedBinary red = reduce_binary(rank2).reduced;
    return phi9(red);
}

std::vector<ReducedBinary> phi9_preimages(const ReducedBinary& t) {
    if (!t.is_reduced()) throw PreconditionFailed("phi9_preimages needs a reduced binary");
    std::vector<ReducedBinary> out;
    Int cmax = t.c + 9 + t.a;
    for (Int a = 1; a <= cmax; ++a)
        for (Int c = std::max(a, Int(10)); c <= cmax; ++c)
            for (Int b = 0; 2 * b <= a; ++b) {
                if (a * (c - 9) - b * b <= 0) continue;
                if (reduce_binary(a, b, c - 9) == t) out.push_back(ReducedBinary{a, b, c});
            }
    std::sort(out.begin(), out.end());
    return out;
}

Phi9Chain phi9_chain(const ReducedBinary& start, int k) {
    Phi9Chain chain;
    chain.start = start;
    ReducedBinary cur = start;
    for (int j = 0; j < k; ++j) {
        if (cur.c < 13)
            throw ChainBroken("phi9 chain leaves L13 after " + std::to_string(j) + " steps");
        cur = phi9(cur);
        chain.steps.push_back(cur);
    }
    return chain;
}

namespace {

IntMat inverse_unimodular2(const IntMat& u) {
    Int d = u.at(0, 0) * u.at(1, 1) - u.at(0, 1) * u.at(1, 0);
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
    IntMat inv(2, 2);
    inv.at(0, 0) = d * u.at(1, 1);
    inv.at(0, 1) = -d * u.at(0, 1);
    inv.at(1, 0) = -d * u.at(1, 0);
    inv.at(1, 1) = d * u.at(0, 0);
    return inv;
}

}  // namespace

Embedding lift_phi9(const ReducedBinary& k, const Lattice& l, int steps, const Embedding& emb,
                    Budget& budget) {
    Phi9Chain chain = phi9_chain(k, steps);
    ReducedBinary last = steps == 0 ? k : chain.steps.back();
    if (!verify_embedding(l, last.lattice(), emb.matrix))
        throw PreconditionFailed("embedding does not map phi9^k(K) into L");
    int nl = l.rank();
    Lattice big = direct_sum(l, nine_i5());
    Lattice i5 = cubic_lattice(5);

    // psi: current embedding of phi9^j(K) into L + 9I5
    IntMat psi(nl + 5, 2);
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < 2; ++j) psi.at(i, j) = emb.matrix.at(i, j);

    for (int j = steps; j >= 1; --j) {
        const ReducedBinary& prev = j == 1 ? k : chain.steps[static_cast<size_t>(j - 2)];
        // Gram of the previous step's basis with 9 removed from the corner
        IntMat mp(2, 2);
        mp.at(0, 0) = prev.a;
        mp.at(0, 1) = mp.at(1, 0) = prev.b;
        mp.at(1, 1) = prev.c - 9;
        BinaryReduction red = reduce_binary(make_lattice(mp));
        if (red.reduced != (j == steps ? last : chain.steps[static_cast<size_t>(j - 1)]))
            throw ChainBroken("phi9 chain step does not reduce to the recorded image");
        IntMat phi = psi.mul(inverse_unimodular2(red.transform));  // images of the mp basis

        // split into L-part and 9I5-part
        Vec w1(5), w2(5);
        for (int i = 0; i < 5; ++i) {
            w1[static_cast<size_t>(i)] = phi.at(nl + i, 0);
            w2[static_cast<size_t>(i)] = phi.at(nl + i, 1);
        }
        Int a2 = 9 * eval_bilinear(IntMat::identity(5), w1, w1);
        Int b2 = 9 * eval_bilinear(IntMat::identity(5), w1, w2);
        Int g2 = 9 * eval_bilinear(IntMat::identity(5), w2, w2);

        // replace the 9I5 part by one with 9 added to the corner:
        // [[a2, b2], [b2, g2 + 9]] scaled down by 9 embeds into I5
        Vec u1(5), u2(5);
        if (a2 == 0) {
            if (b2 != 0) throw Error("degenerate 9I5 part with nonzero pairing");
            auto sq = four_squares((g2 + 9) / 9);
            for (int i = 0; i < 4; ++i) u2[static_cast<size_t>(i)] = sq[static_cast<size_t>(i)];
        } else {
            IntMat small(2, 2);
            small.at(0, 0) = a2 / 9;
            small.at(0, 1) = small.at(1, 0) = b2 / 9;
            small.at(1, 1) = g2 / 9 + 1;
            auto sub = represents_lattice(i5, make_lattice(small), budget);
            if (!sub) throw Error("I5 failed to represent a binary form");
            for (int i = 0; i < 5; ++i) {
                u1[static_cast<size_t>(i)] = sub->matrix.at(i, 0);
                u2[static_cast<size_t>(i)] = sub->matrix.at(i, 1);
            }
        }
        IntMat next(nl + 5, 2);
        for (int i = 0; i < nl; ++i) {
            next.at(i, 0) = phi.at(i, 0);
            next.at(i, 1) = phi.at(i, 1);
        }
        for (int i = 0; i < 5; ++i) {
            next.at(nl + i, 0) = u1[static_cast<size_t>(i)];
            next.at(nl + i, 1) = u2[static_cast<size_t>(i)];
        }
        if (!verify_embedding(big, prev.lattice(), next))
            throw Error("phi9 lift failed exact verification");
        psi = std::move(next);
    }
    if (!verify_embedding(big, k.lattice(), psi)) throw Error("phi9 lift failed final verification");
    return Embedding{std::move(psi)};
}

// --- exception scan ----------------------------------------------------------------

ExceptionScan verify_15_exceptions(Budget& budget) {
    ExceptionScan scan;
    Assembly qa(quinary_a());
    Assembly qb(quinary_b());
    for (const ReducedBinary& rb : enumerate_reduced_binaries(12, 1)) {
        Lattice lat = rb.lattice();
        if (!represents_lattice(qa, lat, budget)) scan.failing.push_back(rb);
        if (!represents_lattice(qb, lat, budget)) scan.companion_failing.push_back(rb);
    }
    ReducedBinary high{4, 1, 13};
    scan.high_exception_fails = !represents_lattice(qa, high.lattice(), budget).has_value();
    std::vector<ReducedBinary> combined = scan.failing;
    if (scan.high_exception_fails) combined.push_back(high);
    std::sort(combined.begin(), combined.end());
    std::vector<ReducedBinary> expected = known_exception_binaries();
    std::sort(expected.begin(), expected.end());
    scan.matches_known_list = combined == expected;
    return scan;
}

// --- recoverable-number conditions ---------------------------------------------------

RecoverabilityReport twelve_lattice_condition(const Int& m, Budget& budget) {
    if (m < 1) throw PreconditionFailed("m must be positive");
    RecoverabilityReport rep;
    rep.m = m;
    rep.sufficient = true;
    for (const ReducedBinary& rb : recoverability_test_lattices()) {
        Assembly a(rb.lattice());
        bool ok = a.find_vector_of_norm(4 * m, budget).has_value();
        rep.checks.push_back(ConditionCheck{rb.str(), ok});
        rep.sufficient = rep.sufficient && ok;
    }
    return rep;
}

RecoverabilityReport twelve_lattice_condition(const Int& m) {
    Budget b;
    return twelve_lattice_condition(m, b);
}

RecoverabilityReport nine_plus_genera_condition(const Int& m, Budget& budget) {
    if (m < 1) throw PreconditionFailed("m must be positive");
    RecoverabilityReport rep;
    rep.m = m;
    rep.sufficient = true;
    for (const FormTriple& f : recoverability_test_forms()) {
        Assembly dbl(triple_to_doubled_gram(f));
        bool ok = dbl.find_vector_of_norm(2 * m, budget).has_value();
        rep.checks.push_back(ConditionCheck{"form" + f.str(), ok});
        rep.sufficient = rep.sufficient && ok;
    }
    for (const FormTriple& f : recoverability_test_genus_forms()) {
        bool ok = genus_represents(f, m, budget);
        rep.checks.push_back(ConditionCheck{"gen" + f.str(), ok});
        rep.sufficient = rep.sufficient && ok;
    }
    return rep;
}

RecoverabilityReport nine_plus_genera_condition(const Int& m) {
    Budget b;
    return nine_plus_genera_condition(m, b);
}

bool corollary_prime_check(const Int& p) {
    if (!is_prime(p)) throw NotPrime(p.get_str() + " is not prime");
    if (mod_nonneg(p, 8) != 1) return false;
    for (long q : {3L, 5L, 7L, 11L, 23L, 31L})
        if (legendre(p, Int(q)) != 1) return false;
    return true;
}

std::vector<Int> sieve_corollary_primes(int count) {
    // p = 5569 mod 8 and mod 3*5*7*11*23*31 (5569 is 1 mod 8, so one class)
    const Int modulus = Int(8) * 3 * 5 * 7 * 11 * 23 * 31;
    std::vector<Int> out;
    for (Int p = 5569; static_cast<int>(out.size()) < count; p += modulus)
        if (is_prime(p)) out.push_back(p);
    return out;
}

// --- section 4 constructions ----------------------------------------------------------

Lattice build_K_h(const Int& a, const Int& b, int h) {
    if (a < 2 || b <= a) throw PreconditionFailed("need 2 <= a < b");
    if (mod_nonneg(b, a) == 0) throw PreconditionFailed("a must not divide b");
    if (h < 2) throw PreconditionFailed("K(h) needs h >= 2");
    if (!(h * h * a < b && b < (h + 1) * (h + 1) * a))
        throw PreconditionFailed("need h^2 a < b < (h+1)^2 a");
    std::vector<Lattice> blocks;
    for (int i = 2; i <= h; ++i)
        for (int j = 1; 2 * j <= i; ++j) {
            IntMat m(2, 2);
            m.at(0, 0) = Int(i) * i * a;
            m.at(0, 1) = m.at(1, 0) = Int(i) * j * a;
            m.at(1, 1) = Int(j) * j * a + b;
            blocks.push_back(make_lattice(m));
        }
    return direct_sum(blocks);
}

QvalueReport check_qvalue(const Int& a, const Int& b, int h, const Int& bound, Budget& budget) {
    QvalueReport rep;
    rep.k_h = build_K_h(a, b, h);
    rep.bound = bound;
    rep.pass = true;
    ShortVectorList sv = short_vectors(rep.k_h, bound, budget);
    std::set<Int> norms;
    for (const auto& e : sv.entries) norms.insert(e.norm);
    for (const Int& v : norms) {
        if (v == a || v == b) {
            rep.pass = false;
            rep.detail = "K(h) represents " + v.get_str();
            return rep;
        }
        bool comb = false;
        for (Int n = 0; n * b <= v && !comb; ++n)
            if (mod_nonneg(v - n * b, a) == 0) comb = true;
        if (!comb) {
            rep.pass = false;
            rep.detail = v.get_str() + " is not of the form ma+nb";
            return rep;
        }
    }
    return rep;
}

std::vector<ReducedBinary> surrogate_tail_classes(const Int& n, const Int& bound) {
    if (n > bound) throw PreconditionFailed("surrogate tail needs n <= bound");
    return enumerate_reduced_binaries(bound, n);
}

Lattice surrogate_tail(const Int& n, const Int& bound) {
    std::vector<Lattice> blocks;
    for (const ReducedBinary& rb : surrogate_tail_classes(n, bound)) blocks.push_back(rb.lattice());
    return direct_sum(blocks);
}

// --- tailed representation -------------------------------------------------------------

bool tailed_represents(const TailedTarget& target, const Lattice& source, Budget& budget) {
    // a source whose reduced form lies in the tail range is a summand
    if (source.rank() == 1) {
        const Int& v = source.at(0, 0);
        if (target.tail_min <= v && v <= target.tail_max) return true;
    }
    std::optional<ReducedBinary> red;
    if (source.rank() == 2) {
        red = reduce_binary(source).reduced;
        if (target.tail_min <= red->a && red->c <= target.tail_max) return true;
    }
    Lattice head = direct_sum(target.head);
    {
        Assembly ha(head);
        if (represents_lattice(ha, source, budget)) return true;
    }
    // head plus a single diagonal tail block <q, q> for a norm q the source
    // basis needs; covers the routes that park one value in the tail
    std::set<Int> qs;
    for (int i = 0; i < source.rank(); ++i) qs.insert(source.at(i, i));
    if (red) {
        qs.insert(red->a);
        qs.insert(red->c);
    }
    for (const Int& q : qs) {
        if (q < target.tail_min || q > target.tail_max) continue;
        Lattice aug = direct_sum(head, diag_lattice({q, q}));
        Assembly aa(aug);
        if (represents_lattice(aa, source, budget)) return true;
    }
    return false;
}

bool tailed_misses(const TailedTarget& target, const Lattice& source, Budget& budget) {
    Int maxdiag = 0;
    for (int i = 0; i < source.rank(); ++i) maxdiag = std::max(maxdiag, source.at(i, i));
    if (maxdiag >= target.tail_min)
        throw PreconditionFailed(
            "exhaustive miss check requires all source norms below the tail minimum");
    // every image vector has a source-diagonal norm < tail_min, so no tail
    // component can carry a nonzero part: the head search is exhaustive
    Assembly ha(direct_sum(target.head));
    return !represents_lattice(ha, source, budget).has_value();
}

TailedTarget build_prop44_target(const Int& m, const Int& bound) {
    TailedTarget t;
    if (m == 2) {
        t.head = {diag_lattice({1, 1})};
        t.tail_min = 3;
    } else if (m == 6) {
        t.head = {cubic_lattice(1), prop44_m6_ternary()};
        t.tail_min = 7;
    } else if (m >= 10 && mod_nonneg(m, 4) == 2) {
        t.head = {diag_lattice({Int(1), Int(3), Int(5), m - 1}),
                  scale(root_lattice(RootFamily::D, 5), 2)};
        t.tail_min = m + 1;
    } else {
        throw PreconditionFailed("construction defined for m = 2, 6 and m = 2 mod 4, m >= 10");
    }
    t.tail_max = bound;
    if (t.tail_min > t.tail_max) throw PreconditionFailed("bound below the tail minimum");
    return t;
}

Prop44Report verify_prop44(const Int& m, const Int& bound, Budget& budget) {
    Prop44Report rep;
    rep.m = m;
    rep.bound = bound;
    TailedTarget target = build_prop44_target(m, bound);
    Lattice ell = diag_lattice({Int(1), m});
    rep.misses_ell = tailed_misses(target, ell, budget);
    rep.represents_all_sub = true;
    for (const SublatticeClass& s : sublattices_with_mu2_bound(ell, bound)) {
        if (!tailed_represents(target, s.reduced.lattice(), budget)) {
            rep.represents_all_sub = false;
            rep.detail = "sublattice " + s.reduced.str() + " not represented";
            return rep;
        }
    }
    return rep;
}

EvenUniversalityReport check_d5_even_universal(const Int& bound, Budget& budget) {
    EvenUniversalityReport rep;
    rep.bound = bound;
    rep.pass = true;
    Lattice d5 = root_lattice(RootFamily::D, 5);
    Assembly a(d5);
    for (const ReducedBinary& rb : enumerate_reduced_binaries(bound, 1)) {
        if (!rb.is_even()) continue;
        if (!represents_lattice(a, rb.lattice(), budget)) {
            rep.pass = false;
            rep.detail = "D5 misses " + rb.str();
            return rep;
        }
    }
    return rep;
}

// --- recoverability counterexample search -----------------------------------------------

std::optional<Lattice> recovery_counterexample_search(const Lattice& ell,
                                                      const std::vector<Lattice>& s0,
                                                      const std::vector<Lattice>& candidates,
                                                      Budget& budget) {
    for (const Lattice& s : s0) {
        if (s.rank() != ell.rank())
            throw PreconditionFailed("S0 members must be full-rank sublattices");
        Int ratio = s.disc() / ell.disc();
        if (s.disc() != ratio * ell.disc() || !is_square(ratio) || ratio < 4 ||
            !represents_lattice(ell, s, budget))
            throw PreconditionFailed("S0 member is not a proper sublattice of ell");
    }
    for (const Lattice& cand : candidates) {
        Assembly a(cand);
        bool all = true;
        for (const Lattice& s : s0)
            if (!represents_lattice(a, s, budget)) {
                all = false;
                break;
            }
        if (!all) continue;
        if (!represents_lattice(a, ell, budget)) return cand;
    }
    return std::nullopt;
}

std::vector<Lattice> make_recovery_corpus(const std::vector<Lattice>& s0, int count,
                                          std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Lattice> out;
    Lattice base = direct_sum(s0);
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard < 100 * count) {
        ++guard;
        IntMat g = base.gram().mat();
        // junk summands
        int junk = static_cast<int>(rng.range(0, 2));
        for (int t = 0; t < junk; ++t) {
            IntMat g2(g.rows() + 1, g.cols() + 1);
            for (int i = 0; i < g.rows(); ++i)
                for (int j = 0; j < g.cols(); ++j) g2.at(i, j) = g.at(i, j);
            g2.at(g.rows(), g.cols()) = rng.range(1, 9);
            g = std::move(g2);
        }
        // escalation extensions: a new row with bounded pairings, kept only
        // when the extension stays positive definite
        int ext = static_cast<int>(rng.range(0, 2));
        for (int t = 0; t < ext; ++t) {
            int n = g.rows();
            IntMat g2(n + 1, n + 1);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g2.at(i, j) = g.at(i, j);
            Int q = rng.range(1, 10);
            g2.at(n, n) = q;
            for (int i = 0; i < n; ++i) {
                Int bnd = isqrt(q * g.at(i, i));
                long bl = std::min(3L, bnd.get_si());
                Int v = rng.range(-bl, bl);
                g2.at(n, i) = v;
                g2.at(i, n) = v;
            }
            if (first_nonpositive_minor(g2) == 0) g = std::move(g2);
        }
        // index-2 overlattice glue: adjoin x/2 when all pairings stay integral
        if (rng.range(0, 1) == 1) {
            int n = g.rows();
            IntMat ext2(n, n + 1);
            for (int i = 0; i < n; ++i) ext2.at(i, i) = 2;
            bool any = false;
            Vec x(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                x[static_cast<size_t>(i)] = rng.range(0, 1);
                if (x[static_cast<size_t>(i)] != 0) any = true;
            }
            if (any) {
                Int qx = eval_quadratic(g, x);
                Vec gx(static_cast<size_t>(n));
                bool ok = mod_nonneg(qx, 4) == 0;
                for (int i = 0; i < n && ok; ++i) {
                    Int s = 0;
                    for (int j = 0; j < n; ++j) s += g.at(i, j) * x[static_cast<size_t>(j)];
                    if (mod_nonneg(s, 2) != 0) ok = false;
                }
                if (ok) {
                    for (int i = 0; i < n; ++i) ext2.at(i, n) = x[static_cast<size_t>(i)];
                    HnfResult h = column_hnf(ext2);
                    IntMat basis(n, n);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) basis.at(i, j) = h.h.at(i, j);
                    IntMat gram = basis.transpose().mul(g).mul(basis);
                    bool divisible = true;
                    for (int i = 0; i < n && divisible; ++i)
                        for (int j = 0; j < n && divisible; ++j)
                            if (mod_nonneg(gram.at(i, j), 4) != 0) divisible = false;
                    if (divisible) {
                        for (int i = 0; i < n; ++i)
                            for (int j = 0; j < n; ++j) gram.at(i, j) /= 4;
                        if (first_nonpositive_minor(gram) == 0) g = std::move(gram);
                    }
                }
            }
        }
        try {
            out.push_back(make_lattice(g));
        } catch (const Error&) {
            continue;
        }
    }
    return out;
}

}  // namespace qflat
