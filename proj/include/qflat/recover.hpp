#ifndef QFLAT_RECOVER_HPP
#define QFLAT_RECOVER_HPP

#include "qflat/gram.hpp"
#include "qflat/reduce.hpp"
#include "qflat/represent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qflat {

// --- fixed lattices and form lists used by the verification suite -------------

// <1,2,3> + [[2,1],[1,5]] and <1,2,6> + [[2,1],[1,5]]: the two quinary test
// lattices for the binary-exception scan.
Lattice quinary_a();
Lattice quinary_b();

// The 15 reduced binaries the quinary_a scan must single out.
std::vector<ReducedBinary> known_exception_binaries();

// The 12 binary lattices whose representation of 4m makes m recoverable.
std::vector<ReducedBinary> recoverability_test_lattices();

// The 9 class-number-one forms paired with the 12-lattice condition.
std::vector<FormTriple> recoverability_test_forms();

// The two genus conditions: gen(1,1,6) and gen(1,1,8).
std::vector<FormTriple> recoverability_test_genus_forms();

// The quaternary blocker for <2,8>.
Lattice non_recoverable_quaternary();

// The ternary block of the m = 6 construction.
Lattice prop44_m6_ternary();

Lattice nine_i5();  // scale(I_5, 9)

// --- sublattices ---------------------------------------------------------------

struct SublatticeClass {
    long index;             // [parent : sublattice]
    ReducedBinary reduced;  // canonical representative
};

struct SublatticeList {
    Lattice parent;
    long max_index;
    std::vector<SublatticeClass> items;  // deduplicated, sorted by (index, a, c, b)
};

// All proper sublattices of a rank-2 lattice with index 2..max_index, one per
// isometry class, via Hermite-form bases [[alpha, beta], [0, delta]].
SublatticeList proper_sublattices(const Lattice& ell, long max_index);

// Classes with mu_2 <= bound (index range derived from the Hermite inequality).
std::vector<SublatticeClass> sublattices_with_mu2_bound(const Lattice& ell, const Int& bound);

// --- phi9 ----------------------------------------------------------------------

// phi9 of a reduced binary with c >= 13: reduce([[a,b],[b,c-9]]).
ReducedBinary phi9(const ReducedBinary& k);
ReducedBinary phi9(const Lattice& rank2);  // reduces first (NotInL13 if mu2 < 13)

// All reduced binaries K (any second minimum) whose image under c -> c-9
// reduces to t; complete by the bound c <= mu2(t) + 9 + mu1(t).
std::vector<ReducedBinary> phi9_preimages(const ReducedBinary& t);

struct Phi9Chain {
    ReducedBinary start;
    std::vector<ReducedBinary> steps;  // phi9(start), phi9^2(start), ...
};

// Applies phi9 k times; every intermediate needs c >= 13 (ChainBroken if not).
Phi9Chain phi9_chain(const ReducedBinary& start, int k);

// Constructive lifting: from an embedding of phi9^k(K) into L, an embedding of
// K into L + 9 I_5, verified exactly.
Embedding lift_phi9(const ReducedBinary& k, const Lattice& l, int steps, const Embedding& emb,
                    Budget& budget);

// --- verification reports --------------------------------------------------------

struct ExceptionScan {
    std::vector<ReducedBinary> failing;       // scan of mu2 <= 12 against quinary_a
    bool high_exception_fails = false;        // [[4,1],[1,13]] (mu2 = 13) also fails
    bool matches_known_list = false;          // failing + the mu2=13 entry == the 15
    std::vector<ReducedBinary> companion_failing;  // same scan against quinary_b
};

ExceptionScan verify_15_exceptions(Budget& budget);

struct ConditionCheck {
    std::string name;
    bool pass = false;
};

struct RecoverabilityReport {
    Int m;
    bool sufficient = false;  // all checks pass
    std::vector<ConditionCheck> checks;
};

// 4m against the 12 binary lattices.
RecoverabilityReport twelve_lattice_condition(const Int& m, Budget& budget);
RecoverabilityReport twelve_lattice_condition(const Int& m);

// m against the 9 forms and the 2 genera.
RecoverabilityReport nine_plus_genera_condition(const Int& m, Budget& budget);
RecoverabilityReport nine_plus_genera_condition(const Int& m);

// p = 1 mod 8, prime, and a quadratic residue mod 3, 5, 7, 11, 23, 31.
bool corollary_prime_check(const Int& p);

// Primes p = 5569 mod 8 * 3*5*7*11*23*31 (the hypothesis class), smallest first.
std::vector<Int> sieve_corollary_primes(int count);

// --- section 4 constructions -----------------------------------------------------

Lattice build_K_h(const Int& a, const Int& b, int h);

struct QvalueReport {
    Lattice k_h;
    bool pass = false;
    Int bound;
    std::string detail;
};

// Q(K(h)) up to bound lies inside {ma + nb} minus {a, b}.
QvalueReport check_qvalue(const Int& a, const Int& b, int h, const Int& bound, Budget& budget);

// Orthogonal sum of every reduced binary with n <= a <= c <= bound.
std::vector<ReducedBinary> surrogate_tail_classes(const Int& n, const Int& bound);
Lattice surrogate_tail(const Int& n, const Int& bound);

// Head components plus a surrogate tail, searched without materializing the
// tail: every positive answer carries an exactly verified witness, and
// negative answers are only drawn from exhaustive search on the components a
// vector of the needed norm can actually touch.
struct TailedTarget {
    std::vector<Lattice> head;
    Int tail_min;  // surrogate_tail(tail_min, tail_max)
    Int tail_max;
};

bool tailed_represents(const TailedTarget& target, const Lattice& source, Budget& budget);
// Exhaustive non-representation; requires max diagonal of source < tail_min.
bool tailed_misses(const TailedTarget& target, const Lattice& source, Budget& budget);

struct Prop44Report {
    Int m;
    Int bound;
    bool misses_ell = false;          // <1,m> not represented
    bool represents_all_sub = false;  // every proper sublattice with mu2 <= bound
    std::string detail;
    bool pass() const { return misses_ell && represents_all_sub; }
};

TailedTarget build_prop44_target(const Int& m, const Int& bound);
Prop44Report verify_prop44(const Int& m, const Int& bound, Budget& budget);

struct EvenUniversalityReport {
    Int bound;
    bool pass = false;
    std::string detail;
};

// D_5 represents every even reduced binary with c <= bound.
EvenUniversalityReport check_d5_even_universal(const Int& bound, Budget& budget);

// --- recoverability counterexample search ----------------------------------------

// First candidate representing every member of s0 but not ell; absence over
// the corpus is evidence, not proof.
std::optional<Lattice> recovery_counterexample_search(const Lattice& ell,
                                                      const std::vector<Lattice>& s0,
                                                      const std::vector<Lattice>& candidates,
                                                      Budget& budget);

// Deterministic candidate corpus: direct sums of escalations of the s0
// members, with occasional index-2 overlattice glue and junk summands.
std::vector<Lattice> make_recovery_corpus(const std::vector<Lattice>& s0, int count,
                                          std::uint64_t seed);

}  // namespace qflat

#endif
