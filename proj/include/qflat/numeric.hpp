#ifndef QFLAT_NUMERIC_HPP
#define QFLAT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflat {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error(what) {}
};

struct NotPositiveDefinite : Error {
    int minor_index;  // 1-based index of the first non-positive leading minor
    NotPositiveDefinite(const std::string& what, int idx) : Error(what), minor_index(idx) {}
};

struct UnsupportedFamilyRank : Error {
    explicit UnsupportedFamilyRank(const std::string& what) : Error(what) {}
};

struct OddMiddleCoefficient : Error {
    explicit OddMiddleCoefficient(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    unsigned long long budget;
    explicit BudgetExceeded(unsigned long long b)
        : Error("search budget of " + std::to_string(b) + " nodes exhausted"), budget(b) {}
};

struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error(what) {}
};

struct InvalidDiscriminant : Error {
    explicit InvalidDiscriminant(const std::string& what) : Error(what) {}
};

struct NotInL13 : Error {
    explicit NotInL13(const std::string& what) : Error(what) {}
};

struct ChainBroken : Error {
    explicit ChainBroken(const std::string& what) : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// ---------------------------------------------------------------------------
// Search budget: counts nodes, throws instead of truncating.
// ---------------------------------------------------------------------------

class Budget {
  public:
    Budget() : limit_(default_limit()), used_(0) {}
    explicit Budget(unsigned long long limit) : limit_(limit), used_(0) {}

    void spend(unsigned long long n = 1) {
        used_ += n;
        if (used_ > limit_) throw BudgetExceeded(limit_);
    }
    unsigned long long used() const { return used_; }
    unsigned long long limit() const { return limit_; }

    // Default comes from QFLAT_BUDGET when set, else 10^7 nodes.
    static unsigned long long default_limit();

  private:
    unsigned long long limit_;
    unsigned long long used_;
};

// ---------------------------------------------------------------------------
// Small exact-arithmetic helpers
// ---------------------------------------------------------------------------

// floor of sqrt(n); requires n >= 0
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// nearest integer, ties toward +infinity
inline Int round_rat(const Rat& q) {
    return floor_rat(q + Rat(1, 2));
}

inline Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Legendre symbol (a|p) for odd prime p
inline int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// Deterministic primality for the sizes that occur here (GMP's test is
// deterministic below 2^64 in practice; reps=40 leaves no room at desk scale).
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Deterministic PRNG for reproducible test corpora (splitmix64).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [lo, hi] (inclusive); fine for corpus generation
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace qflat

#endif
