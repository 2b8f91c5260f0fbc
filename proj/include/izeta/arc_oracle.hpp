/*
 * arc_oracle.hpp
 * --------------
 * Brute-force ground truth for the zeta-function engine: enumerate
 * truncated arcs (jets) over a small finite field F_q and count those on
 * which the input polynomial has contact order exactly n, optionally
 * tallied by the discrete logarithm of the leading coefficient so that
 * multiplicative character sums can be formed.
 *
 * The oracle never consumes resolution data; it realizes the series
 * definitions directly, so agreement with the symbolic engine is an
 * end-to-end check of both sides.
 */
#pragma once

#include <string>
#include <vector>

#include "izeta/qpoly.hpp"
#include "izeta/strata.hpp"

namespace izeta {

// Default cap on the nominal jet count q^{m(n+1)} a single enumeration
// request may ask for.  Pruned search normally visits far fewer nodes,
// but the gate is on the nominal total so refusal is predictable.
inline constexpr long long kDefaultJetBudget = 100'000'000;

// Arithmetic tables for a small finite field F_q, q = p^e.  Elements are
// encoded as integers 0..q-1 via their base-p digit vector, which lists
// the coefficients of the residue polynomial lowest degree first; the
// prime subfield is therefore 0..p-1.  The modulus is the monic
// irreducible of degree e whose non-leading digit encoding is smallest,
// and `generator` is the smallest encoding that generates F_q^*.
struct GFTable {
    long p = 0;   // characteristic
    long e = 0;   // extension degree
    long q = 0;   // p^e
    long generator = 0;
    std::vector<long> dlog;  // size q; dlog[generator^k] = k, dlog[0] = -1
    std::vector<long> add;   // q*q, row-major
    std::vector<long> mul;   // q*q, row-major

    long addv(long a, long b) const { return add[a * q + b]; }
    long mulv(long a, long b) const { return mul[a * q + b]; }
};

// Shared, lazily built table for q; valid for prime powers 2 <= q <= 256.
// The returned reference stays valid for the lifetime of the process and
// is safe to read concurrently.
const GFTable& gf_field(long q);

// All generators of F_q^*, in increasing encoding order.
std::vector<long> gf_generators(long q);

// Result of one counting request.  `count` is the number of m-tuples of
// series truncated mod t^{n+1}, constant terms inside the region, on
// which the polynomial has order exactly n; tallies[k] is the number of
// those whose t^n-coefficient has discrete logarithm congruent to k
// modulo d, so that sum_k tallies[k] = count and d = 1 gives [count].
struct ArcCountReport {
    long q = 0;
    long d = 1;
    long n = 0;
    RegionSpec region;
    long generator = 0;  // generator the discrete logs refer to
    BigInt count;
    std::vector<BigInt> tallies;

    std::string to_string() const;
};

// Count jets of contact order exactly n with the trivial character.
// Monomial inputs are counted combinatorially in closed form; anything
// else is enumerated with pruning, provided q^{m(n+1)} <= budget.
// Throws BudgetExceeded otherwise.
ArcCountReport count_jets(const QPoly& f, long m, long q, long n,
                          const RegionSpec& region = RegionSpec::whole_space(),
                          long long budget = kDefaultJetBudget);

// As count_jets, but additionally tally the arcs by the discrete
// logarithm (mod d) of the t^n-coefficient of the transformed series.
// Requires d | q - 1 (throws NotDividing).  `generator` picks the
// reference generator of F_q^*; 0 means the canonical smallest one.
ArcCountReport twisted_tally(const QPoly& f, long m, long q, long d, long n,
                             const RegionSpec& region = RegionSpec::whole_space(),
                             long long budget = kDefaultJetBudget,
                             long generator = 0);

// The raw pruned-enumeration path behind the two counters, with no
// monomial shortcut.  Exposed so tests can verify the closed-form
// counter against direct enumeration wherever both run.
ArcCountReport enumerate_jets(const QPoly& f, long m, long q, long d, long n,
                              const RegionSpec& region,
                              long long budget = kDefaultJetBudget,
                              long generator = 0);

// Classify every jet mod t^{n_max+1} with constant term in the region by
// the order of the transformed series: buckets 0..n_max hold the number
// of jets of that exact order, and the final bucket (index n_max+1)
// holds the jets whose transform vanishes to order > n_max.  The buckets
// partition all (region points) * q^{m*n_max} jets.
std::vector<BigInt> ord_histogram(const QPoly& f, long m, long q, long n_max,
                                  const RegionSpec& region = RegionSpec::whole_space(),
                                  long long budget = kDefaultJetBudget);

// Result of checking a symbolic zeta function against the oracle,
// coefficient by coefficient.  residuals[n] is zero exactly when the
// two sides agree at order n: for d = 1 it is the signed difference
// (predicted count) - (enumerated count); for d = 2 the signed
// difference of character-weighted sums; for d > 2 the weighted sums
// live in a cyclotomic field and the residual is the l1 norm of the
// difference reduced mod the d-th cyclotomic polynomial.
struct CompareReport {
    long q = 0;
    long d = 1;
    long n_max = 0;
    bool ok = false;
    std::vector<Rational> residuals;  // size n_max + 1

    std::string to_string() const;
};

// Expand the motivic zeta function of `res` (character of order d; the
// trivial one when d = 1) to order n_max, specialize L -> q, and compare
// q^{(n+1)m} times each coefficient against the oracle count (d = 1) or
// the tally-weighted character sum (d > 1) for the same polynomial.
// The resolution must specialize: non-Tate coefficients propagate
// NotTate.  The polynomial is interpreted in res.m variables over the
// region recorded in `res`.
CompareReport compare_series(const ResolutionData& res, const QPoly& f,
                             long q, long d, long n_max,
                             long long budget = kDefaultJetBudget);

}  // namespace izeta
