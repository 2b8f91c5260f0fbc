/*
 * zeta.hpp
 * --------
 * ZetaFn: canonical-form rational functions in S = L^{-s} over EPoly.
 *
 * A ZetaFn is a polynomial in S with EPoly coefficients divided by a
 * multiset of "gate" factors (1 - L^{-n} S^N), the denominators that arise
 * from geometric series of the form sum_i L^{-(Ns+n)i}.  The identity
 * L^{-Ns-n} = L^{-n} S^N is built into the representation: S commutes with
 * the coefficients and carries the s-dependence.
 *
 * Canonical form: no gate exactly divides the numerator.  Gates are not
 * pairwise coprime (1 - L^{-2}S^2 factors), so canonical forms are normal
 * up to common factors only; equality therefore cross-multiplies both
 * sides to the least common gate multiset and compares numerators.
 */
#pragma once
#include <set>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "izeta/epoly.hpp"

namespace izeta {

// Denominator factor (1 - L^{-n} S^N).
struct Gate {
    long N = 1; // multiplicity weight on s
    long n = 1; // L-weight

    Gate() = default;
    Gate(long N_, long n_);

    bool operator==(const Gate& o) const { return N == o.N && n == o.n; }
    bool operator<(const Gate& o) const {
        return N != o.N ? N < o.N : n < o.n;
    }
};

// Gate multiset, kept sorted by (N, n).
using GateSet = std::multiset<Gate>;

class ZetaFn {
public:
    // S-exponent (>= 0) -> nonzero EPoly coefficient.
    using Numerator = std::map<long, EPoly>;

    ZetaFn() = default;                       // zero
    explicit ZetaFn(const EPoly& constant);   // constant class
    explicit ZetaFn(long c) : ZetaFn(EPoly(c)) {}

    // c * S^a (a >= 0).
    static ZetaFn monomial(const EPoly& c, long a);
    static ZetaFn s_power(long a) { return monomial(EPoly::one(), a); }
    // 1 / (1 - L^{-n} S^N).
    static ZetaFn gate_inverse(const Gate& g);
    // The gate series L^{-n}S^N / (1 - L^{-n}S^N), the generator that the
    // constant-term operator sends to -1.
    static ZetaFn gate_series(const Gate& g);

    bool is_zero() const { return num_.empty(); }
    const Numerator& numerator() const { return num_; }
    const GateSet& gates() const { return den_; }

    ZetaFn operator+(const ZetaFn& o) const;
    ZetaFn operator-() const;
    ZetaFn operator-(const ZetaFn& o) const { return *this + (-o); }
    ZetaFn operator*(const ZetaFn& o) const;
    ZetaFn& operator+=(const ZetaFn& o) { return *this = *this + o; }
    ZetaFn& operator*=(const ZetaFn& o) { return *this = *this * o; }
    ZetaFn scale(const EPoly& c) const { return *this * ZetaFn(c); }

    // Cross-multiplied equality over the least common gate multiset.
    bool operator==(const ZetaFn& o) const;
    bool operator!=(const ZetaFn& o) const { return !(*this == o); }

    // Duality: dualizes coefficients, sends S^a -> S^{-a}, and keeps each
    // gate while contributing a factor -L^{-n}S^N to the numerator.  The
    // total gate S-power must clear every negative S-exponent; a residual
    // negative power means the input lay outside the Laurent-localized
    // ring and NotDualizable is thrown.
    ZetaFn dual() const;

    // Constant-term operator (the formal limit s -> -infinity): sends each
    // gate series L^{-n}S^N(1 - L^{-n}S^N)^{-1} to -1 and is the identity
    // on constant classes.  Throws NotInCTDomain when a numerator monomial
    // carries an S-power that is not a sub-multiset sum of the gate
    // S-powers (a bare L^{-as-b} factor survives).
    EPoly ct() const;

    // Series coefficients of S^0..S^{n_max} of the geometric expansion.
    std::vector<EPoly> expand_series(long n_max) const;

    // Substitute s = d (so S = L^{-d}): returns the exact unreduced
    // fraction (numerator, denominator) of EPolys, each gate becoming
    // (1 - L^{-(Nd+n)}).
    std::pair<EPoly, EPoly> eval_integer_s(long d) const;

    std::string to_string() const;

    // Machine-readable rendering of the stored representation, as a
    // JSON object: "numerator" lists one record per S-power carrying
    // [u-exponent, v-exponent, coefficient] term triples (coefficients
    // are decimal strings to stay exact), "gates" lists [N, n] pairs of
    // the denominator multiset.  Deterministically ordered.
    std::string to_json() const;

private:
    void add_term(long a, const EPoly& c);
    void canonicalize();
    // Numerator of this lifted to the gate multiset `target` (a superset
    // of den_): multiplies by the complementary gate polynomials.
    Numerator lift_to(const GateSet& target) const;

    Numerator num_;
    GateSet den_;
};

// Least common gate multiset: per gate value, the max multiplicity.
GateSet gate_lcm(const GateSet& a, const GateSet& b);

// The gate polynomial 1 - L^{-n}S^N as a numerator map.
ZetaFn::Numerator gate_polynomial(const Gate& g);

} // namespace izeta
