/*
 * engine.hpp
 * ----------
 * The evaluation pipeline on top of resolution data:
 *
 *   motivic_zeta        exact zeta function of a resolution, optionally
 *                       twisted by a character
 *   homogeneous_zeta    the projective evaluation for homogeneous input
 *   topological_zeta    Euler-characteristic specialization in s
 *   padic_specialize    point-count specialization at a prime power q
 *   s_alpha_x           the limit class at a point (two independent
 *                       routes, cross-checked)
 *   hodge_spectrum      the spectrum at a point, summed over characters
 *   check_functional_equation
 *                       duality test for homogeneous zeta functions
 */
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "izeta/qpoly.hpp"
#include "izeta/strata.hpp"
#include "izeta/zeta.hpp"

namespace izeta {

// Exact rational function of s with denominator a product of linear
// factors N*s + nu; kept with no linear factor dividing the numerator.
struct TopoZeta {
    UniPoly num;                               // polynomial in s
    std::multiset<std::pair<long, long>> den;  // factors (N, nu)

    // Cross-multiplied polynomial equality.
    bool operator==(const TopoZeta& o) const;
    bool operator!=(const TopoZeta& o) const { return !(*this == o); }

    // Value at a rational s where no denominator factor vanishes.
    Rational eval(const Rational& s) const;

    std::string to_string() const;
};

// Finite spectrum: exponent -> nonzero integer multiplicity.
struct SpectrumPoly {
    std::map<Rational, BigInt> terms;

    bool operator==(const SpectrumPoly& o) const { return terms == o.terms; }
    bool operator!=(const SpectrumPoly& o) const { return !(*this == o); }
    std::string to_string() const;
};

// Specialization of a ZetaFn at L = q, written in T = q^{-s}: numerator
// coefficients by T-power over gates (1 - q^{-n} T^N).
struct PadicZeta {
    long q = 0;
    std::map<long, Rational> num;
    GateSet den;

    bool operator==(const PadicZeta& o) const {
        return q == o.q && num == o.num && den == o.den;
    }
    bool operator!=(const PadicZeta& o) const { return !(*this == o); }
    std::string to_string() const;
};

// Verdict of the functional-equation test; failures carry the
// cross-multiplied difference, never an exception.
struct FEReport {
    bool ok = false;
    std::string detail;
};

// Sum over strata I with every N_i divisible by ord(alpha) of
// twisted_class(I, alpha) * prod_{i in I} (L-1) L^{-nu_i} S^{N_i} /
// (1 - L^{-nu_i} S^{N_i}), all scaled by L^{-m}.
ZetaFn motivic_zeta(const ResolutionData& res, const Character& alpha = Character());

// Projective evaluation for a homogeneous polynomial of degree r:
// (L-1) L^{-m} / (1 - L^{-m} S^r) times the sum over subsets I of the
// ord(alpha)-divisible components of the relative cover class of I and
// the product of (G_i - 1) factors. Identically zero when ord(alpha)
// does not divide r.
ZetaFn homogeneous_zeta(const ResolutionData& proj_res, long r,
                        const Character& alpha = Character());

// Euler-characteristic specialization: sum over strata I (restricted to
// ord(alpha)-divisible ones) of chi_top of the untwisted stratum class
// times prod 1/(N_i s + nu_i). The twisted and untwisted Euler
// characteristics of the covers agree, so no twisted classes are needed.
TopoZeta topological_zeta(const ResolutionData& res, const Character& alpha = Character());

// Substitute L = q (a prime power) into a zeta function whose numerator
// coefficients are all Tate classes; result is in T = q^{-s}.
PadicZeta padic_specialize(const ZetaFn& z, long q);

// The limit class at the point: L^m/(1-L) * ct(motivic_zeta), computed
// by exact division and checked against the closed form
// sum_I twisted_class * (1-L)^(|I|-1). Requires point-localized data.
EPoly s_alpha_x(const ResolutionData& res, const Character& alpha = Character());

// Spectrum at the point: (-1)^(m-1) sum_alpha hsp(s_alpha_x) t^(gamma),
// with the constant term removed and exponents reflected through m.
// d_list defaults to all divisors of lcm of the component multiplicities
// (characters of other orders contribute nothing).
SpectrumPoly hodge_spectrum(const ResolutionData& res, std::vector<long> d_list = {});

// Tests dual(z) == S^r * z_target; the single-argument form takes
// z_target = z (the trivial-character statement for degree-r input).
FEReport check_functional_equation(const ZetaFn& z, long r);
FEReport check_functional_equation(const ZetaFn& z, long r, const ZetaFn& z_target);

} // namespace izeta
