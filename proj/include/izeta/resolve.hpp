/*
 * resolve.hpp
 * -----------
 * Embedded resolution builders working over exact rationals:
 *
 *  - resolve_plane_curve: iterated point blowups of a plane curve germ,
 *    producing exceptional components with exact (N, nu), incidences,
 *    puncture data and strata classes. Non-rational intersection points
 *    on the exceptional locus are kept as conjugate clusters when they
 *    are already simple normal crossings; configurations that would
 *    force a blowup at an irrational center are rejected.
 *
 *  - resolve_binary_form: the identity resolution of the zero locus of
 *    a homogeneous polynomial on the projective line (or P^0 for one
 *    variable), consumed by the homogeneous zeta evaluation.
 */
#pragma once

#include "izeta/qpoly.hpp"
#include "izeta/strata.hpp"

namespace izeta {

inline constexpr long kDefaultBlowupBudget = 64;

// Resolves the germ of f (a squarefree-factored bivariate polynomial in
// x, y; repeated factors are folded into the multiplicities N) at the
// rational point (ax, ay) by point blowups.
//
// region selects the arc-origin locus of the resulting data: the point
// itself (default), or the whole plane -- the latter only for
// homogeneous f, whose cone singularity makes the local resolution
// global.
ResolutionData resolve_plane_curve(const QPoly& f, const Rational& ax, const Rational& ay,
                                   const RegionSpec& region = RegionSpec::origin(),
                                   long budget = kDefaultBlowupBudget);

// Resolution data of {f = 0} on P^(m-1) for homogeneous f in m <= 2
// variables: points of the projective line with multiplicities (no
// blowups are ever needed in dimension one).
ResolutionData resolve_binary_form(const QPoly& f);

} // namespace izeta
