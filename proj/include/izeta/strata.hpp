/*
 * strata.hpp
 * ----------
 * Data model for embedded resolutions: components with numerical data
 * (N_i, nu_i), strata of the exceptional arrangement with their classes
 * and character twists, and builders for the monomial (toric) case.
 *
 * A ResolutionData value is immutable once a builder returns it;
 * concurrent reads are safe.
 */
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "izeta/epoly.hpp"

namespace izeta {

// Where the arc origins live: the whole ambient space, a single point
// (the origin after translating), or a coordinate hyperplane {x_k = 0}.
struct RegionSpec {
    enum class Kind { WholeSpace, Origin, Hyperplane };
    Kind kind = Kind::WholeSpace;
    int axis = -1; // hyperplane coordinate index, Kind::Hyperplane only

    static RegionSpec whole_space() { return {Kind::WholeSpace, -1}; }
    static RegionSpec origin() { return {Kind::Origin, -1}; }
    static RegionSpec hyperplane(int axis) { return {Kind::Hyperplane, axis}; }
    bool operator==(const RegionSpec& o) const { return kind == o.kind && axis == o.axis; }
    std::string to_string() const;
    static RegionSpec parse(const std::string& text);
};

// One component of the simple-normal-crossings divisor: N = multiplicity
// of the transformed polynomial along it, nu = 1 + discrepancy of the
// pulled-back volume form.
struct Component {
    std::string id;
    long N = 1;
    long nu = 1;
    bool is_exceptional = false;

    Component() = default;
    Component(std::string id_, long N_, long nu_, bool exc)
        : id(std::move(id_)), N(N_), nu(nu_), is_exceptional(exc) {
        if (N < 1 || nu < 1)
            throw InvariantViolation("component " + id + ": require N >= 1 and nu >= 1");
    }

    bool operator==(const Component& o) const {
        return id == o.id && N == o.N && nu == o.nu && is_exceptional == o.is_exceptional;
    }
};

// A puncture of a one-dimensional stratum: the crossing with component
// `at`, where the unit part of the transformed polynomial has local
// exponent e (= N of the crossing component, up to the degree-zero
// normalization). Conjugate point clusters repeat the entry once per
// geometric point.
struct Puncture {
    std::string at;
    long e = 0;
    bool operator==(const Puncture& o) const { return at == o.at && e == o.e; }
};

// How character twists of a stratum class are computed.
enum class StratumKind {
    Zero,       // empty intersection with the region: class 0
    Point,      // zero-dimensional: every character twist equals the class
    Torus,      // (L-1)^k carrying a monomial function (see exponents)
    P1,         // projective line minus punctures (see puncture_data)
    Explicit,   // only the stored twisted map is available
};

struct Stratum {
    std::set<std::string> I;            // component ids cut out
    EPoly cls_global;                   // class of E_I^o within the region
    StratumKind kind = StratumKind::Explicit;
    std::vector<long> exponents;        // Torus: exponents of the unit monomial
    std::vector<Puncture> puncture_data; // P1: punctures with local exponents
    std::map<Character, EPoly> twisted; // cached / explicitly supplied twists

    bool operator==(const Stratum& o) const {
        return I == o.I && cls_global == o.cls_global && kind == o.kind &&
               exponents == o.exponents && puncture_data == o.puncture_data &&
               twisted == o.twisted;
    }
};

struct ResolutionData {
    long m = 1;                 // ambient affine dimension
    bool projective = false;    // strata live on a resolution of P^{m-1}
    RegionSpec region;
    std::vector<Component> components;
    std::map<std::set<std::string>, Stratum> strata;
    EPoly total_class;          // class of the preimage of the region

    const Component& component(const std::string& id) const;
    bool has_component(const std::string& id) const;
    // True iff ord(alpha) divides N_i for every i in I.
    bool in_j_d(const std::set<std::string>& I, long d) const;
    // Fresh id of the form prefix<k> not colliding with existing ones.
    std::string fresh_id(const std::string& prefix) const;

    bool operator==(const ResolutionData& o) const {
        return m == o.m && projective == o.projective && region == o.region &&
               components == o.components && strata == o.strata &&
               total_class == o.total_class;
    }
};

// Checks positivity, id resolution, and (when every class is Tate)
// additivity of the strata classes against total_class. Throws
// InvariantViolation on failure.
void validate_resolution(const ResolutionData& res);

// The identity map as a resolution of the monomial x^w on affine m-space.
ResolutionData from_monomial(const std::vector<long>& w, long m, const RegionSpec& region);

// Class of the alpha-eigenpart of the cyclic cover of a torus stratum
// carrying a monomial function with the given exponents: cls_global when
// every exponent vanishes mod ord(alpha), otherwise 0.
EPoly twisted_class_torus(const Stratum& stratum, const std::vector<long>& exponents,
                          long d, const Character& alpha);

// Class of the alpha-eigenpart of the degree-d cyclic cover of a
// projective line minus the listed punctures, where the covering unit
// has local exponent e_j at puncture j. Requires sum e_j = 0 mod
// ord(alpha) (throws DegreeMismatch otherwise).
EPoly cover_eigenclass_p1(const std::vector<Puncture>& punctures, long d,
                          const Character& alpha);

// Class of the full degree-d cover of the punctured line (the sum over
// all characters of order dividing d of cover_eigenclass_p1); computed
// independently via component counting and Riemann-Hurwitz.
EPoly p1_cover_class(const std::vector<Puncture>& punctures, long d);

// Twist dispatcher: trivial character or cached value first, then the
// kind-specific rule. Throws MissingTwistedClass when no rule applies.
EPoly twisted_class(const Stratum& stratum, const Character& alpha);

// All characters of order dividing d (d values).
std::vector<Character> characters_dividing(long d);

// Returns a copy of `res` with one extra point blowup at a free (smooth,
// non-crossing) point of exceptional component `id`: a new component
// (N, nu+1), adjusted incidences and classes. The zeta functions of the
// result must equal those of `res`.
ResolutionData blowup_free_point(const ResolutionData& res, const std::string& id);

} // namespace izeta
