/*
 * strata.cpp
 * ----------
 * Resolution data model: monomial builder, character twists of torus
 * and punctured-line strata, cover reconstruction, invariant checks,
 * and the free-point blowup transform used by the resolution-
 * independence tests.
 */
#include "izeta/strata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace izeta {

std::string RegionSpec::to_string() const {
    switch (kind) {
    case Kind::WholeSpace: return "whole-space";
    case Kind::Origin: return "origin";
    case Kind::Hyperplane: return "hyperplane:" + std::to_string(axis);
    }
    throw Error("unreachable region kind");
}

RegionSpec RegionSpec::parse(const std::string& text) {
    if (text == "whole-space" || text == "all" || text == "X") return whole_space();
    if (text == "origin") return origin();
    if (text.rfind("hyperplane:", 0) == 0) {
        try {
            int axis = std::stoi(text.substr(11));
            if (axis < 0) throw std::out_of_range("negative");
            return hyperplane(axis);
        } catch (const std::exception&) {
            throw ParseError("region: bad hyperplane axis in \"" + text + "\"");
        }
    }
    throw ParseError("region: expected whole-space, origin or hyperplane:<k>, got \"" +
                     text + "\"");
}

const Component& ResolutionData::component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return c;
    throw InputError("unknown component id: " + id);
}

bool ResolutionData::has_component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return true;
    return false;
}

bool ResolutionData::in_j_d(const std::set<std::string>& I, long d) const {
    for (const auto& id : I)
        if (component(id).N % d != 0) return false;
    return true;
}

std::string ResolutionData::fresh_id(const std::string& prefix) const {
    for (long k = 1;; ++k) {
        std::string id = prefix + std::to_string(k);
        if (!has_component(id)) return id;
    }
}

void validate_resolution(const ResolutionData& res) {
    if (res.m < 1) throw InvariantViolation("ambient dimension must be >= 1");
    std::set<std::string> ids;
    for (const auto& c : res.components) {
        if (c.N < 1 || c.nu < 1)
            throw InvariantViolation("component " + c.id + ": require N >= 1 and nu >= 1");
        if (!ids.insert(c.id).second)
            throw InvariantViolation("duplicate component id: " + c.id);
    }
    bool all_tate = res.total_class.is_tate();
    for (const auto& [I, st] : res.strata) {
        if (I != st.I) throw InvariantViolation("stratum key does not match its id set");
        for (const auto& id : I)
            if (!ids.count(id))
                throw InvariantViolation("stratum references unknown component: " + id);
        for (const auto& p : st.puncture_data)
            if (!ids.count(p.at))
                throw InvariantViolation("puncture references unknown component: " + p.at);
        if (!st.cls_global.is_tate()) all_tate = false;
    }
    if (all_tate) {
        EPoly sum;
        for (const auto& [I, st] : res.strata) sum += st.cls_global;
        if (!(sum == res.total_class))
            throw InvariantViolation(
                "strata classes are not additive: sum " + sum.to_string() +
                " != total " + res.total_class.to_string());
    }
}

ResolutionData from_monomial(const std::vector<long>& w, long m, const RegionSpec& region) {
    if (m < 1) throw InputError("ambient dimension must be >= 1");
    if (static_cast<long>(w.size()) > m)
        throw InputError("more exponents than ambient dimension");
    std::vector<int> supp;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) throw InputError("negative exponent in monomial");
        if (w[i] > 0) supp.push_back(static_cast<int>(i));
    }
    if (supp.empty()) throw ZeroPolynomial("monomial builder requires a nonconstant monomial");
    if (region.kind == RegionSpec::Kind::Hyperplane &&
        (region.axis < 0 || region.axis >= m))
        throw InputError("hyperplane axis out of range");

    ResolutionData res;
    res.m = m;
    res.region = region;
    const long s = static_cast<long>(supp.size());
    for (int i : supp)
        res.components.emplace_back("H" + std::to_string(i + 1), w[static_cast<size_t>(i)],
                                    1, false);

    const bool region_on_axis = region.kind == RegionSpec::Kind::Hyperplane &&
                                std::count(supp.begin(), supp.end(), region.axis) > 0;
    // Iterate over all subsets I of the support.
    for (unsigned long mask = 0; mask < (1UL << supp.size()); ++mask) {
        Stratum st;
        std::vector<long> unit_exps;
        bool axis_in_I = false;
        for (size_t b = 0; b < supp.size(); ++b) {
            if (mask & (1UL << b)) {
                st.I.insert("H" + std::to_string(supp[b] + 1));
                if (supp[b] == region.axis) axis_in_I = true;
            } else {
                unit_exps.push_back(w[static_cast<size_t>(supp[b])]);
            }
        }
        const long free_dims = m - s;
        const long torus_dims = s - static_cast<long>(st.I.size());
        EPoly torus = (EPoly::L(1) - EPoly::one()).pow(static_cast<unsigned long>(torus_dims));
        switch (region.kind) {
        case RegionSpec::Kind::WholeSpace:
            st.cls_global = torus * EPoly::L(free_dims);
            break;
        case RegionSpec::Kind::Origin:
            st.cls_global = (st.I.size() == static_cast<size_t>(s)) ? EPoly::one() : EPoly();
            break;
        case RegionSpec::Kind::Hyperplane:
            if (region_on_axis)
                st.cls_global = axis_in_I ? torus * EPoly::L(free_dims) : EPoly();
            else
                st.cls_global = torus * EPoly::L(free_dims - 1);
            break;
        }
        if (st.cls_global.is_zero()) {
            st.kind = StratumKind::Zero;
        } else {
            st.kind = StratumKind::Torus;
            st.exponents = unit_exps;
        }
        res.strata.emplace(st.I, std::move(st));
    }
    switch (region.kind) {
    case RegionSpec::Kind::WholeSpace: res.total_class = EPoly::L(m); break;
    case RegionSpec::Kind::Origin: res.total_class = EPoly::one(); break;
    case RegionSpec::Kind::Hyperplane: res.total_class = EPoly::L(m - 1); break;
    }
    validate_resolution(res);
    return res;
}

EPoly twisted_class_torus(const Stratum& stratum, const std::vector<long>& exponents,
                          long d, const Character& alpha) {
    if (stratum.kind != StratumKind::Torus)
        throw NotToric("twisted_class_torus requires a torus stratum");
    const long r = alpha.order();
    if (d % r != 0) throw InputError("character order must divide the cover degree");
    if (alpha.is_trivial()) return stratum.cls_global;
    for (long e : exponents)
        if (((e % r) + r) % r != 0) return EPoly();
    return stratum.cls_global;
}

namespace {

// Fractional part of a rational, in [0, 1).
Rational frac(const Rational& x) {
    BigInt num = x.get_num(), den = x.get_den();
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rational f(rem, den);
    f.canonicalize();
    return f;
}

long gcd_long(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

} // namespace

EPoly cover_eigenclass_p1(const std::vector<Puncture>& punctures, long d,
                          const Character& alpha) {
    if (d < 1) throw InputError("cover degree must be >= 1");
    const long r = alpha.order();
    if (d % r != 0) throw InputError("character order must divide the cover degree");
    long sum_e = 0;
    for (const auto& p : punctures) sum_e += p.e;
    if (((sum_e % d) + d) % d != 0)
        throw DegreeMismatch("puncture exponents do not sum to 0 mod " + std::to_string(d));

    const long k = static_cast<long>(punctures.size());
    const EPoly line_class = EPoly::L(1) + EPoly::one() - EPoly(BigInt(k));
    if (alpha.is_trivial()) return line_class;

    const Rational gamma = alpha.gamma();
    std::vector<Rational> mu;
    mu.reserve(punctures.size());
    bool any_nonzero = false;
    for (const auto& p : punctures) {
        Rational m = frac(Rational(-p.e) * gamma);
        if (m != 0) any_nonzero = true;
        mu.push_back(m);
    }
    if (!any_nonzero) return line_class;

    Rational a(-1), b(-1);
    long c = 0;
    for (const Rational& m : mu) {
        if (m == 0) {
            ++c;
        } else {
            a += m;
            b += 1 - m;
        }
    }
    if (a.get_den() != 1 || b.get_den() != 1 || a < 0 || b < 0)
        throw InvariantViolation("cover eigenclass: non-integral Hodge numbers");
    EPoly result = -(EPoly::monomial(1, 0, a.get_num()) +
                     EPoly::monomial(0, 1, b.get_num()) + EPoly(BigInt(c)));
    if (result.chi_top() != BigInt(2 - k))
        throw InvariantViolation("cover eigenclass: Euler characteristic mismatch");
    return result;
}

EPoly p1_cover_class(const std::vector<Puncture>& punctures, long d) {
    if (d < 1) throw InputError("cover degree must be >= 1");
    long sum_e = 0;
    for (const auto& p : punctures) sum_e += p.e;
    if (((sum_e % d) + d) % d != 0)
        throw DegreeMismatch("puncture exponents do not sum to 0 mod " + std::to_string(d));
    const long k = static_cast<long>(punctures.size());
    long g0 = d;
    long fiber_total = 0;
    for (const auto& p : punctures) {
        g0 = gcd_long(g0, p.e);
        fiber_total += gcd_long(p.e, d);
    }
    // Euler characteristic of the completed cover (Riemann-Hurwitz),
    // distributed over g0 isomorphic connected components of genus g.
    const long chi_bar = d * (2 - k) + fiber_total;
    if (chi_bar % g0 != 0 || ((chi_bar / g0) % 2) != 0)
        throw InvariantViolation("inconsistent cover data: fractional genus");
    const long g = (2 - chi_bar / g0) / 2;
    if (g < 0) throw InvariantViolation("inconsistent cover data: negative genus");
    EPoly compact = EPoly::L(1) + EPoly::one() -
                    (EPoly::monomial(1, 0) + EPoly::monomial(0, 1)) * EPoly(BigInt(g));
    return compact * EPoly(BigInt(g0)) - EPoly(BigInt(fiber_total));
}

EPoly twisted_class(const Stratum& stratum, const Character& alpha) {
    if (alpha.is_trivial()) return stratum.cls_global;
    auto it = stratum.twisted.find(alpha);
    if (it != stratum.twisted.end()) return it->second;
    switch (stratum.kind) {
    case StratumKind::Zero:
        return EPoly();
    case StratumKind::Point:
        // The cover of a reduced point set splits as the regular
        // representation: every character receives the full class.
        return stratum.cls_global;
    case StratumKind::Torus:
        return twisted_class_torus(stratum, stratum.exponents, alpha.order(), alpha);
    case StratumKind::P1:
        return cover_eigenclass_p1(stratum.puncture_data, alpha.order(), alpha);
    case StratumKind::Explicit:
        break;
    }
    throw MissingTwistedClass("no twisted class available for character " +
                              alpha.to_string());
}

std::vector<Character> characters_dividing(long d) {
    if (d < 1) throw InputError("character modulus must be >= 1");
    std::vector<Character> out;
    out.reserve(static_cast<size_t>(d));
    for (long j = 0; j < d; ++j) out.emplace_back(j, d);
    return out;
}

ResolutionData blowup_free_point(const ResolutionData& res, const std::string& id) {
    const Component& parent = res.component(id);
    if (!parent.is_exceptional)
        throw InputError("free-point blowup requires an exceptional component");
    auto host = res.strata.find(std::set<std::string>{id});
    if (host == res.strata.end() || host->second.kind != StratumKind::P1)
        throw InputError("component " + id + " has no one-dimensional stratum record");

    ResolutionData out = res;
    const std::string nid = out.fresh_id("E");
    out.components.emplace_back(nid, parent.N, parent.nu + 1, true);

    Stratum& hs = out.strata.at(std::set<std::string>{id});
    hs.cls_global -= EPoly::one();
    hs.puncture_data.push_back({nid, parent.N});

    Stratum ns;
    ns.I = {nid};
    ns.cls_global = EPoly::L(1); // projective line minus the one crossing
    ns.kind = StratumKind::P1;
    ns.puncture_data = {{id, parent.N}};
    out.strata.emplace(ns.I, std::move(ns));

    Stratum ps;
    ps.I = {id, nid};
    ps.cls_global = EPoly::one();
    ps.kind = StratumKind::Point;
    out.strata.emplace(ps.I, std::move(ps));

    out.total_class += EPoly::L(1);
    validate_resolution(out);
    return out;
}

} // namespace izeta
