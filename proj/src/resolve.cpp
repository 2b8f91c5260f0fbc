#include "izeta/resolve.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace izeta {

namespace {

QPoly var_x() { return QPoly::variable(0); }
QPoly var_y() { return QPoly::variable(1); }

// Substitute y := x*y (first blowup chart) or x := x*y (second chart).
QPoly chart_down(const QPoly& g, int chart) {
    if (chart == 1) return g.substitute(1, var_x() * var_y());
    return g.substitute(0, var_x() * var_y());
}

// Coefficients (a, b) of the degree-one part a*x + b*y of g.
std::pair<Rational, Rational> linear_part(const QPoly& g) {
    Rational a(0), b(0);
    for (const auto& [e, c] : g.terms()) {
        if (e[0] == 1 && e[1] == 0 && e[2] == 0 && e[3] == 0) a = c;
        if (e[0] == 0 && e[1] == 1 && e[2] == 0 && e[3] == 0) b = c;
    }
    return {a, b};
}

// One squarefree factor of the input, carried through the blowups.
struct Germ {
    std::size_t block; // index into the factor list (for multiplicities)
    QPoly g;           // local equation at the current site, g(0,0) = 0
};

// A point of the current surface where the total transform may fail to
// have normal crossings: at most two exceptional axes ({x=0} and {y=0}
// in the local chart) plus the strict transforms passing through it.
struct Site {
    std::optional<std::size_t> axis_x, axis_y; // component indices
    std::vector<Germ> germs;
};

struct Crossing {
    std::string a, b;
    long degree; // number of geometric intersection points (conjugates)
};

struct CurveBuilder {
    const std::vector<std::pair<QPoly, int>>& blocks;
    long budget;
    long blowups = 0;
    std::vector<Component> comps;
    std::map<std::string, long> cluster_deg; // branch id -> conjugate degree
    std::vector<Crossing> crossings;
    long n_exc = 0, n_branch = 0;

    CurveBuilder(const std::vector<std::pair<QPoly, int>>& b, long bud)
        : blocks(b), budget(bud) {}

    std::size_t add_exceptional(long N, long nu) {
        comps.emplace_back("E" + std::to_string(++n_exc), N, nu, true);
        return comps.size() - 1;
    }

    std::size_t add_branch(std::size_t block, long degree) {
        std::string id = "B" + std::to_string(++n_branch);
        comps.emplace_back(id, blocks[block].second, 1, false);
        cluster_deg[id] = degree;
        return comps.size() - 1;
    }

    void cross(std::size_t i, std::size_t j, long degree) {
        crossings.push_back({comps[i].id, comps[j].id, degree});
    }

    // True when the total transform already has normal crossings at the
    // site: every strict germ is smooth, the divisors through the point
    // number at most two, and all pairwise tangents are distinct.
    bool is_snc(const Site& site) const {
        int naxes = (site.axis_x ? 1 : 0) + (site.axis_y ? 1 : 0);
        if (static_cast<long>(site.germs.size()) + naxes > 2) return false;
        std::vector<std::pair<Rational, Rational>> tangents;
        for (const Germ& germ : site.germs) {
            if (germ.g.order_at_origin() != 1) return false;
            tangents.push_back(linear_part(germ.g));
        }
        for (const auto& [a, b] : tangents) {
            if (site.axis_x && b == 0) return false; // tangent to {x = 0}
            if (site.axis_y && a == 0) return false; // tangent to {y = 0}
        }
        if (tangents.size() == 2) {
            const auto& [a1, b1] = tangents[0];
            const auto& [a2, b2] = tangents[1];
            if (a1 * b2 - a2 * b1 == 0) return false;
        }
        return true;
    }

    void record_terminal(const Site& site) {
        std::vector<std::size_t> ids;
        for (const Germ& germ : site.germs) ids.push_back(add_branch(germ.block, 1));
        if (site.axis_x && site.axis_y) cross(*site.axis_x, *site.axis_y, 1);
        if (site.axis_x)
            for (std::size_t b : ids) cross(*site.axis_x, b, 1);
        if (site.axis_y)
            for (std::size_t b : ids) cross(*site.axis_y, b, 1);
        if (ids.size() == 2) cross(ids[0], ids[1], 1);
    }

    void process(const Site& site) {
        if (is_snc(site)) {
            record_terminal(site);
            return;
        }
        if (++blowups > budget) {
            std::ostringstream os;
            os << "blowup budget of " << budget << " exhausted before reaching normal crossings";
            throw ResolutionBudgetExceeded(os.str());
        }

        long N = 0, nu = 2;
        if (site.axis_x) { N += comps[*site.axis_x].N; nu += comps[*site.axis_x].nu - 1; }
        if (site.axis_y) { N += comps[*site.axis_y].N; nu += comps[*site.axis_y].nu - 1; }
        std::vector<long> mult(site.germs.size());
        for (std::size_t i = 0; i < site.germs.size(); ++i) {
            mult[i] = site.germs[i].g.order_at_origin();
            N += blocks[site.germs[i].block].second * mult[i];
        }
        std::size_t enew = add_exceptional(N, nu);

        // First chart (x, y) -> (x, x*y): the new exceptional curve is
        // {x = 0}; the old {y = 0} axis survives as {y = 0}; the old
        // {x = 0} axis is visible only in the second chart.
        std::vector<QPoly> strict1;
        for (std::size_t i = 0; i < site.germs.size(); ++i)
            strict1.push_back(chart_down(site.germs[i].g, 1).divide_monomial(0, mult[i]));

        // Point where the new curve meets the old {y = 0} axis.
        if (site.axis_y) {
            Site child;
            child.axis_x = enew;
            child.axis_y = site.axis_y;
            for (std::size_t i = 0; i < strict1.size(); ++i)
                if (strict1[i].order_at_origin() != 0)
                    child.germs.push_back({site.germs[i].block, strict1[i]});
            process(child);
        }

        // Restrictions of the strict transforms to the new curve; their
        // roots are the finite chart-1 points needing attention.
        std::vector<UniPoly> bar(strict1.size());
        for (std::size_t i = 0; i < strict1.size(); ++i)
            bar[i] = qpoly_to_uni(strict1[i].substitute(0, QPoly(Rational(0))), 1);

        std::vector<Rational> roots;
        std::vector<UniPoly> residual(bar.size());
        for (std::size_t i = 0; i < bar.size(); ++i) {
            UniPoly rem = bar[i];
            for (const auto& [r, k] : uni_rational_roots(bar[i])) {
                if (!(site.axis_y && r == 0) && // t = 0 was handled above
                    std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
                UniPoly lin{-r, Rational(1)};
                for (long j = 0; j < k; ++j) rem = uni_exact_div(rem, lin);
            }
            residual[i] = rem;
        }
        std::sort(roots.begin(), roots.end());
        for (const Rational& r : roots) {
            Site child;
            child.axis_x = enew;
            QPoly shift = var_y() + QPoly(r);
            for (std::size_t i = 0; i < strict1.size(); ++i) {
                QPoly g = strict1[i].substitute(1, shift);
                if (g.order_at_origin() != 0) child.germs.push_back({site.germs[i].block, g});
            }
            process(child);
        }

        // Non-rational points on the new curve: acceptable only as
        // conjugate families of simple transverse crossings.
        for (std::size_t i = 0; i < residual.size(); ++i) {
            if (uni_degree(residual[i]) <= 0) continue;
            for (std::size_t j = i + 1; j < residual.size(); ++j) {
                if (uni_degree(residual[j]) <= 0) continue;
                if (uni_degree(uni_gcd(residual[i], residual[j])) > 0)
                    throw ResolutionBudgetExceeded(
                        "two strict transforms meet at a non-rational point; exact "
                        "rational arithmetic cannot blow up there");
            }
            for (const auto& [phi, k] : uni_squarefree(residual[i])) {
                if (uni_degree(phi) <= 0) continue;
                if (k >= 2)
                    throw ResolutionBudgetExceeded(
                        "a strict transform is singular or tangent at a non-rational "
                        "point; exact rational arithmetic cannot blow up there");
                std::size_t b = add_branch(site.germs[i].block, uni_degree(phi));
                cross(enew, b, uni_degree(phi));
            }
        }

        // Second chart (x, y) -> (x*y, y): covers the remaining point of
        // the new curve, where the old {x = 0} axis reappears.
        bool need2 = site.axis_x.has_value();
        std::vector<QPoly> strict2;
        for (std::size_t i = 0; i < site.germs.size(); ++i) {
            strict2.push_back(chart_down(site.germs[i].g, 2).divide_monomial(1, mult[i]));
            if (strict2[i].order_at_origin() != 0) need2 = true;
        }
        if (need2) {
            Site child;
            child.axis_x = site.axis_x; // may be empty
            child.axis_y = enew;
            for (std::size_t i = 0; i < strict2.size(); ++i)
                if (strict2[i].order_at_origin() != 0)
                    child.germs.push_back({site.germs[i].block, strict2[i]});
            process(child);
        }
    }
};

EPoly point_class(long degree) { return EPoly(BigInt(degree)); }

// Assembles ResolutionData from the builder's components and crossings.
ResolutionData assemble_curve(const CurveBuilder& bld, const RegionSpec& region) {
    ResolutionData res;
    res.m = 2;
    res.projective = false;
    res.region = region;
    res.components = bld.comps;

    std::map<std::string, long> k_count;          // crossing points on each component
    std::map<std::string, std::vector<Puncture>> punct;
    std::map<std::string, long> comp_N;
    for (const Component& c : bld.comps) comp_N[c.id] = c.N;
    std::map<std::set<std::string>, long> pair_deg;
    for (const Crossing& cr : bld.crossings) {
        k_count[cr.a] += cr.degree;
        k_count[cr.b] += cr.degree;
        pair_deg[{cr.a, cr.b}] += cr.degree;
        for (long t = 0; t < cr.degree; ++t) {
            punct[cr.a].push_back({cr.b, comp_N[cr.b]});
            punct[cr.b].push_back({cr.a, comp_N[cr.a]});
        }
    }

    const bool whole = region.kind == RegionSpec::Kind::WholeSpace;
    EPoly total = whole ? EPoly::L(2) + EPoly::L() * EPoly(bld.n_exc)
                        : (bld.n_exc > 0 ? EPoly::L() * EPoly(bld.n_exc) + EPoly::one()
                                         : EPoly::one());

    // The empty stratum: complement class for the whole plane, nothing
    // over the point otherwise. Filled in after the others.
    EPoly accounted;

    for (const Component& c : bld.comps) {
        Stratum st;
        st.I = {c.id};
        long k = k_count.count(c.id) ? k_count[c.id] : 0;
        if (c.is_exceptional) {
            st.kind = StratumKind::P1;
            st.cls_global = EPoly::L() + EPoly(1 - k);
            st.puncture_data = punct[c.id];
        } else if (whole) {
            // A strict branch away from its crossings; for homogeneous
            // input each conjugate branch is a line through the origin.
            st.kind = StratumKind::Explicit;
            long deg = bld.cluster_deg.at(c.id);
            st.cls_global = EPoly::L() * EPoly(BigInt(deg)) - EPoly(BigInt(k));
        } else {
            st.kind = StratumKind::Zero;
            st.cls_global = EPoly();
        }
        accounted += st.cls_global;
        res.strata[st.I] = std::move(st);
    }
    for (const auto& [pr, deg] : pair_deg) {
        Stratum st;
        st.I = pr;
        st.kind = StratumKind::Point;
        st.cls_global = point_class(deg);
        accounted += st.cls_global;
        res.strata[st.I] = std::move(st);
    }

    if (!whole && bld.n_exc == 0) {
        // The identity map resolves: the fiber over the point is the
        // point itself, sitting on every branch at once.
        for (auto& [key, st] : res.strata) {
            st.kind = key.size() >= 2 ? StratumKind::Point : StratumKind::Zero;
            st.cls_global = EPoly();
        }
        std::set<std::string> all;
        for (const Component& c : bld.comps) all.insert(c.id);
        Stratum deep;
        deep.I = all;
        deep.kind = StratumKind::Point;
        deep.cls_global = EPoly::one();
        res.strata[all] = std::move(deep);
        accounted = EPoly::one();
    }

    Stratum empty;
    empty.I = {};
    empty.kind = whole ? StratumKind::Explicit : StratumKind::Zero;
    empty.cls_global = whole ? total - accounted : EPoly();
    res.strata[{}] = std::move(empty);

    res.total_class = total;
    validate_resolution(res);
    return res;
}

} // namespace

ResolutionData resolve_plane_curve(const QPoly& f, const Rational& ax, const Rational& ay,
                                   const RegionSpec& region, long budget) {
    if (f.is_zero()) throw ZeroPolynomial("resolve_plane_curve: zero polynomial");
    if (f.vars_used() & ~0b11u)
        throw InputError("resolve_plane_curve: expected a polynomial in x, y");
    if (region.kind == RegionSpec::Kind::Hyperplane)
        throw InputError("resolve_plane_curve: hyperplane regions are not supported here");
    if (f.eval({ax, ay, Rational(0), Rational(0)}) != 0)
        throw NotACurvePoint("resolve_plane_curve: the point does not lie on the curve");

    QPoly g = f;
    if (ax != 0) g = g.substitute(0, var_x() + QPoly(ax));
    if (ay != 0) g = g.substitute(1, var_y() + QPoly(ay));

    if (region.kind == RegionSpec::Kind::WholeSpace && !g.is_homogeneous(nullptr))
        throw InputError(
            "resolve_plane_curve: the whole-space region needs a homogeneous input, "
            "whose only singular point is the cone vertex");

    std::vector<std::pair<QPoly, int>> blocks = bivariate_squarefree(g);
    CurveBuilder bld(blocks, budget);

    Site site0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].first.order_at_origin() != 0)
            site0.germs.push_back({i, blocks[i].first});
    bld.process(site0);

    return assemble_curve(bld, region);
}

ResolutionData resolve_binary_form(const QPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("resolve_binary_form: zero polynomial");
    if (f.vars_used() & ~0b11u)
        throw InputError("resolve_binary_form: expected a form in x, y");
    int deg = 0;
    if (!f.is_homogeneous(&deg))
        throw InputError("resolve_binary_form: the input must be homogeneous");
    if (deg == 0) throw InputError("resolve_binary_form: the form must be nonconstant");

    ResolutionData res;
    res.projective = true;
    res.region = RegionSpec::whole_space();

    if (!(f.vars_used() & 0b10u)) {
        // One variable: f = c * x^deg cuts out the empty divisor on P^0.
        res.m = 1;
        res.total_class = EPoly::one();
        Stratum st;
        st.I = {};
        st.kind = StratumKind::Point;
        st.cls_global = EPoly::one();
        res.strata[{}] = std::move(st);
        validate_resolution(res);
        return res;
    }

    res.m = 2;
    res.total_class = EPoly::L() + EPoly::one();

    // Root clusters of the form on the projective line.
    struct Cluster { long mult, degree; };
    std::vector<Cluster> clusters;
    for (const auto& [block, mult] : bivariate_squarefree(f)) {
        if (block.total_degree() == 0) continue;
        if (!(block.vars_used() & 0b10u)) { // a power of x: the point [0 : 1]
            clusters.push_back({mult, 1});
            continue;
        }
        long ydeg = 0; // y | block gives the point [1 : 0]
        QPoly b = block;
        while (true) {
            bool div_y = true;
            for (const auto& [e, c] : b.terms()) { (void)c; if (e[1] == 0) div_y = false; }
            if (!div_y) break;
            b = b.divide_monomial(1, 1);
            ++ydeg;
        }
        if (ydeg > 0) clusters.push_back({mult, 1});
        UniPoly bt = qpoly_to_uni(b.substitute(1, QPoly(Rational(1))), 0);
        UniPoly rem = bt;
        for (const auto& [r, k] : uni_rational_roots(bt)) {
            clusters.push_back({mult, 1});
            UniPoly lin{-r, Rational(1)};
            for (long j = 0; j < k; ++j) rem = uni_exact_div(rem, lin);
        }
        if (uni_degree(rem) > 0) clusters.push_back({mult, uni_degree(rem)});
    }

    long total_pts = 0;
    long idx = 0;
    std::vector<Puncture> punct;
    for (const Cluster& cl : clusters) {
        std::string id = "P" + std::to_string(++idx);
        res.components.emplace_back(id, cl.mult, 1, false);
        total_pts += cl.degree;
        Stratum st;
        st.I = {id};
        st.kind = StratumKind::Point;
        st.cls_global = point_class(cl.degree);
        res.strata[st.I] = std::move(st);
        for (long t = 0; t < cl.degree; ++t) punct.push_back({id, cl.mult});
    }

    Stratum open;
    open.I = {};
    open.kind = StratumKind::P1;
    open.cls_global = EPoly::L() + EPoly(1 - total_pts);
    open.puncture_data = std::move(punct);
    res.strata[{}] = std::move(open);

    validate_resolution(res);
    return res;
}

} // namespace izeta
