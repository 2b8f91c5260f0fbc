#include "izeta/engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace izeta {

namespace {

// Least common multiset of linear factors, by per-value max multiplicity.
std::multiset<std::pair<long, long>> factor_lcm(const std::multiset<std::pair<long, long>>& a,
                                                const std::multiset<std::pair<long, long>>& b) {
    std::multiset<std::pair<long, long>> out = a;
    std::map<std::pair<long, long>, long> have;
    for (const auto& f : a) ++have[f];
    std::map<std::pair<long, long>, long> want;
    for (const auto& f : b) ++want[f];
    for (const auto& [f, k] : want)
        for (long t = have.count(f) ? have[f] : 0; t < k; ++t) out.insert(f);
    return out;
}

UniPoly linear_factor(const std::pair<long, long>& f) {
    return UniPoly{Rational(f.second), Rational(f.first)}; // nu + N s
}

UniPoly lift_num(const UniPoly& num, const std::multiset<std::pair<long, long>>& own,
                 const std::multiset<std::pair<long, long>>& target) {
    std::multiset<std::pair<long, long>> extra = target;
    for (const auto& f : own) extra.erase(extra.find(f));
    UniPoly out = num;
    for (const auto& f : extra) out = uni_mul(out, linear_factor(f));
    return out;
}

} // namespace

bool TopoZeta::operator==(const TopoZeta& o) const {
    auto lcm = factor_lcm(den, o.den);
    return lift_num(num, den, lcm) == lift_num(o.num, o.den, lcm);
}

Rational TopoZeta::eval(const Rational& s) const {
    Rational val = uni_eval(num, s);
    for (const auto& [N, nu] : den) {
        Rational f = Rational(N) * s + Rational(nu);
        if (f == 0) throw InputError("TopoZeta::eval: a denominator factor vanishes at s");
        val /= f;
    }
    return val;
}

std::string TopoZeta::to_string() const {
    std::ostringstream os;
    os << "(" << uni_to_string(num, "s") << ")";
    if (!den.empty()) {
        os << " / (";
        bool first = true;
        for (const auto& f : den) {
            if (!first) os << " * ";
            first = false;
            os << "(" << uni_to_string(linear_factor(f), "s") << ")";
        }
        os << ")";
    }
    return os.str();
}

std::string SpectrumPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, n] : terms) {
        BigInt mag = n >= 0 ? n : BigInt(-n);
        if (first) {
            if (n < 0) os << "-";
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << mag.get_str() << "*";
        os << "t^(" << a.get_str() << ")";
    }
    return os.str();
}

std::string PadicZeta::to_string() const {
    std::ostringstream os;
    os << "(";
    if (num.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [a, c] : num) {
            Rational mag = c >= 0 ? c : Rational(-c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (a == 0) {
                os << mag.get_str();
            } else {
                if (mag != 1) os << mag.get_str() << "*";
                os << "T";
                if (a != 1) os << "^" << a;
            }
        }
    }
    os << ")";
    if (!den.empty()) {
        os << " / (";
        bool first = true;
        for (const Gate& g : den) {
            if (!first) os << " * ";
            first = false;
            Rational w(1);
            for (long t = 0; t < g.n; ++t) w /= q;
            os << "(1 - " << w.get_str() << "*T";
            if (g.N != 1) os << "^" << g.N;
            os << ")";
        }
        os << ")";
    }
    return os.str();
}

ZetaFn motivic_zeta(const ResolutionData& res, const Character& alpha) {
    const long d = alpha.order();
    const EPoly Lm1 = EPoly::L() - EPoly::one();
    ZetaFn total;
    for (const auto& [I, st] : res.strata) {
        if (!res.in_j_d(I, d)) continue;
        EPoly tw = twisted_class(st, alpha);
        if (tw == EPoly()) continue;
        ZetaFn term{tw};
        for (const std::string& id : I) {
            const Component& c = res.component(id);
            term *= ZetaFn::gate_series(Gate(c.N, c.nu)).scale(Lm1);
        }
        total += term;
    }
    return total.scale(EPoly::L(-res.m));
}

ZetaFn homogeneous_zeta(const ResolutionData& proj_res, long r, const Character& alpha) {
    if (!proj_res.projective)
        throw InputError("homogeneous_zeta: needs resolution data over projective space");
    if (r < 1) throw InputError("homogeneous_zeta: the degree must be positive");
    const long d = alpha.order();
    if (r % d != 0) return ZetaFn(); // no eigenpart in these degrees

    std::vector<const Component*> divisible;
    for (const Component& c : proj_res.components)
        if (c.N % d == 0) divisible.push_back(&c);
    if (divisible.size() > 20)
        throw BudgetExceeded("homogeneous_zeta: too many divisible components to enumerate");

    const EPoly Lm1 = EPoly::L() - EPoly::one();
    ZetaFn sum;
    for (std::size_t mask = 0; mask < (std::size_t(1) << divisible.size()); ++mask) {
        std::set<std::string> I;
        for (std::size_t b = 0; b < divisible.size(); ++b)
            if (mask & (std::size_t(1) << b)) I.insert(divisible[b]->id);

        // Relative cover class of I: the alpha-eigenclass summed over all
        // divisible strata containing I.
        EPoly cls;
        for (const auto& [Ip, st] : proj_res.strata) {
            if (!proj_res.in_j_d(Ip, d)) continue;
            if (!std::includes(Ip.begin(), Ip.end(), I.begin(), I.end())) continue;
            cls += twisted_class(st, alpha);
        }
        if (cls == EPoly()) continue;

        ZetaFn term{cls};
        for (std::size_t b = 0; b < divisible.size(); ++b)
            if (mask & (std::size_t(1) << b)) {
                const Component* c = divisible[b];
                term *= ZetaFn::gate_series(Gate(c->N, c->nu)).scale(Lm1) - ZetaFn(1);
            }
        sum += term;
    }
    return sum.scale(Lm1 * EPoly::L(-proj_res.m)) * ZetaFn::gate_inverse(Gate(r, proj_res.m));
}

TopoZeta topological_zeta(const ResolutionData& res, const Character& alpha) {
    const long d = alpha.order();

    // One linear factor per component that appears in a contributing
    // stratum; the common denominator is their product.
    std::map<std::string, std::pair<long, long>> factor_of;
    std::vector<std::pair<std::set<std::string>, Rational>> terms;
    for (const auto& [I, st] : res.strata) {
        if (!res.in_j_d(I, d)) continue;
        BigInt chi = st.cls_global.chi_top();
        if (chi == 0) continue;
        for (const std::string& id : I) {
            const Component& c = res.component(id);
            factor_of[id] = {c.N, c.nu};
        }
        terms.push_back({I, Rational(chi)});
    }

    TopoZeta z;
    z.num = UniPoly{};
    for (const auto& [id, f] : factor_of) z.den.insert(f);
    for (const auto& [I, chi] : terms) {
        UniPoly t{chi};
        for (const auto& [id, f] : factor_of)
            if (!I.count(id)) t = uni_mul(t, linear_factor(f));
        z.num = uni_add(z.num, t);
    }

    // Reduce: strip linear factors that divide the numerator exactly.
    bool changed = true;
    while (changed && !uni_is_zero(z.num)) {
        changed = false;
        for (auto it = z.den.begin(); it != z.den.end(); ++it) {
            auto [quo, rem] = uni_divmod(z.num, linear_factor(*it));
            if (uni_is_zero(rem)) {
                z.num = quo;
                z.den.erase(it);
                changed = true;
                break;
            }
        }
    }
    if (uni_is_zero(z.num)) z.den.clear();

    // Normalize: move the integer content of each factor into the
    // numerator, so (3s + 3) renders as 3 * (s + 1) absorbed upstairs.
    std::multiset<std::pair<long, long>> norm;
    for (const auto& [N, nu] : z.den) {
        const long g = std::gcd(N, nu);
        if (g > 1) z.num = uni_scale(z.num, Rational(1, g));
        norm.insert({N / g, nu / g});
    }
    z.den = std::move(norm);
    return z;
}

PadicZeta padic_specialize(const ZetaFn& z, long q) {
    if (q < 2) throw InputError("padic_specialize: q must be a prime power >= 2");
    PadicZeta out;
    out.q = q;
    out.den = z.gates();
    for (const auto& [a, c] : z.numerator()) {
        Rational val = c.tate_eval(Rational(q));
        if (val != 0) out.num[a] = val;
    }
    return out;
}

EPoly s_alpha_x(const ResolutionData& res, const Character& alpha) {
    if (res.region.kind != RegionSpec::Kind::Origin)
        throw InputError("s_alpha_x: needs resolution data localized at a point of the zero locus");
    const long d = alpha.order();
    const EPoly one_minus_L = EPoly::one() - EPoly::L();

    // Closed form: sum of twisted classes weighted by (1-L)^(|I|-1).
    EPoly closed;
    for (const auto& [I, st] : res.strata) {
        if (!res.in_j_d(I, d)) continue;
        EPoly tw = twisted_class(st, alpha);
        if (tw == EPoly()) continue;
        if (I.empty())
            throw InvariantViolation(
                "s_alpha_x: point-localized data cannot carry a class on the empty stratum");
        closed += tw * one_minus_L.pow(I.size() - 1);
    }

    // Limit route: L^m/(1-L) times the constant term of the zeta function.
    EPoly scaled = motivic_zeta(res, alpha).ct() * EPoly::L(res.m);
    std::optional<EPoly> quot = scaled.exact_divide(one_minus_L);
    if (!quot)
        throw NotDivisible("s_alpha_x: the constant term is not divisible by (1 - L)");
    if (*quot != closed)
        throw InvariantViolation("s_alpha_x: the limit route and the closed form disagree");
    return closed;
}

SpectrumPoly hodge_spectrum(const ResolutionData& res, std::vector<long> d_list) {
    if (d_list.empty()) {
        long l = 1;
        for (const Component& c : res.components) l = std::lcm(l, c.N);
        for (long d = 1; d <= l; ++d)
            if (l % d == 0) d_list.push_back(d);
    }
    std::sort(d_list.begin(), d_list.end());
    d_list.erase(std::unique(d_list.begin(), d_list.end()), d_list.end());

    const long sign = res.m % 2 == 1 ? 1 : -1; // (-1)^(m-1)
    std::map<Rational, BigInt> hsp;
    for (long d : d_list) {
        if (d < 1) throw InputError("hodge_spectrum: orders must be positive");
        for (const Character& a : Character::of_order(d)) {
            EPoly s = s_alpha_x(res, a);
            for (const auto& [p, n] : s.hsp_eval()) {
                Rational expo = Rational(p) + a.gamma();
                hsp[expo] += sign * n;
            }
        }
    }
    hsp[Rational(0)] -= sign; // remove the constant normalization term

    SpectrumPoly sp;
    for (const auto& [a, n] : hsp) {
        if (n == 0) continue;
        sp.terms[Rational(res.m) - a] = n; // reflect exponents through m
    }
    return sp;
}

FEReport check_functional_equation(const ZetaFn& z, long r) {
    return check_functional_equation(z, r, z);
}

FEReport check_functional_equation(const ZetaFn& z, long r, const ZetaFn& z_target) {
    FEReport rep;
    ZetaFn rhs = ZetaFn::s_power(r) * z_target;
    ZetaFn lhs;
    try {
        lhs = z.dual();
    } catch (const NotDualizable& e) {
        rep.ok = false;
        rep.detail = std::string("dual undefined: ") + e.what();
        return rep;
    }
    rep.ok = (lhs == rhs);
    rep.detail = rep.ok ? "dual(Z) = S^" + std::to_string(r) + " * Z holds"
                        : "normalized difference: " + (lhs - rhs).to_string();
    return rep;
}

} // namespace izeta
