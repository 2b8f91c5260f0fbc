/*
 * zeta.cpp
 * --------
 * Canonical-form arithmetic for ZetaFn: gate cancellation by exact
 * polynomial division, cross-multiplied equality, duality, the
 * constant-term operator, series expansion and integer-s evaluation.
 */
#include "izeta/zeta.hpp"

#include <algorithm>
#include <sstream>

namespace izeta {

Gate::Gate(long N_, long n_) : N(N_), n(n_) {
    if (N < 1 || n < 1)
        throw InputError("gate: require N >= 1 and n >= 1, got (" +
                         std::to_string(N_) + "," + std::to_string(n_) + ")");
}

ZetaFn::ZetaFn(const EPoly& constant) {
    if (!constant.is_zero()) num_.emplace(0, constant);
}

ZetaFn ZetaFn::monomial(const EPoly& c, long a) {
    if (a < 0) throw InputError("zeta monomial: S-power must be nonnegative");
    ZetaFn z;
    if (!c.is_zero()) z.num_.emplace(a, c);
    return z;
}

ZetaFn ZetaFn::gate_inverse(const Gate& g) {
    ZetaFn z;
    z.num_.emplace(0, EPoly::one());
    z.den_.insert(g);
    return z;
}

ZetaFn ZetaFn::gate_series(const Gate& g) {
    ZetaFn z;
    z.num_.emplace(g.N, EPoly::L(-g.n));
    z.den_.insert(g);
    return z;
}

void ZetaFn::add_term(long a, const EPoly& c) {
    if (c.is_zero()) return;
    auto it = num_.find(a);
    if (it == num_.end()) {
        num_.emplace(a, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) num_.erase(it);
    }
}

ZetaFn::Numerator gate_polynomial(const Gate& g) {
    ZetaFn::Numerator p;
    p.emplace(0, EPoly::one());
    p.emplace(g.N, -EPoly::L(-g.n));
    return p;
}

namespace {

ZetaFn::Numerator multiply(const ZetaFn::Numerator& a, const ZetaFn::Numerator& b) {
    ZetaFn::Numerator r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            EPoly prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.find(ea + eb);
            if (it == r.end()) {
                r.emplace(ea + eb, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

// Exact division of an S-polynomial by the gate polynomial 1 - L^{-n}S^N.
// The divisor's leading coefficient -L^{-n} is a unit, so long division
// from the top is exact iff the remainder vanishes.
bool divide_by_gate(const ZetaFn::Numerator& num, const Gate& g,
                    ZetaFn::Numerator& quotient) {
    ZetaFn::Numerator rem = num;
    ZetaFn::Numerator quot;
    const EPoly unit_inv = -EPoly::L(g.n); // inverse of the leading coeff -L^{-n}
    while (!rem.empty()) {
        auto lead = std::prev(rem.end());
        const long deg = lead->first;
        if (deg < g.N) return false;
        EPoly qc = lead->second * unit_inv;
        // rem -= qc * S^{deg-N} * (1 - L^{-n}S^N); the S^deg term cancels.
        rem.erase(lead);
        auto it = rem.find(deg - g.N);
        EPoly updated = (it == rem.end() ? EPoly() : it->second) - qc;
        if (it != rem.end()) rem.erase(it);
        if (!updated.is_zero()) rem.emplace(deg - g.N, std::move(updated));
        quot.emplace(deg - g.N, std::move(qc));
    }
    quotient = std::move(quot);
    return true;
}

} // namespace

void ZetaFn::canonicalize() {
    if (num_.empty()) {
        den_.clear();
        return;
    }
    // Repeatedly cancel any gate that exactly divides the numerator,
    // scanning the sorted multiset from the front until a fixpoint; the
    // scan order is fixed so results are deterministic.
    bool changed = true;
    while (changed && !den_.empty()) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            Numerator quotient;
            if (divide_by_gate(num_, *it, quotient)) {
                num_ = std::move(quotient);
                den_.erase(it);
                changed = true;
                break;
            }
        }
    }
}

GateSet gate_lcm(const GateSet& a, const GateSet& b) {
    GateSet out = a;
    for (auto it = b.begin(); it != b.end();) {
        const Gate& g = *it;
        auto nb = static_cast<long>(b.count(g));
        auto na = static_cast<long>(a.count(g));
        for (long k = na; k < nb; ++k) out.insert(g);
        std::advance(it, nb);
    }
    return out;
}

ZetaFn::Numerator ZetaFn::lift_to(const GateSet& target) const {
    Numerator lifted = num_;
    GateSet extra = target;
    for (const Gate& g : den_) extra.erase(extra.find(g));
    for (const Gate& g : extra) lifted = multiply(lifted, gate_polynomial(g));
    return lifted;
}

ZetaFn ZetaFn::operator+(const ZetaFn& o) const {
    ZetaFn r;
    r.den_ = gate_lcm(den_, o.den_);
    Numerator a = lift_to(r.den_);
    Numerator b = o.lift_to(r.den_);
    r.num_ = std::move(a);
    for (auto& [e, c] : b) r.add_term(e, c);
    r.canonicalize();
    return r;
}

ZetaFn ZetaFn::operator-() const {
    ZetaFn r = *this;
    for (auto& [e, c] : r.num_) c = -c;
    return r;
}

ZetaFn ZetaFn::operator*(const ZetaFn& o) const {
    ZetaFn r;
    r.num_ = multiply(num_, o.num_);
    if (r.num_.empty()) return r;
    r.den_ = den_;
    for (const Gate& g : o.den_) r.den_.insert(g);
    r.canonicalize();
    return r;
}

bool ZetaFn::operator==(const ZetaFn& o) const {
    GateSet common = gate_lcm(den_, o.den_);
    return lift_to(common) == o.lift_to(common);
}

ZetaFn ZetaFn::dual() const {
    if (num_.empty()) return ZetaFn();
    // Each gate stays in place and contributes -L^{-n}S^N; together the
    // gates supply S^total, which must clear every reflected exponent.
    long total = 0;
    long ln = 0;
    for (const Gate& g : den_) {
        total += g.N;
        ln += g.n;
    }
    const long top = std::prev(num_.end())->first;
    if (top > total)
        throw NotDualizable(
            "dual: numerator S-power " + std::to_string(top) +
            " exceeds the total gate power " + std::to_string(total) +
            "; a negative power of S survives");
    const BigInt sign = (den_.size() % 2 == 0) ? 1 : -1;
    const EPoly factor = EPoly::monomial(-ln, -ln, sign);
    ZetaFn r;
    r.den_ = den_;
    for (const auto& [a, c] : num_)
        r.num_.emplace(total - a, c.dual() * factor);
    r.canonicalize();
    return r;
}

EPoly ZetaFn::ct() const {
    if (num_.empty()) return EPoly();
    long total = 0;
    long ln = 0;
    for (const Gate& g : den_) {
        total += g.N;
        ln += g.n;
    }
    // As S grows, a term c*S^a over the gate product behaves like
    // +/- c L^{sum n} S^{a - total}: the expression has a limit exactly
    // when no numerator power exceeds the total gate S-power, and only
    // the a = total coefficient survives, each gate series contributing
    // a factor -1.  Both the test and the extracted value are unchanged
    // by multiplying numerator and denominator by further gates, so the
    // operator is well defined on the function, not the representative.
    EPoly result;
    for (const auto& [a, c] : num_) {
        if (a > total)
            throw NotInCTDomain(
                "ct: numerator power S^" + std::to_string(a) + " exceeds the total "
                "gate power S^" + std::to_string(total) + "; a bare positive power "
                "of L^{-s} survives and the limit s -> -infinity does not exist");
        if (a == total) result += c;
    }
    const BigInt sign = (den_.size() % 2 == 0) ? 1 : -1;
    return result * EPoly::monomial(ln, ln, sign);
}

std::vector<EPoly> ZetaFn::expand_series(long n_max) const {
    if (n_max < 0) throw InputError("expand_series: negative truncation order");
    std::vector<EPoly> out(static_cast<size_t>(n_max) + 1);
    for (const auto& [a, c] : num_)
        if (a <= n_max) out[static_cast<size_t>(a)] = c;
    for (const Gate& g : den_) {
        // Multiply by the geometric series sum_i L^{-n i} S^{N i}.
        std::vector<EPoly> next(out.size());
        for (long k = 0; k <= n_max; ++k) {
            EPoly acc;
            for (long i = 0; k - g.N * i >= 0; ++i)
                acc += out[static_cast<size_t>(k - g.N * i)] * EPoly::L(-g.n * i);
            next[static_cast<size_t>(k)] = std::move(acc);
        }
        out = std::move(next);
    }
    return out;
}

std::pair<EPoly, EPoly> ZetaFn::eval_integer_s(long d) const {
    if (d < 0) throw InputError("eval_integer_s: require d >= 0");
    EPoly num;
    for (const auto& [a, c] : num_) num += c * EPoly::L(-d * a);
    EPoly den = EPoly::one();
    for (const Gate& g : den_) den *= EPoly::one() - EPoly::L(-(g.N * d + g.n));
    return {num, den};
}

namespace {

std::string s_monomial(long a) {
    if (a == 0) return "";
    if (a == 1) return "L^(-s)";
    return "L^(-" + std::to_string(a) + "s)";
}

std::string wrap_coeff(const EPoly& c) {
    std::string s = c.to_string();
    if (s.find(' ') != std::string::npos || s.front() == '-') return "(" + s + ")";
    return s;
}

} // namespace

std::string ZetaFn::to_string() const {
    if (num_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : num_) {
        if (!first) os << " + ";
        first = false;
        std::string sp = s_monomial(a);
        if (sp.empty()) {
            os << c.to_string();
        } else if (c.is_one()) {
            os << sp;
        } else {
            os << wrap_coeff(c) << "*" << sp;
        }
    }
    if (den_.empty()) return os.str();
    std::ostringstream full;
    std::string numerator = os.str();
    if (num_.size() > 1 || numerator.find(" + ") != std::string::npos)
        full << "(" << numerator << ")";
    else
        full << numerator;
    full << " / (";
    bool fg = true;
    for (const Gate& g : den_) {
        if (!fg) full << " * ";
        fg = false;
        full << "(1 - L^(-";
        if (g.N != 1) full << g.N;
        full << "s-" << g.n << "))";
    }
    full << ")";
    return full.str();
}

std::string ZetaFn::to_json() const {
    std::ostringstream os;
    os << "{\"numerator\":[";
    bool first = true;
    for (const auto& [a, c] : num_) {
        if (!first) os << ",";
        first = false;
        os << "{\"s\":" << a << ",\"terms\":[";
        bool ft = true;
        for (const auto& [key, coeff] : c.terms()) {
            if (!ft) os << ",";
            ft = false;
            os << "[" << key.first << "," << key.second << ",\""
               << coeff.get_str() << "\"]";
        }
        os << "]}";
    }
    os << "],\"gates\":[";
    bool fg = true;
    for (const Gate& g : den_) {
        if (!fg) os << ",";
        fg = false;
        os << "[" << g.N << "," << g.n << "]";
    }
    os << "]}";
    return os.str();
}

} // namespace izeta
