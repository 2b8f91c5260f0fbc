/*
 * qpoly.cpp
 * ---------
 * Exact rational polynomial arithmetic: sparse multivariate QPoly with
 * the documented input grammar, dense univariate utilities (division,
 * gcd, Yun squarefree decomposition, rational roots), and bivariate
 * gcd / squarefree decomposition via content-primitive splitting and a
 * primitive pseudo-remainder sequence.
 */
#include "izeta/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace izeta {

const char kVarNames[kNumVars] = {'x', 'y', 'z', 'w'};

QPoly::QPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Exps{0, 0, 0, 0}, c);
}

QPoly QPoly::variable(int idx, int power) {
    if (idx < 0 || idx >= kNumVars) throw InputError("polynomial: bad variable index");
    Exps e{0, 0, 0, 0};
    e[static_cast<size_t>(idx)] = power;
    QPoly p;
    p.terms_.emplace(e, Rational(1));
    return p;
}

QPoly QPoly::monomial(const Exps& e, const Rational& c) {
    QPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

void QPoly::add_term(const Exps& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly QPoly::operator-() const {
    QPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exps e;
            for (int i = 0; i < kNumVars; ++i)
                e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
            r.add_term(e, ca * cb);
        }
    return r;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly r{Rational(1)};
    QPoly base = *this;
    while (e > 0) {
        if (e & 1UL) r *= base;
        base *= base;
        e >>= 1UL;
    }
    return r;
}

unsigned QPoly::vars_used() const {
    unsigned mask = 0;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < kNumVars; ++i)
            if (e[static_cast<size_t>(i)] != 0) mask |= 1u << i;
    return mask;
}

int QPoly::num_vars() const {
    unsigned mask = vars_used();
    int n = 0;
    for (int i = 0; i < kNumVars; ++i)
        if (mask & (1u << i)) n = i + 1;
    return n;
}

int QPoly::degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
    return d;
}

int QPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int i = 0; i < kNumVars; ++i) t += e[static_cast<size_t>(i)];
        d = std::max(d, t);
    }
    return d;
}

int QPoly::order_at_origin() const {
    if (terms_.empty()) return -1;
    int m = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int i = 0; i < kNumVars; ++i) t += e[static_cast<size_t>(i)];
        if (m < 0 || t < m) m = t;
    }
    return m;
}

QPoly QPoly::leading_form() const {
    const int m = order_at_origin();
    QPoly r;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int i = 0; i < kNumVars; ++i) t += e[static_cast<size_t>(i)];
        if (t == m) r.terms_.emplace(e, c);
    }
    return r;
}

bool QPoly::is_monomial() const { return terms_.size() == 1; }

bool QPoly::is_homogeneous(int* degree_out) const {
    if (terms_.empty()) {
        if (degree_out) *degree_out = 0;
        return true;
    }
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int i = 0; i < kNumVars; ++i) t += e[static_cast<size_t>(i)];
        if (d < 0) d = t;
        else if (t != d) return false;
    }
    if (degree_out) *degree_out = d;
    return true;
}

Rational QPoly::eval(const std::vector<Rational>& point) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i) {
            for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) {
                if (static_cast<size_t>(i) < point.size()) t *= point[static_cast<size_t>(i)];
                else t = 0;
            }
        }
        s += t;
    }
    return s;
}

QPoly QPoly::derivative(int var) const {
    QPoly r;
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Exps ne = e;
        ne[static_cast<size_t>(var)] = k - 1;
        r.add_term(ne, c * Rational(k));
    }
    return r;
}

QPoly QPoly::substitute(int var, const QPoly& repl) const {
    QPoly r;
    for (const auto& [e, c] : terms_) {
        Exps base = e;
        const int k = base[static_cast<size_t>(var)];
        base[static_cast<size_t>(var)] = 0;
        QPoly t = QPoly::monomial(base, c) * repl.pow(static_cast<unsigned long>(k));
        r += t;
    }
    return r;
}

QPoly QPoly::divide_monomial(int var, int k) const {
    QPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(var)] < k)
            throw NotDivisible("polynomial not divisible by " +
                               std::string(1, kVarNames[var]) + "^" + std::to_string(k));
        Exps ne = e;
        ne[static_cast<size_t>(var)] -= k;
        r.terms_.emplace(ne, c);
    }
    return r;
}

namespace {

std::string rational_str(const Rational& r) {
    return r.get_str();
}

} // namespace

std::string QPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c >= 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool constant = true;
        for (int i = 0; i < kNumVars; ++i)
            if (e[static_cast<size_t>(i)] != 0) constant = false;
        bool unit = (mag == 1);
        if (constant || !unit) os << rational_str(mag);
        if (!constant) {
            bool lead = !unit;
            for (int i = 0; i < kNumVars; ++i) {
                int k = e[static_cast<size_t>(i)];
                if (k == 0) continue;
                if (lead) os << '*';
                lead = true;
                os << kVarNames[i];
                if (k != 1) os << '^' << k;
            }
        }
    }
    return os.str();
}

// --- parser ---------------------------------------------------------------

namespace {

struct PolyParser {
    const std::string& s;
    size_t i = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial: " + what + " at position " + std::to_string(i) +
                         " in \"" + s + "\"");
    }

    BigInt integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return BigInt(s.substr(start, i - start));
    }

    long small_integer() {
        bool neg = eat('-');
        BigInt n = integer();
        if (!n.fits_slong_p()) fail("exponent out of range");
        return neg ? -n.get_si() : n.get_si();
    }

    QPoly expr() {
        QPoly acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        acc = neg ? -term() : term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++i;
                QPoly t = term();
                acc = (c == '-') ? acc - t : acc + t;
            } else {
                return acc;
            }
        }
    }

    QPoly term() {
        QPoly acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    QPoly factor() {
        QPoly base = atom();
        if (eat('^')) {
            long e = small_integer();
            if (e < 0) fail("negative exponent");
            return base.pow(static_cast<unsigned long>(e));
        }
        return base;
    }

    QPoly atom() {
        char c = peek();
        if (c == '(') {
            ++i;
            QPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++i;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = integer();
            if (eat('/')) {
                BigInt den = integer();
                if (den == 0) fail("zero denominator");
                Rational r(num, den);
                r.canonicalize();
                return QPoly(r);
            }
            return QPoly(Rational(num));
        }
        for (int v = 0; v < kNumVars; ++v)
            if (c == kVarNames[v]) {
                ++i;
                return QPoly::variable(v);
            }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

} // namespace

QPoly QPoly::parse(const std::string& text) {
    PolyParser p(text);
    QPoly r = p.expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

// --- univariate utilities --------------------------------------------------

UniPoly uni_trim(UniPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool uni_is_zero(const UniPoly& p) { return p.empty(); }

int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return uni_trim(std::move(r));
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return uni_trim(std::move(r));
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return uni_trim(std::move(r));
}

UniPoly uni_scale(const UniPoly& a, const Rational& c) {
    if (c == 0) return {};
    UniPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.empty()) throw InputError("univariate division by zero");
    UniPoly rem = a;
    UniPoly quot;
    const int db = uni_degree(b);
    while (uni_degree(rem) >= db) {
        const int d = uni_degree(rem) - db;
        Rational qc = rem.back() / b.back();
        if (static_cast<int>(quot.size()) < d + 1) quot.resize(static_cast<size_t>(d) + 1, Rational(0));
        quot[static_cast<size_t>(d)] = qc;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(d + i)] -= qc * b[static_cast<size_t>(i)];
        rem = uni_trim(std::move(rem));
    }
    return {uni_trim(std::move(quot)), rem};
}

UniPoly uni_exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = uni_divmod(a, b);
    if (!uni_is_zero(r)) throw NotDivisible("univariate division left a remainder");
    return q;
}

Rational uni_eval(const UniPoly& p, const Rational& x) {
    Rational s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
    return s;
}

UniPoly uni_derivative(const UniPoly& p) {
    if (p.size() <= 1) return {};
    UniPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
    return uni_trim(std::move(r));
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = uni_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational inv = 1 / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

std::vector<std::pair<UniPoly, int>> uni_squarefree(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = uni_trim(p);
    if (uni_degree(f) < 1) return out;
    // Yun's algorithm (characteristic 0).
    UniPoly fp = uni_derivative(f);
    UniPoly g = uni_gcd(f, fp);
    UniPoly w = uni_exact_div(f, g);
    UniPoly y = uni_sub(uni_exact_div(fp, g), uni_derivative(w));
    int i = 1;
    while (uni_degree(w) > 0) {
        UniPoly z = uni_gcd(w, y);
        if (uni_degree(z) > 0) out.emplace_back(z, i);
        w = uni_exact_div(w, z);
        y = uni_sub(uni_exact_div(y, z), uni_derivative(w));
        ++i;
    }
    return out;
}

namespace {

std::vector<BigInt> divisors_of(const BigInt& n) {
    std::vector<BigInt> ds;
    BigInt a = abs(n);
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            ds.push_back(d);
            BigInt other = a / d;
            if (other != d) ds.push_back(other);
        }
    }
    return ds;
}

} // namespace

std::vector<std::pair<Rational, int>> uni_rational_roots(const UniPoly& p) {
    std::vector<std::pair<Rational, int>> roots;
    UniPoly f = uni_trim(p);
    if (uni_degree(f) < 1) return roots;
    // Root at zero.
    int zero_mult = 0;
    while (!f.empty() && f.front() == 0) {
        f.erase(f.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
    if (uni_degree(f) < 1) return roots;
    // Clear denominators to a primitive integer polynomial.
    BigInt lcm_den = 1;
    for (const auto& c : f) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<BigInt> z(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Rational scaled = f[i] * Rational(lcm_den);
        z[i] = scaled.get_num();
    }
    // Candidates p/q with p | constant term, q | leading term.
    for (const BigInt& pn : divisors_of(z.front()))
        for (const BigInt& qn : divisors_of(z.back())) {
            if (gcd(pn, qn) != 1) continue;
            for (int sign = 1; sign >= -1; sign -= 2) {
                Rational cand(sign > 0 ? pn : BigInt(-pn), qn);
                cand.canonicalize();
                if (uni_eval(f, cand) != 0) continue;
                // Peel off the root to find its multiplicity.
                int mult = 0;
                UniPoly lin{-cand, Rational(1)};
                UniPoly g = f;
                while (true) {
                    auto [q, r] = uni_divmod(g, lin);
                    if (!uni_is_zero(r)) break;
                    g = std::move(q);
                    ++mult;
                }
                roots.emplace_back(cand, mult);
            }
        }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::string uni_to_string(const UniPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = uni_degree(p); d >= 0; --d) {
        const Rational& c = p[static_cast<size_t>(d)];
        if (c == 0) continue;
        Rational mag = c >= 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (d == 0 || mag != 1) os << rational_str(mag);
        if (d > 0) {
            if (mag != 1) os << '*';
            os << var;
            if (d > 1) os << '^' << d;
        }
    }
    return os.str();
}

UniPoly qpoly_to_uni(const QPoly& p, int var) {
    UniPoly r;
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < kNumVars; ++i)
            if (i != var && e[static_cast<size_t>(i)] != 0)
                throw InputError("expected a univariate polynomial in " +
                                 std::string(1, kVarNames[var]));
        const int d = e[static_cast<size_t>(var)];
        if (static_cast<int>(r.size()) < d + 1) r.resize(static_cast<size_t>(d) + 1, Rational(0));
        r[static_cast<size_t>(d)] = c;
    }
    return uni_trim(std::move(r));
}

QPoly uni_to_qpoly(const UniPoly& p, int var) {
    QPoly r;
    for (size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0) continue;
        QPoly::Exps e{0, 0, 0, 0};
        e[static_cast<size_t>(var)] = static_cast<int>(d);
        r += QPoly::monomial(e, p[d]);
    }
    return r;
}

// --- bivariate gcd / squarefree --------------------------------------------

namespace {

// Bivariate polynomials as dense vectors in y with UniPoly-in-x entries.
using BiPoly = std::vector<UniPoly>;

BiPoly bi_trim(BiPoly p) {
    while (!p.empty() && uni_is_zero(p.back())) p.pop_back();
    return p;
}

BiPoly to_bi(const QPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) {
        for (int i = 2; i < kNumVars; ++i)
            if (e[static_cast<size_t>(i)] != 0)
                throw InputError("expected a polynomial in x and y only");
        const size_t dy = static_cast<size_t>(e[1]);
        const size_t dx = static_cast<size_t>(e[0]);
        if (r.size() < dy + 1) r.resize(dy + 1);
        UniPoly& row = r[dy];
        if (row.size() < dx + 1) row.resize(dx + 1, Rational(0));
        row[dx] = c;
    }
    for (auto& row : r) row = uni_trim(std::move(row));
    return bi_trim(std::move(r));
}

QPoly from_bi(const BiPoly& p) {
    QPoly r;
    for (size_t dy = 0; dy < p.size(); ++dy)
        for (size_t dx = 0; dx < p[dy].size(); ++dx)
            if (p[dy][dx] != 0)
                r += QPoly::monomial({static_cast<int>(dx), static_cast<int>(dy), 0, 0},
                                     p[dy][dx]);
    return r;
}

UniPoly bi_content(const BiPoly& p) {
    UniPoly c;
    for (const auto& row : p) c = uni_gcd(c, row);
    return c;
}

BiPoly bi_divide_content(const BiPoly& p, const UniPoly& c) {
    BiPoly r = p;
    for (auto& row : r)
        if (!uni_is_zero(row)) row = uni_exact_div(row, c);
    return r;
}

BiPoly bi_scale(const BiPoly& p, const UniPoly& c) {
    BiPoly r = p;
    for (auto& row : r) row = uni_mul(row, c);
    return bi_trim(std::move(r));
}

BiPoly bi_sub(const BiPoly& a, const BiPoly& b) {
    BiPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        UniPoly x = i < a.size() ? a[i] : UniPoly{};
        UniPoly y = i < b.size() ? b[i] : UniPoly{};
        r[i] = uni_sub(x, y);
    }
    return bi_trim(std::move(r));
}

BiPoly bi_shift_y(const BiPoly& p, size_t k) {
    if (p.empty()) return p;
    BiPoly r(p.size() + k);
    for (size_t i = 0; i < p.size(); ++i) r[i + k] = p[i];
    return r;
}

// Pseudo-remainder of a by b with respect to y.
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const UniPoly& lcb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        UniPoly lca = a.back();
        // a := lcb * a - lca * y^{da-db} * b
        BiPoly lhs = bi_scale(a, lcb);
        BiPoly rhs = bi_shift_y(bi_scale(b, lca), static_cast<size_t>(da - db));
        a = bi_sub(lhs, rhs);
        if (static_cast<int>(a.size()) - 1 == da)
            throw Error("pseudo-division failed to reduce the degree");
    }
    return a;
}

BiPoly bi_primitive(const BiPoly& p) {
    if (p.empty()) return p;
    UniPoly c = bi_content(p);
    return bi_divide_content(p, c);
}

// gcd of primitive parts via the primitive pseudo-remainder sequence.
BiPoly bi_pp_gcd(BiPoly a, BiPoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        BiPoly r = bi_primitive(bi_prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return bi_primitive(a);
}

// Canonical scaling: leading y-coefficient's leading x-coefficient = 1.
QPoly normalize_poly(const QPoly& p) {
    if (p.is_zero()) return p;
    BiPoly b = to_bi(p);
    Rational lead = b.back().back();
    BiPoly scaled = bi_scale(b, UniPoly{1 / lead});
    return from_bi(scaled);
}

// Sparse exact division of multivariate polynomials (lex order); returns
// false if not exactly divisible.
bool qpoly_exact_div(const QPoly& a, const QPoly& b, QPoly& quotient) {
    if (b.is_zero()) return false;
    QPoly rem = a;
    QPoly quot;
    const auto& blead = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        QPoly::Exps qe;
        for (int i = 0; i < kNumVars; ++i) {
            int d = rlead.first[static_cast<size_t>(i)] - blead.first[static_cast<size_t>(i)];
            if (d < 0) return false;
            qe[static_cast<size_t>(i)] = d;
        }
        QPoly qt = QPoly::monomial(qe, rlead.second / blead.second);
        quot += qt;
        rem -= qt * b;
    }
    quotient = std::move(quot);
    return true;
}

} // namespace

QPoly bivariate_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return normalize_poly(b);
    if (b.is_zero()) return normalize_poly(a);
    BiPoly ba = to_bi(a), bb = to_bi(b);
    UniPoly ca = bi_content(ba), cb = bi_content(bb);
    UniPoly cg = uni_gcd(ca, cb);
    BiPoly pg = bi_pp_gcd(bi_divide_content(ba, ca), bi_divide_content(bb, cb));
    return normalize_poly(from_bi(bi_scale(pg, cg)));
}

std::vector<std::pair<QPoly, int>> bivariate_squarefree(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> out;
    if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of 0");
    BiPoly bf = to_bi(f);
    // Split off the content (a univariate polynomial in x) and decompose
    // it separately; the primitive part's repeated factors all involve y.
    UniPoly content = bi_content(bf);
    for (const auto& [g, m] : uni_squarefree(content))
        out.emplace_back(uni_to_qpoly(g, 0), m);
    QPoly pp = from_bi(bi_divide_content(bf, content));
    if (pp.degree(1) > 0) {
        // Yun's algorithm with bivariate gcds and exact divisions.
        QPoly fp = pp.derivative(1);
        QPoly g = bivariate_gcd(pp, fp);
        QPoly w, dummy;
        if (!qpoly_exact_div(pp, g, w)) throw Error("squarefree: division by gcd failed");
        QPoly y;
        if (!qpoly_exact_div(fp, g, y)) throw Error("squarefree: division by gcd failed");
        y -= w.derivative(1);
        int i = 1;
        while (w.total_degree() > 0) {
            QPoly z = bivariate_gcd(w, y);
            if (z.total_degree() > 0) out.emplace_back(normalize_poly(z), i);
            QPoly w2, y2;
            if (!qpoly_exact_div(w, z, w2)) throw Error("squarefree: division failed");
            if (!qpoly_exact_div(y, z, y2)) throw Error("squarefree: division failed");
            w = std::move(w2);
            y = y2 - w.derivative(1);
            ++i;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        return p.second < q.second;
    });
    return out;
}

} // namespace izeta
