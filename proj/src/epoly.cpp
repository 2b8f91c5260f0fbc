/*
 * epoly.cpp
 * ---------
 * Implementation of EPoly arithmetic, evaluation maps, exact division,
 * and the textual grammar, plus the Character type.
 */
#include "izeta/epoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace izeta {

void EPoly::add_term(long p, long q, const BigInt& c) {
    if (c == 0) return;
    auto key = Key{p, q};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

EPoly EPoly::monomial(long p, long q, BigInt c) {
    EPoly r;
    r.add_term(p, q, c);
    return r;
}

bool EPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second == 1;
}

EPoly EPoly::operator-() const {
    EPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

EPoly EPoly::operator+(const EPoly& o) const {
    EPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

EPoly EPoly::operator-(const EPoly& o) const {
    EPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

EPoly EPoly::operator*(const EPoly& o) const {
    EPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

EPoly EPoly::operator*(const BigInt& c) const {
    EPoly r;
    if (c == 0) return r;
    for (const auto& [k, t] : terms_) r.terms_.emplace(k, t * c);
    return r;
}

EPoly EPoly::pow(unsigned long e) const {
    EPoly r = one();
    EPoly base = *this;
    while (e > 0) {
        if (e & 1UL) r *= base;
        base *= base;
        e >>= 1UL;
    }
    return r;
}

EPoly EPoly::dual() const {
    EPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, -k.second}, c);
    return r;
}

BigInt EPoly::chi_top() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

bool EPoly::is_tate() const {
    for (const auto& [k, c] : terms_)
        if (k.first != k.second) return false;
    return true;
}

Rational EPoly::tate_eval(const Rational& q) const {
    Rational s = 0;
    for (const auto& [k, c] : terms_) {
        if (k.first != k.second)
            throw NotTate("tate_eval: term of Hodge type (" + std::to_string(k.first) +
                          "," + std::to_string(k.second) + ") is not a power of L");
        Rational qp;
        if (k.first >= 0) {
            mpz_pow_ui(mpq_numref(qp.get_mpq_t()), q.get_num().get_mpz_t(),
                       static_cast<unsigned long>(k.first));
            mpz_pow_ui(mpq_denref(qp.get_mpq_t()), q.get_den().get_mpz_t(),
                       static_cast<unsigned long>(k.first));
        } else {
            if (q == 0) throw InputError("tate_eval: negative L-power at q = 0");
            mpz_pow_ui(mpq_numref(qp.get_mpq_t()), q.get_den().get_mpz_t(),
                       static_cast<unsigned long>(-k.first));
            mpz_pow_ui(mpq_denref(qp.get_mpq_t()), q.get_num().get_mpz_t(),
                       static_cast<unsigned long>(-k.first));
        }
        qp.canonicalize();
        s += Rational(c) * qp;
    }
    return s;
}

std::map<long, BigInt> EPoly::hsp_eval() const {
    std::map<long, BigInt> out;
    for (const auto& [k, c] : terms_) {
        auto it = out.find(k.first);
        if (it == out.end()) {
            out.emplace(k.first, c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

std::optional<EPoly> EPoly::exact_divide(const EPoly& divisor) const {
    if (divisor.is_zero()) throw InputError("exact_divide: zero divisor");
    if (is_zero()) return EPoly();
    // Sparse long division in the Laurent ring, cancelling the
    // lexicographically greatest term at each step.  For an exact quotient
    // the lowest term of the remainder never drops below
    // lowest(dividend) (lowest terms multiply without cancellation), which
    // bounds the loop; falling below proves non-divisibility.
    const Key floor_key = terms_.begin()->first;
    const auto lead = std::prev(divisor.terms_.end());
    EPoly rem = *this;
    EPoly quot;
    while (!rem.is_zero()) {
        const auto rlead = std::prev(rem.terms_.end());
        const Key qk{rlead->first.first - lead->first.first,
                     rlead->first.second - lead->first.second};
        BigInt qc = rlead->second / lead->second;
        if (qc * lead->second != rlead->second) return std::nullopt;
        if (rem.terms_.begin()->first < floor_key) return std::nullopt;
        quot.add_term(qk.first, qk.second, qc);
        rem -= EPoly::monomial(qk.first, qk.second, qc) * divisor;
        if (!rem.is_zero() && std::prev(rem.terms_.end())->first > rlead->first)
            return std::nullopt;
    }
    return quot;
}

namespace {

void render_exponent(std::ostream& os, const char* var, long e) {
    os << var;
    if (e != 1) os << '^' << e;
}

} // namespace

std::string EPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending lexicographic order reads naturally: L^2 + 2*L + 1.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        BigInt mag = c >= 0 ? c : BigInt(-c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool constant = (k.first == 0 && k.second == 0);
        const bool unit_coeff = (mag == 1);
        if (constant || !unit_coeff) os << mag.get_str();
        if (!constant) {
            if (!unit_coeff) os << '*';
            if (k.first == k.second) {
                render_exponent(os, "L", k.first);
            } else {
                if (k.first != 0) {
                    render_exponent(os, "u", k.first);
                    if (k.second != 0) os << '*';
                }
                if (k.second != 0) render_exponent(os, "v", k.second);
            }
        }
    }
    return os.str();
}

namespace {

struct EPolyLexer {
    const std::string& s;
    size_t i = 0;

    explicit EPolyLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
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
    BigInt integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits)
            throw ParseError("class expression: expected integer at position " +
                             std::to_string(start) + " in \"" + s + "\"");
        return BigInt(s.substr(start, i - start));
    }
    long small_integer() {
        BigInt n = integer();
        if (!n.fits_slong_p())
            throw ParseError("class expression: exponent out of range in \"" + s + "\"");
        return n.get_si();
    }
};

} // namespace

EPoly EPoly::parse(const std::string& text) {
    EPolyLexer lx(text);
    EPoly result;
    bool expect_term = true;
    int sign = 1;
    while (!lx.done()) {
        if (expect_term) {
            // Optional leading sign for this term.
            if (lx.eat('-')) sign = -sign;
            else lx.eat('+');
        }
        // One term: factors joined by '*'.
        BigInt coeff = sign;
        long p = 0, q = 0;
        bool more_factors = true;
        while (more_factors) {
            char c = lx.peek();
            if (c == 'u' || c == 'v' || c == 'L') {
                ++lx.i;
                long e = 1;
                if (lx.eat('^')) e = lx.small_integer();
                if (c == 'u') p += e;
                else if (c == 'v') q += e;
                else { p += e; q += e; }
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
                BigInt n = lx.integer();
                if (lx.eat('^')) {
                    long e = lx.small_integer();
                    if (e < 0)
                        throw ParseError("class expression: negative power of an integer in \"" +
                                         text + "\"");
                    BigInt pw;
                    mpz_pow_ui(pw.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
                    n = pw;
                }
                coeff *= n;
            } else if (c == '\0') {
                throw ParseError("class expression: unexpected end of input in \"" +
                                 text + "\"");
            } else {
                throw ParseError("class expression: unexpected character '" +
                                 std::string(1, c) + "' in \"" + text + "\"");
            }
            more_factors = lx.eat('*');
        }
        result += EPoly::monomial(p, q, coeff);
        // Between terms: require +/-; the sign is consumed here so a term
        // may not start with a bare sign twice.
        if (lx.done()) break;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            ++lx.i;
            sign = (c == '-') ? -1 : 1;
            expect_term = false;
            if (lx.done())
                throw ParseError("class expression: unexpected end of input in \"" +
                                 text + "\"");
        } else {
            throw ParseError("class expression: expected '+' or '-' before position " +
                             std::to_string(lx.i) + " in \"" + text + "\"");
        }
    }
    return result;
}

// --- Character -----------------------------------------------------------

Character::Character(long j, long d) {
    if (d <= 0) throw InputError("character: order must be positive");
    j %= d;
    if (j < 0) j += d;
    long g = std::gcd(j, d);
    if (j == 0) {
        j_ = 0;
        d_ = 1;
    } else {
        j_ = j / g;
        d_ = d / g;
    }
}

Rational Character::gamma() const {
    Rational r(j_, d_);
    r.canonicalize();
    return r;
}

Character Character::inverse() const {
    if (is_trivial()) return *this;
    return Character(d_ - j_, d_);
}

std::string Character::to_string() const {
    return std::to_string(j_) + "/" + std::to_string(d_);
}

Character Character::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Character(std::stol(text), 1);
        return Character(std::stol(text.substr(0, slash)),
                         std::stol(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("character: expected j/d, got \"" + text + "\"");
    } catch (const std::out_of_range&) {
        throw ParseError("character: value out of range in \"" + text + "\"");
    }
}

std::vector<Character> Character::of_order(long d) {
    std::vector<Character> out;
    if (d == 1) {
        out.emplace_back();
        return out;
    }
    for (long j = 1; j < d; ++j)
        if (std::gcd(j, d) == 1) out.emplace_back(j, d);
    return out;
}

std::vector<Character> Character::order_dividing(long d) {
    std::vector<Character> out;
    for (long e = 1; e <= d; ++e)
        if (d % e == 0)
            for (auto& a : of_order(e)) out.push_back(a);
    return out;
}

} // namespace izeta
