/*
 * epoly.hpp
 * ---------
 * EPoly: exact Grothendieck-class arithmetic in the Hodge realization.
 *
 * An EPoly is an integer-coefficient Laurent polynomial in two variables
 * (u, v) recording virtual Hodge numbers: the term c * u^p * v^q means a
 * virtual piece of Hodge type (p, q) with multiplicity c.  The class of a
 * point is 1, the Lefschetz class L is the monomial uv, and affine m-space
 * is (uv)^m.  All arithmetic is exact (GMP integers); no zero coefficient
 * is ever stored, so two classes are equal iff their term maps are equal.
 *
 * Character: an element of Q/Z written as the reduced fraction j/d in
 * [0, 1); it indexes the eigenspace decomposition of cyclic covers.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "izeta/errors.hpp"

namespace izeta {

using BigInt = mpz_class;
using Rational = mpq_class;

class EPoly {
public:
    // (exponent of u, exponent of v) -> nonzero coefficient.
    // std::map keeps terms in lexicographic (p, q) order, which is the
    // canonical order used by rendering and serialization.
    using Key = std::pair<long, long>;
    using TermMap = std::map<Key, BigInt>;

    EPoly() = default;
    explicit EPoly(long c) { add_term(0, 0, BigInt(c)); }
    explicit EPoly(const BigInt& c) { add_term(0, 0, c); }

    static EPoly monomial(long p, long q, BigInt c = BigInt(1));
    static EPoly one() { return EPoly(1); }
    static EPoly zero() { return EPoly(); }
    // The Lefschetz class L = uv (with integer powers, possibly negative).
    static EPoly L(long power = 1) { return monomial(power, power); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True iff the class is +/- a single monomial (a unit of the Laurent ring).
    bool is_monomial() const { return terms_.size() == 1; }
    const TermMap& terms() const { return terms_; }

    EPoly operator-() const;
    EPoly operator+(const EPoly& o) const;
    EPoly operator-(const EPoly& o) const;
    EPoly operator*(const EPoly& o) const;
    EPoly& operator+=(const EPoly& o) { return *this = *this + o; }
    EPoly& operator-=(const EPoly& o) { return *this = *this - o; }
    EPoly& operator*=(const EPoly& o) { return *this = *this * o; }
    EPoly operator*(const BigInt& c) const;
    EPoly pow(unsigned long e) const;

    bool operator==(const EPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const EPoly& o) const { return !(*this == o); }

    // Duality (u, v) -> (1/u, 1/v); a ring involution.
    EPoly dual() const;

    // Topological Euler characteristic: evaluation at u = v = 1.
    BigInt chi_top() const;

    // Point count: substitute uv = q.  Defined only for Tate classes
    // (every term has p == q); otherwise throws NotTate.
    Rational tate_eval(const Rational& q) const;
    bool is_tate() const;

    // Hodge-filtration polynomial: evaluate at u = t, v = 1 and collect
    // the coefficient of t^p.  Returns {p -> sum_q coeff(p, q)}, zeros
    // dropped.
    std::map<long, BigInt> hsp_eval() const;

    // Exact division: returns the quotient iff divisor * quotient == *this
    // exactly in the Laurent ring, std::nullopt otherwise.  A zero divisor
    // is an InputError, not a failed division.
    std::optional<EPoly> exact_divide(const EPoly& divisor) const;

    // Canonical textual form, e.g. "L^2 + 2*L + 1", "-3*u^2*v^-1 + 5", "0".
    // Terms with equal u- and v-exponents render via the alias L = uv.
    std::string to_string() const;
    // Parses the same grammar the renderer emits (aliases L, u, v; caret
    // powers with optional sign; explicit '*').  Throws ParseError.
    static EPoly parse(const std::string& text);

private:
    void add_term(long p, long q, const BigInt& c);
    TermMap terms_;
};

inline EPoly operator*(const BigInt& c, const EPoly& a) { return a * c; }

class Character {
public:
    // Trivial character: 0/1.
    Character() : j_(0), d_(1) {}
    // Reduced representative of j/d in Q/Z.
    Character(long j, long d);

    long order() const { return d_; }
    long numerator() const { return j_; }
    bool is_trivial() const { return d_ == 1; }
    // gamma(alpha) = j/d as an exact rational in [0, 1).
    Rational gamma() const;
    Character inverse() const;

    bool operator==(const Character& o) const { return j_ == o.j_ && d_ == o.d_; }
    bool operator!=(const Character& o) const { return !(*this == o); }
    bool operator<(const Character& o) const {
        return d_ != o.d_ ? d_ < o.d_ : j_ < o.j_;
    }

    std::string to_string() const;
    static Character parse(const std::string& text);

    // All characters of order exactly d (numerators coprime to d), in
    // increasing numerator order.
    static std::vector<Character> of_order(long d);
    // All characters of order dividing d, trivial first.
    static std::vector<Character> order_dividing(long d);

private:
    long j_;
    long d_;
};

} // namespace izeta
