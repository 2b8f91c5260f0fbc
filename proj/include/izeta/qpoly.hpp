/*
 * qpoly.hpp
 * ---------
 * Exact polynomial arithmetic over the rationals.
 *
 * QPoly: sparse polynomials in up to four variables (x, y, z, w) with
 * mpq coefficients, plus the input grammar shared by the CLI and the
 * resolution engine (integer/rational coefficients, caret powers,
 * explicit '*', parentheses; see README for the EBNF).
 *
 * UniPoly: dense univariate polynomials over Q with division, gcd and
 * squarefree decomposition -- the workhorses behind transversality
 * tests, root extraction and topological zeta reduction.
 */
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "izeta/epoly.hpp"

namespace izeta {

constexpr int kNumVars = 4;
extern const char kVarNames[kNumVars]; // {'x','y','z','w'}

class QPoly {
public:
    using Exps = std::array<int, kNumVars>;
    using TermMap = std::map<Exps, Rational>;

    QPoly() = default;
    explicit QPoly(const Rational& c);
    static QPoly variable(int idx, int power = 1);
    static QPoly monomial(const Exps& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    QPoly pow(unsigned long e) const;
    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    // Bitmask of variables that actually occur.
    unsigned vars_used() const;
    // Highest variable index used + 1 (0 for constants).
    int num_vars() const;
    int degree(int var) const;
    int total_degree() const;
    // Multiplicity at the origin: the minimal total degree of a term
    // (-1 for the zero polynomial).
    int order_at_origin() const;
    // Sum of the terms of minimal total degree.
    QPoly leading_form() const;
    // True iff the polynomial is a single term.
    bool is_monomial() const;
    bool is_homogeneous(int* degree_out = nullptr) const;

    Rational eval(const std::vector<Rational>& point) const;
    QPoly derivative(int var) const;
    // Substitute variable `var` by the given polynomial.
    QPoly substitute(int var, const QPoly& repl) const;
    // Exact division by the monomial var^k (throws if not divisible).
    QPoly divide_monomial(int var, int k) const;

    std::string to_string() const;
    // Parses the documented grammar; throws ParseError.
    static QPoly parse(const std::string& text);

private:
    void add_term(const Exps& e, const Rational& c);
    TermMap terms_;
};

// --- dense univariate polynomials over Q ---------------------------------

// Coefficient vector, index = degree; invariant: no trailing zeros
// (the zero polynomial is the empty vector).
using UniPoly = std::vector<Rational>;

UniPoly uni_trim(UniPoly p);
bool uni_is_zero(const UniPoly& p);
int uni_degree(const UniPoly& p); // -1 for zero
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const UniPoly& a, const Rational& c);
// Quotient and remainder of a by b (b != 0).
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);
// Exact division; throws NotDivisible on a nonzero remainder.
UniPoly uni_exact_div(const UniPoly& a, const UniPoly& b);
Rational uni_eval(const UniPoly& p, const Rational& x);
UniPoly uni_derivative(const UniPoly& p);
// Monic gcd.
UniPoly uni_gcd(UniPoly a, UniPoly b);
// Yun squarefree decomposition: returns (factor, multiplicity) pairs with
// pairwise coprime squarefree factors, product = p up to a constant.
std::vector<std::pair<UniPoly, int>> uni_squarefree(const UniPoly& p);
// All rational roots with multiplicities.
std::vector<std::pair<Rational, int>> uni_rational_roots(const UniPoly& p);
std::string uni_to_string(const UniPoly& p, const std::string& var);

// Conversions between QPoly in a single variable and UniPoly.
UniPoly qpoly_to_uni(const QPoly& p, int var);
QPoly uni_to_qpoly(const UniPoly& p, int var);

// --- bivariate helpers (variables x = 0, y = 1) ---------------------------

// Squarefree decomposition of a bivariate polynomial over Q:
// pairwise coprime squarefree factors with multiplicities, constant
// factors dropped.
std::vector<std::pair<QPoly, int>> bivariate_squarefree(const QPoly& f);
// gcd of two bivariate polynomials (primitive, sign-normalized).
QPoly bivariate_gcd(const QPoly& a, const QPoly& b);

} // namespace izeta
