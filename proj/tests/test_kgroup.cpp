/*
 * Exact Grothendieck-class arithmetic: ring laws, the duality involution,
 * the evaluation maps (Euler characteristic, point count, Hodge-filtration
 * polynomial), characters, and the textual grammar — on pinned examples
 * and randomized inputs.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "izeta/epoly.hpp"

using namespace izeta;

namespace {

EPoly random_epoly(std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> expo(-3, 3);
    std::uniform_int_distribution<long> coeff(-9, 9);
    EPoly a;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        a += EPoly::monomial(expo(rng), expo(rng), BigInt(coeff(rng)));
    return a;
}

EPoly random_tate(std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> expo(-3, 3);
    std::uniform_int_distribution<long> coeff(-9, 9);
    EPoly a;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) a += EPoly::L(expo(rng)) * BigInt(coeff(rng));
    return a;
}

// Product of two filtration polynomials {p -> coeff}.
std::map<long, BigInt> hsp_mul(const std::map<long, BigInt>& a,
                               const std::map<long, BigInt>& b) {
    std::map<long, BigInt> out;
    for (const auto& [p, c] : a)
        for (const auto& [q, e] : b) out[p + q] += c * e;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<long, BigInt> hsp_add(const std::map<long, BigInt>& a,
                               const std::map<long, BigInt>& b) {
    std::map<long, BigInt> out = a;
    for (const auto& [p, c] : b) out[p] += c;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

TEST_CASE("ring operations on basic classes") {
    const EPoly L = EPoly::L();
    CHECK(L * L == EPoly::L(2));
    CHECK((L - EPoly::one()) + EPoly::one() == L);
    // [P^1 x P^1] = (L+1)^2.
    const EPoly p1 = L + EPoly::one();
    CHECK(p1 * p1 == EPoly::L(2) + EPoly::L() * BigInt(2) + EPoly::one());
    CHECK(EPoly::zero().is_zero());
    CHECK(EPoly::one().is_one());
    CHECK(EPoly(7) * BigInt(0) == EPoly::zero());
}

TEST_CASE("duality on basic classes") {
    CHECK(EPoly::L().dual() == EPoly::L(-1));
    // [P^1] is self-dual up to the Tate twist L^{-1}.
    const EPoly p1 = EPoly::L() + EPoly::one();
    CHECK(p1.dual() == EPoly::L(-1) * p1);
    // (L - 1) dualizes to -L^{-1}(L - 1).
    const EPoly t = EPoly::L() - EPoly::one();
    CHECK(t.dual() == -(EPoly::L(-1) * t));
}

TEST_CASE("Euler characteristic") {
    CHECK(EPoly::L().chi_top() == 1);
    // P^1 minus three points.
    CHECK((EPoly::L() - EPoly(2)).chi_top() == -1);
    CHECK(EPoly::zero().chi_top() == 0);
}

TEST_CASE("point-count evaluation") {
    CHECK((EPoly::L() - EPoly::one()).tate_eval(Rational(3)) == 2);
    const EPoly p1sq = EPoly::L(2) + EPoly::L() * BigInt(2) + EPoly::one();
    CHECK(p1sq.tate_eval(Rational(5)) == 36);
    const EPoly uv = EPoly::monomial(1, 0) + EPoly::monomial(0, 1);
    CHECK_THROWS_AS(uv.tate_eval(Rational(2)), NotTate);
    CHECK(!uv.is_tate());
    CHECK(EPoly::L(-1).tate_eval(Rational(2)) == Rational(1, 2));
}

TEST_CASE("filtration polynomial") {
    CHECK(EPoly::one().hsp_eval() == std::map<long, BigInt>{{0, 1}});
    CHECK(EPoly::L().hsp_eval() == std::map<long, BigInt>{{1, 1}});
    const EPoly a = -(EPoly::monomial(1, 0) * BigInt(2) + EPoly::monomial(0, 1) * BigInt(3));
    CHECK(a.hsp_eval() == std::map<long, BigInt>{{1, -2}, {0, -3}});
}

TEST_CASE("exact division") {
    const EPoly t = EPoly::L() - EPoly::one();
    const EPoly prod = t * t * EPoly::L(-2);
    auto q = prod.exact_divide(t);
    REQUIRE(q.has_value());
    CHECK(*q == t * EPoly::L(-2));
    CHECK(!(EPoly::L() + EPoly::one()).exact_divide(t).has_value());
    CHECK_THROWS_AS(EPoly::one().exact_divide(EPoly::zero()), InputError);
}

TEST_CASE("characters reduce and invert") {
    CHECK(Character(3, 6) == Character(1, 2));
    CHECK(Character(0, 5) == Character());
    CHECK(Character(-1, 6) == Character(5, 6));
    CHECK(Character(7, 6) == Character(1, 6));
    CHECK(Character(1, 6).order() == 6);
    CHECK(Character(1, 6).inverse() == Character(5, 6));
    CHECK(Character().inverse() == Character());
    CHECK(Character(1, 2).inverse() == Character(1, 2));
    CHECK(Character(1, 6).gamma() == Rational(1, 6));
    CHECK_THROWS_AS(Character(1, 0), InputError);

    CHECK(Character::of_order(1) == std::vector<Character>{Character()});
    CHECK(Character::of_order(4) ==
          std::vector<Character>{Character(1, 4), Character(3, 4)});
    // Sum of Euler-phi over divisors of 6.
    CHECK(Character::order_dividing(6).size() == 6);
    CHECK(Character::order_dividing(6).front() == Character());

    CHECK(Character::parse("1/6") == Character(1, 6));
    CHECK(Character::parse("0") == Character());
    CHECK_THROWS_AS(Character::parse("x/2"), ParseError);
}

TEST_CASE("rendering round trips") {
    const EPoly cases[] = {
        EPoly::zero(),
        EPoly::one(),
        EPoly::L(2) + EPoly::L() * BigInt(2) + EPoly::one(),
        -(EPoly::monomial(2, -1, BigInt(3))) + EPoly(5),
        EPoly::L(-3) - EPoly::L(4),
        EPoly::monomial(1, 0) + EPoly::monomial(0, 1),
    };
    for (const EPoly& a : cases) CHECK(EPoly::parse(a.to_string()) == a);
    CHECK(EPoly::parse("L^2 + 2*L + 1") ==
          EPoly::L(2) + EPoly::L() * BigInt(2) + EPoly::one());
    CHECK(EPoly::parse("u*v") == EPoly::L());
    CHECK_THROWS_AS(EPoly::parse("L +"), ParseError);

    std::mt19937_64 rng(0x1a2b3c4d);
    for (int i = 0; i < 200; ++i) {
        const EPoly a = random_epoly(rng);
        CHECK(EPoly::parse(a.to_string()) == a);
    }
}

TEST_CASE("randomized ring laws") {
    std::mt19937_64 rng(0xbead5u);
    for (int i = 0; i < 200; ++i) {
        const EPoly a = random_epoly(rng);
        const EPoly b = random_epoly(rng);
        const EPoly c = random_epoly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + EPoly::zero() == a);
        CHECK(a * EPoly::one() == a);
        CHECK(a - a == EPoly::zero());
    }
}

TEST_CASE("randomized duality laws") {
    std::mt19937_64 rng(0xd0a1u);
    for (int i = 0; i < 200; ++i) {
        const EPoly a = random_epoly(rng);
        const EPoly b = random_epoly(rng);
        CHECK(a.dual().dual() == a);
        CHECK((a * b).dual() == a.dual() * b.dual());
        CHECK((a + b).dual() == a.dual() + b.dual());
        CHECK(a.dual().chi_top() == a.chi_top());
    }
}

TEST_CASE("randomized evaluation homomorphisms") {
    std::mt19937_64 rng(0xe7a1u);
    for (int i = 0; i < 200; ++i) {
        const EPoly a = random_epoly(rng);
        const EPoly b = random_epoly(rng);
        CHECK((a + b).chi_top() == a.chi_top() + b.chi_top());
        CHECK((a * b).chi_top() == a.chi_top() * b.chi_top());
        CHECK((a + b).hsp_eval() == hsp_add(a.hsp_eval(), b.hsp_eval()));
        CHECK((a * b).hsp_eval() == hsp_mul(a.hsp_eval(), b.hsp_eval()));

        const EPoly s = random_tate(rng);
        const EPoly t = random_tate(rng);
        const Rational q(7);
        CHECK((s + t).tate_eval(q) == s.tate_eval(q) + t.tate_eval(q));
        CHECK((s * t).tate_eval(q) == s.tate_eval(q) * t.tate_eval(q));
        // On Tate classes the point count at q = 1 is the Euler
        // characteristic.
        CHECK(Rational(s.chi_top()) == s.tate_eval(Rational(1)));
    }
}
