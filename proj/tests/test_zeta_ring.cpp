/*
 * Canonical-form rational functions in S = L^{-s}: arithmetic and
 * cancellation, the duality involution, the constant-term operator and
 * its domain boundary, series expansion, and integer-s evaluation — on
 * pinned examples and randomized inputs.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <vector>

#include "izeta/zeta.hpp"

using namespace izeta;

namespace {

const EPoly kL = EPoly::L();
const EPoly kOne = EPoly::one();

// The polynomial 1 - L^{-n}S^N as a ZetaFn.
ZetaFn gate_poly(const Gate& g) {
    return ZetaFn(kOne) - ZetaFn::monomial(EPoly::L(-g.n), g.N);
}

Gate random_gate(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> val(1, 4);
    return Gate(val(rng), val(rng));
}

EPoly random_constant(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> expo(-2, 2);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> nterms(1, 3);
    EPoly a;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        a += EPoly::monomial(expo(rng), expo(rng), BigInt(coeff(rng)));
    return a;
}

// Random element of the subring generated by constants, gate inverses
// and gate series: closed under duality and (for the series-and-constant
// part) under the constant-term operator.
ZetaFn random_zeta(std::mt19937_64& rng, int depth = 2, bool series_only = false) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 1);
    switch (pick(rng)) {
        case 0:
            return ZetaFn(random_constant(rng));
        case 1:
            return series_only ? ZetaFn::gate_series(random_gate(rng))
                               : ZetaFn::gate_inverse(random_gate(rng));
        case 2:
            return random_zeta(rng, depth - 1, series_only) +
                   random_zeta(rng, depth - 1, series_only);
        default:
            return random_zeta(rng, depth - 1, series_only) *
                   random_zeta(rng, depth - 1, series_only);
    }
}

// Random CT-domain element paired with its predicted constant term:
// every gate-series factor contributes -1.
std::pair<ZetaFn, EPoly> random_ct_element(std::mt19937_64& rng, int depth = 2) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 1);
    switch (pick(rng)) {
        case 0: {
            EPoly c = random_constant(rng);
            return {ZetaFn(c), c};
        }
        case 1:
            return {ZetaFn::gate_series(random_gate(rng)), -kOne};
        case 2: {
            auto [za, ca] = random_ct_element(rng, depth - 1);
            auto [zb, cb] = random_ct_element(rng, depth - 1);
            return {za + zb, ca + cb};
        }
        default: {
            auto [za, ca] = random_ct_element(rng, depth - 1);
            auto [zb, cb] = random_ct_element(rng, depth - 1);
            return {za * zb, ca * cb};
        }
    }
}

} // namespace

TEST_CASE("arithmetic and gate cancellation") {
    const Gate g(1, 1);
    const ZetaFn gi = ZetaFn::gate_inverse(g);

    const ZetaFn twice = gi + gi;
    CHECK(twice.numerator() == ZetaFn::Numerator{{0, EPoly(2)}});
    CHECK(twice.gates() == GateSet{g});

    CHECK(gate_poly(g) * gi == ZetaFn(kOne));

    CHECK((gi * gi).gates() == GateSet{g, g});

    CHECK(ZetaFn().is_zero());
    CHECK((gi - gi).is_zero());
}

TEST_CASE("duality on pinned values") {
    const Gate g(1, 1);
    const ZetaFn gi = ZetaFn::gate_inverse(g);

    // (1 - L^{-1}S)^{-1} dualizes to -L^{-1}S (1 - L^{-1}S)^{-1}.
    CHECK(gi.dual() == -(ZetaFn::monomial(EPoly::L(-1), 1) * gi));

    const EPoly c = kL * BigInt(3) - EPoly(2);
    CHECK(ZetaFn(c).dual() == ZetaFn(c.dual()));

    // L^{-2}(L-1)^2 (1 - L^{-1}S)^{-2} is sent to S^2 times itself.
    const EPoly t = kL - kOne;
    const ZetaFn z = (gi * gi).scale(t * t * EPoly::L(-2));
    CHECK(z.dual() == ZetaFn::s_power(2) * z);

    // A bare positive S-power lies outside the Laurent-localized ring.
    CHECK_THROWS_AS(ZetaFn::s_power(1).dual(), NotDualizable);
}

TEST_CASE("constant-term operator on pinned values") {
    const Gate g(1, 1);
    CHECK(ZetaFn::gate_series(g).ct() == -kOne);
    CHECK(ZetaFn(kL - kOne).ct() == kL - kOne);
    CHECK_THROWS_AS(ZetaFn::s_power(1).ct(), NotInCTDomain);
    // L^{-s} with an unrelated denominator is still outside the domain.
    CHECK_THROWS_AS((ZetaFn::monomial(EPoly::L(-2), 3) *
                     ZetaFn::gate_inverse(Gate(2, 1)))
                        .ct(),
                    NotInCTDomain);
}

TEST_CASE("series expansion on pinned values") {
    const ZetaFn gi = ZetaFn::gate_inverse(Gate(1, 1));
    CHECK(gi.expand_series(2) ==
          std::vector<EPoly>{kOne, EPoly::L(-1), EPoly::L(-2)});

    // Zeta function of a smooth coordinate on the line: coefficient of
    // S^n is (L-1)L^{-(n+1)}.
    const ZetaFn zx = gi.scale((kL - kOne) * EPoly::L(-1));
    CHECK(zx.expand_series(1)[1] == (kL - kOne) * EPoly::L(-2));

    CHECK(zx.expand_series(0) == std::vector<EPoly>{(kL - kOne) * EPoly::L(-1)});
}

TEST_CASE("integer-s evaluation") {
    const ZetaFn gi = ZetaFn::gate_inverse(Gate(1, 1));
    auto [n0, d0] = gi.eval_integer_s(0);
    CHECK(n0 == kOne);
    CHECK(d0 == kOne - EPoly::L(-1));

    const ZetaFn zx = gi.scale((kL - kOne) * EPoly::L(-1));
    auto [n1, d1] = zx.eval_integer_s(1);
    CHECK(n1 == (kL - kOne) * EPoly::L(-1));
    CHECK(d1 == kOne - EPoly::L(-2));

    // The d-evaluation equals the directly summed geometric series
    // sum_n (L-1) L^{-n-1} L^{-nd} = (L-1)L^{-1} / (1 - L^{-d-1}):
    // cross-multiplied equality of exact fractions.
    for (long d = 0; d <= 5; ++d) {
        auto [num, den] = zx.eval_integer_s(d);
        const EPoly closed_num = (kL - kOne) * EPoly::L(-1);
        const EPoly closed_den = kOne - EPoly::L(-d - 1);
        CHECK(num * closed_den == closed_num * den);
    }
}

TEST_CASE("randomized normal-form independence") {
    std::mt19937_64 rng(0x2e7a0001u);
    for (int i = 0; i < 200; ++i) {
        const ZetaFn a = random_zeta(rng);
        const ZetaFn b = random_zeta(rng);
        const ZetaFn c = random_zeta(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == ZetaFn());
        // Construction history: multiplying by a gate polynomial and its
        // inverse is the identity, whatever the operand's history.
        const Gate g = random_gate(rng);
        CHECK(a * gate_poly(g) * ZetaFn::gate_inverse(g) == a);
    }
}

TEST_CASE("randomized duality involution") {
    std::mt19937_64 rng(0xd0a20002u);
    for (int i = 0; i < 200; ++i) {
        const ZetaFn a = random_zeta(rng);
        const ZetaFn b = random_zeta(rng);
        CHECK(a.dual().dual() == a);
        CHECK((a * b).dual() == a.dual() * b.dual());
        CHECK((a + b).dual() == a.dual() + b.dual());
    }
}

TEST_CASE("randomized constant-term homomorphism on its domain") {
    std::mt19937_64 rng(0xc7d0003u);
    for (int i = 0; i < 200; ++i) {
        auto [a, ca] = random_ct_element(rng);
        auto [b, cb] = random_ct_element(rng);
        CHECK(a.ct() == ca);
        CHECK((a + b).ct() == ca + cb);
        CHECK((a * b).ct() == ca * cb);
    }
}

TEST_CASE("randomized series-rational consistency") {
    std::mt19937_64 rng(0x5e7e0004u);
    const long n_max = 6;
    for (int i = 0; i < 200; ++i) {
        // Product expansion is the Cauchy product of expansions.
        const ZetaFn a = random_zeta(rng);
        const ZetaFn b = random_zeta(rng);
        const auto sa = a.expand_series(n_max);
        const auto sb = b.expand_series(n_max);
        const auto sab = (a * b).expand_series(n_max);
        for (long n = 0; n <= n_max; ++n) {
            EPoly cauchy;
            for (long k = 0; k <= n; ++k)
                cauchy += sa[static_cast<size_t>(k)] * sb[static_cast<size_t>(n - k)];
            CHECK(sab[static_cast<size_t>(n)] == cauchy);
        }

        // Telescoping: the expansion of a gate inverse, multiplied back
        // by the gate polynomial, is 1 through order n_max.
        const Gate g = random_gate(rng);
        const auto series = ZetaFn::gate_inverse(g).expand_series(n_max);
        for (long n = 0; n <= n_max; ++n) {
            EPoly back = series[static_cast<size_t>(n)];
            if (n >= g.N) back -= EPoly::L(-g.n) * series[static_cast<size_t>(n - g.N)];
            CHECK(back == (n == 0 ? EPoly::one() : EPoly::zero()));
        }
    }
}

TEST_CASE("rendering is deterministic") {
    const ZetaFn z = ZetaFn::gate_inverse(Gate(3, 3)).scale(EPoly::L(-2) *
                                                            (kL - kOne));
    CHECK(z.to_string() == z.to_string());
    CHECK(!z.to_string().empty());
    CHECK(ZetaFn().to_string() == "0");
}

TEST_CASE("structured rendering lists exponent arrays") {
    // zero: both arrays empty
    CHECK(ZetaFn().to_json() == "{\"numerator\":[],\"gates\":[]}");

    // a constant with two terms: S-power 0, lexicographic (u, v) order
    CHECK(ZetaFn(EPoly(2) + kL).to_json() ==
          "{\"numerator\":[{\"s\":0,\"terms\":[[0,0,\"2\"],[1,1,\"1\"]]}],"
          "\"gates\":[]}");

    // one gate series: numerator L^{-1} S^1, denominator gate (1, 1)
    CHECK(ZetaFn::gate_series(Gate(1, 1)).to_json() ==
          "{\"numerator\":[{\"s\":1,\"terms\":[[-1,-1,\"1\"]]}],"
          "\"gates\":[[1,1]]}");

    // gates render as a sorted multiset with repetition
    const ZetaFn sq =
        ZetaFn::gate_inverse(Gate(2, 1)) * ZetaFn::gate_inverse(Gate(1, 1));
    CHECK(sq.to_json() ==
          "{\"numerator\":[{\"s\":0,\"terms\":[[0,0,\"1\"]]}],"
          "\"gates\":[[1,1],[2,1]]}");
}
