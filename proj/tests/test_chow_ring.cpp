#include "ogring/chow_ring.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace ogring;

namespace {
ChowRing ring8() { return ChowRing(RingParams::exact_ring(8)); }
}  // namespace

TEST_CASE("normalize: defining relation at small indices") {
    auto R = ring8();
    CHECK(R.normalize(std::vector<int>{1, 1}) == R.gen(2));

    // e(2)^2 = -e(4) + 2 e(1)e(3)
    auto got = R.normalize(std::vector<int>{2, 2});
    CHECK(R.coefficient(got, std::vector<int>{4}) == -1);
    CHECK(R.coefficient(got, std::vector<int>{1, 3}) == 2);
    CHECK(got.terms.size() == 2);

    CHECK(R.normalize(std::vector<int>{8, 8}).is_zero());
    CHECK_THROWS_AS(R.normalize(std::vector<int>{0, 2}), invalid_input);

    // indices above n denote zero
    CHECK(R.normalize(std::vector<int>{9}).is_zero());
}

TEST_CASE("normalize: termination witness accepted on every rewrite path") {
    auto R = ring8();
    for (auto ms : {std::vector<int>{3, 3, 3}, {4, 4, 2, 2}, {1, 1, 1, 1, 1}, {5, 5, 6, 6}}) {
        CHECK_NOTHROW(R.normalize(ms, RewriteOrder::largest, 0, true));
    }
}

TEST_CASE("mul and pow basics") {
    auto R = ring8();
    CHECK(R.mul(R.mono(std::vector<int>{1, 2}), R.gen(3)) == R.mono(std::vector<int>{1, 2, 3}));
    CHECK(R.mul(R.gen(1), R.gen(1)) == R.gen(2));
    CHECK(R.pow(R.gen(1), 0) == R.unit());

    // e(1)^8 = e(8) mod 2 at n = 8
    auto p8 = R.pow(R.gen(1), 8);
    CHECK(R.congruent_mod_pow2(p8, R.gen(8), 1));
    CHECK_FALSE(R.congruent_mod_pow2(p8, R.gen(8), 4));
}

TEST_CASE("coefficient and degree_top") {
    auto R = ring8();
    CHECK(R.coefficient(R.gen(2), std::vector<int>{2}) == 1);
    CHECK(R.coefficient(R.zero(), std::vector<int>{1, 2}) == 0);
    CHECK(R.degree_top(R.point_class()) == 1);
    CHECK(R.degree_top(R.gen(2)) == 0);
}

TEST_CASE("two_adic_valuation") {
    auto R = ring8();
    auto x = R.add(R.scale(R.gen(1), Int(2)), R.scale(R.gen(2), Int(4)));
    CHECK(R.two_adic_valuation(x).exactly(1));
    CHECK(R.two_adic_valuation(R.zero()).infinite);
}

TEST_CASE("canonical text and json round trip") {
    auto R = ring8();
    auto x = R.normalize(std::vector<int>{2, 2});
    CHECK(R.text(x) == "2*e[1,3] + -1*e[4]");
    CHECK(R.text(R.zero()) == "0");
    CHECK(R.from_json(R.json(x)) == x);

    // normalize(serialize(normalize(raw))) is idempotent
    auto y = R.normalize(std::vector<int>{3, 3, 2});
    CHECK(R.from_json(R.json(y)) == y);
}

TEST_CASE("elements are bound to their engine") {
    auto a = ChowRing(RingParams::exact_ring(8));
    auto b = ChowRing(RingParams::exact_ring(6));
    CHECK_THROWS_AS(b.mul(a.gen(1), b.gen(1)), invalid_input);
}

TEST_CASE("structure constants agree with the closure oracle at n <= 4") {
    for (int n : {2, 3, 4}) {
        ChowRing R{RingParams::exact_ring(n)};
        testing::ChowOracle oracle(n);
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            auto a = testing::random_chow_elem(R, rng, 4);
            auto b = testing::random_chow_elem(R, rng, 4);
            auto engine = R.mul(a, b);
            auto via_oracle = oracle.mul(oracle.from_elem(a), oracle.from_elem(b));
            CHECK(oracle.equals(via_oracle, engine));
        }
    }
}

TEST_CASE("modulus mode matches exact-then-reduce") {
    auto exact = ChowRing(RingParams::exact_ring(8));
    auto modring = ChowRing(RingParams::mod_ring(8, 8));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto ms1 = testing::random_multiset(rng, 8, 6);
        auto ms2 = testing::random_multiset(rng, 8, 6);
        auto prod_exact = exact.mul(exact.normalize(ms1), exact.normalize(ms2));
        auto prod_mod = modring.mul(modring.normalize(ms1), modring.normalize(ms2));
        // reduce the exact result and compare
        ChowElem reduced = modring.zero();
        for (const auto& [mono, coef] : prod_exact.terms)
            reduced = modring.add(reduced, modring.scale(modring.mono(mono), coef));
        CHECK(reduced == prod_mod);
    }
}

TEST_CASE("modulus-mode valuation is a capped lower bound") {
    auto modring = ChowRing(RingParams::mod_ring(8, 6));
    auto x = modring.scale(modring.gen(1), pow2(6));  // reduces to zero
    auto v = modring.two_adic_valuation(x);
    CHECK(v.capped);
    CHECK(v.value == 6);
    CHECK_THROWS_AS(modring.congruent_mod_pow2(x, modring.zero(), 7), invalid_input);
}
