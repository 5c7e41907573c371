#include "ogring/rees_ring.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace ogring;

namespace {
ReesRing ring8() { return ReesRing(RingParams::exact_ring(8)); }
}  // namespace

TEST_CASE("pieri_mul basics") {
    auto R = ring8();
    CHECK(R.pieri_mul(1, R.f(1)) == R.f(2));
    CHECK(R.pieri_mul(8, R.f(8)).is_zero());
    CHECK(R.pieri_mul(9, R.unit()).is_zero());
    CHECK_THROWS_AS(R.pieri_mul(0, R.unit()), invalid_input);

    // f(m) f(1) = f(m+1) + f_{m,1} - t f_{m+1,1}
    auto x = R.pieri_mul(1, R.f(4));
    CHECK(x.terms.size() == 3);
    CHECK(x.terms.at(pack_key(bit_of(5), 5)) == 1);
    CHECK(x.terms.at(pack_key(bit_of(4) | bit_of(1), 5)) == 1);
    CHECK(x.terms.at(pack_key(bit_of(5) | bit_of(1), 5)) == -1);
}

TEST_CASE("t and g multiplication") {
    auto R = ring8();
    auto f3 = R.f(3);
    auto t_f3 = R.mul_t(f3);
    CHECK(t_f3.terms.count(pack_key(bit_of(3), 2)) == 1);
    CHECK(R.mul_t(R.zero()).is_zero());

    CHECK(R.mul_g(8, R.unit()) == R.scale(R.f(8), Int(2)));
    for (int i = 1; i <= 8; ++i) {
        auto v = R.ideal_valuation(R.mul_g(i, R.unit()));
        CHECK(v.exactly(1));
    }
}

TEST_CASE("ideal valuation closed form") {
    auto R = ring8();
    CHECK(R.ideal_valuation(R.mul_t(R.unit())).exactly(1));
    CHECK(R.ideal_valuation(R.zero()).infinite);

    // 2^a e_lambda u^{|lambda|-q} has valuation a+q
    auto base = R.basis(StrictPartition{{5, 2}}, 7);
    auto x = R.scale(R.mul_t_pow(base, 3), pow2(2));
    CHECK(R.ideal_valuation(x).exactly(5));

    // matches the subgroup-enumeration oracle
    CHECK(testing::rees_valuation_oracle(x, 12) == 5);
}

TEST_CASE("congruences modulo ideal powers") {
    ReesRing R{RingParams::exact_ring(6)};
    for (int i = 1; i <= 6; ++i)
        CHECK(R.congruent_mod_ideal(R.pieri_mul(i, R.f(i)), R.f(2 * i), 1));
}

TEST_CASE("graded components and homogeneity") {
    auto R = ring8();
    auto mixed = R.add(R.f(1), R.mul_t(R.f(2)));  // both grade 1
    int g = 0;
    CHECK(R.homogeneous(mixed, &g));
    CHECK(g == 1);
    CHECK(R.graded_component(mixed, 1) == mixed);
    CHECK(R.graded_component(mixed, 2).is_zero());

    auto inhom = R.add(R.f(1), R.f(2));
    CHECK_FALSE(R.homogeneous(inhom));
}

TEST_CASE("point/line expression") {
    auto R = ring8();
    const int r = R.params().dim_x;
    auto p = R.point_product();
    auto l = R.line_product();
    CHECK(p.terms.size() == 1);

    auto cp = R.express_in_point_line_basis(R.regrade(p, r - 3), r - 3);
    CHECK(cp.line == 0);
    CHECK(cp.point == 1);
    auto cl = R.express_in_point_line_basis(R.regrade(l, r - 3), r - 3);
    CHECK(cl.line == 1);
    CHECK(cl.point == 0);

    // random integer combinations round-trip
    auto combo = R.add(R.scale(R.regrade(l, r - 3), Int(-7)), R.scale(R.regrade(p, r - 3), Int(9)));
    auto c = R.express_in_point_line_basis(combo, r - 3);
    CHECK(c.line == -7);
    CHECK(c.point == 9);

    CHECK_THROWS_AS(R.express_in_point_line_basis(R.f(1), 1), inconsistency_error);
}

TEST_CASE("canonical ideal decomposition") {
    auto R = ring8();
    auto lam = StrictPartition{{5, 2}};

    auto x0 = R.scale(R.basis(lam, 7), pow2(4));
    auto b0 = R.canonical_ideal_decomposition(x0, 4, 3);
    CHECK(b0[0].terms.size() == 1);
    CHECK(b0[1].is_zero());
    CHECK(R.recompose(b0, 4) == x0);

    auto xt = R.mul_t_pow(R.basis(lam, 7), 4);  // all-t term
    auto bt = R.canonical_ideal_decomposition(xt, 4, 4);
    CHECK(bt[4].terms.size() == 1);
    CHECK(R.recompose(bt, 4) == xt);

    CHECK_THROWS_AS(R.canonical_ideal_decomposition(R.f(1), 3, 3), invalid_input);
}

TEST_CASE("basis grade validation and regrade") {
    auto R = ring8();
    CHECK_THROWS_AS(R.basis(bit_of(2), 3), invalid_input);
    auto x = R.basis(bit_of(2), 2);
    CHECK(R.regrade(x, 0).terms.count(pack_key(bit_of(2), 0)) == 1);
    CHECK_THROWS_AS(R.regrade(x, 3), invalid_input);
}

TEST_CASE("psi projection to the chow ring") {
    auto R = ring8();
    ChowRing C{RingParams::exact_ring(8)};
    CHECK(psi_apply(R.f(3), R, C) == C.gen(3));
    CHECK(psi_apply(R.mul_t(R.f(3)), R, C).is_zero());
    CHECK(psi_apply(R.mul_g(4, R.unit()), R, C) == C.scale(C.gen(4), Int(2)));
}

TEST_CASE("valuation algebra") {
    auto R = ring8();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = testing::random_rees_elem(R, rng, 3);
        if (x.is_zero()) continue;
        auto v = R.ideal_valuation(x);
        CHECK(R.ideal_valuation(R.scale(x, Int(2))).exactly(v.value + 1));
        CHECK(R.ideal_valuation(R.mul_t(x)).exactly(v.value + 1));
        int i = 1 + static_cast<int>(rng() % 8);
        auto fp = R.pieri_mul(i, x);
        if (!fp.is_zero()) CHECK(R.ideal_valuation(fp).at_least(v.value));
        auto gp = R.mul_g(i, x);
        if (!gp.is_zero()) CHECK(R.ideal_valuation(gp).at_least(v.value + 1));
    }
}
