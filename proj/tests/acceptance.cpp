// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include "ogring/expression.hpp"
#include "ogring/families.hpp"
#include "ogring/steenrod.hpp"
#include "ogring/suites.hpp"
#include "properties.hpp"

#include <chrono>
#include <iostream>

using namespace ogring;

namespace {

struct Criterion {
    std::string name;
    bool ok = true;
    std::vector<std::string> details;
    double seconds = 0;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            details.push_back("FAILED: " + what);
        }
    }
};

int failures = 0;

template <typename Fn>
void run_criterion(const std::string& name, double budget_seconds, Fn fn) {
    Criterion c;
    c.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.details.push_back(std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && c.seconds >= budget_seconds) {
        c.ok = false;
        c.details.push_back("runtime budget exceeded");
    }
    std::cout << (c.ok ? "[pass] " : "[FAIL] ") << name << "  (" << c.seconds << " s)\n";
    for (const auto& d : c.details) std::cout << "        " << d << "\n";
    if (!c.ok) ++failures;
}

long v2_factorial(long j) {
    long v = 0;
    for (long p = 2; p <= j; p *= 2) v += j / p;
    return v;
}

}  // namespace

int main() {
    const std::uint64_t seed = 12345;

    run_criterion("1. appendix pieri closed forms, n <= 12, example counts r <= 10", 60, [&](Criterion& c) {
        for (int n = 2; n <= 12; ++n) {
            SuiteContext ctx{RingParams::exact_ring(n), seed, 1};
            auto cert = suite_appendix_pieri(ctx);
            c.require(cert.all_ok(), "appendix suite at n=" + std::to_string(n));
        }
    });

    run_criterion("2. f(i)^2 square expansions mod I^2, all 1 < i < n <= 10", 60, [&](Criterion& c) {
        for (int n = 3; n <= 10; ++n) {
            ReesRing R{RingParams::exact_ring(n)};
            for (int i = 2; i <= n - 1; ++i) {
                auto lhs = R.pieri_mul(i, R.f(i));
                auto rhs = R.scale(R.f(2 * i), (i % 2 == 1) ? Int(1) : Int(-1));
                for (int k = 1; k <= i - 1; ++k) {
                    rhs = R.add(rhs, R.scale(R.pieri_mul(i - k, R.f(i + k)), Int(2)));
                    rhs = R.sub(rhs, R.mul_t(R.pieri_mul(i - k + 1, R.f(i + k))));
                }
                if (i % 2 == 0) rhs = R.add(rhs, R.mul_t(R.f(2 * i + 1)));
                c.require(R.congruent_mod_ideal(lhs, rhs, 2),
                          "n=" + std::to_string(n) + " i=" + std::to_string(i));
            }
        }
    });

    run_criterion("3. n = 8 anchor values", 10, [&](Criterion& c) {
        RingParams params = RingParams::exact_ring(8);
        ReesRing R{params};
        ChowRing C{params};
        auto fam = IndexFamilies::make(8);

        ReesElem f1 = R.unit();
        for (int k = 0; k < 14; ++k) f1 = R.pieri_mul(1, f1);
        ReesElem f14 = f1;
        ReesElem f15 = R.pieri_mul(1, f14);

        auto lhs1 = R.apply_g(fam.j_set, f15);
        c.require(R.ideal_valuation(lhs1).at_least(5), "v_K(f(1)^15 g({2,3,6,7})) >= 5");

        auto lhs2 = R.apply_g(fam.j_prime, f14);
        auto rhs2 = R.scale(R.mul_t_pow(R.f_product(interval(2, 8)), 2), Int(4));
        c.require(R.ideal_valuation(R.sub(lhs2, rhs2)).at_least(5),
                  "v_K(f(1)^14 g({2,4,6,7}) - 2^2 t^2 f([2,8])) >= 5");

        ChowElem e15 = C.unit();
        for (int k = 0; k < 15; ++k) e15 = C.mul_gen(1, e15);
        for (int j : fam.j_set) e15 = C.mul(e15, res(shat(j, 8), C));
        Int top = C.degree_top(e15);
        c.require(((top % 32) + 32) % 32 == 16, "point coefficient = 16 mod 32");
        c.require(top % 32 != 0, "point coefficient not 0 mod 32");
        c.require(torsion_index(8) == 16, "ind X = 16");
    });

    run_criterion("4. n = 16 theorem suite", 30 * 60, [&](Criterion& c) {
        RingParams params = RingParams::exact_ring(16);
        ReesRing R{params};
        ChowRing C{params};
        auto fam = IndexFamilies::make(16);
        const int m = params.m;  // 10

        ReesElem acc = R.unit();
        for (int k = 0; k < 62; ++k) acc = R.pieri_mul(1, acc);
        ReesElem f62 = acc;
        ReesElem f63 = R.pieri_mul(1, f62);

        auto ya = R.apply_g(fam.j_set, f63);
        c.require(R.ideal_valuation(ya).at_least(m + 1), "v_K(f(1)^63 g(J)) >= 11");

        auto zb = R.apply_g(fam.j_prime, f62);
        auto rhs = R.scale(R.mul_t_pow(R.f_product(interval(2, 16)), 2), pow2(8));
        c.require(R.ideal_valuation(R.sub(zb, rhs)).at_least(m + 1),
                  "f(1)^62 g(J') = 2^8 t^2 f([2,16]) mod I^11");

        ChowElem e63 = C.unit();
        for (int k = 0; k < 63; ++k) e63 = C.mul_gen(1, e63);
        for (int j : fam.j_set) e63 = C.mul(e63, res(shat(j, 16), C));
        auto point_scaled = C.scale(C.point_class(), pow2(10));
        c.require(C.congruent_mod_pow2(e63, point_scaled, 11),
                  "e(1)^63 res(S^(J)) = 2^10 e([1,16]) mod 2^11");
        Int top = C.degree_top(e63);
        c.require(top != 0 && v2(top) == 10, "point coefficient exactly divisible by 2^10");
        c.require(torsion_index(16) == 1024, "ind X = 1024");
        c.require(static_cast<int>(fam.j_set.size()) == 7, "|J| = 7");
        c.require(fam.j_sum() + 63 == 133, "sum J + 63 = 133 = dim X - 3");
    });

    run_criterion("5. valuation lower bounds for f(1) and e(1) powers, n in {8,16}", 30 * 60,
                  [&](Criterion& c) {
                      for (int n : {8, 16}) {
                          RingParams params = RingParams::exact_ring(n);
                          ReesRing R{params};
                          ChowRing C{params};
                          int v_n = params.v_n;
                          const int q = n * n / 4;

                          ReesElem fq = R.unit();
                          for (int k = 0; k < q - n; ++k) fq = R.pieri_mul(1, fq);
                          ReesElem f_qmn = fq;
                          for (int k = 0; k < n; ++k) fq = R.pieri_mul(1, fq);
                          c.require(R.ideal_valuation(f_qmn).at_least(n / 2 - 1 - v_n),
                                    "v_K(f(1)^{n^2/4-n}), n=" + std::to_string(n));
                          c.require(R.ideal_valuation(fq).at_least(n / 2 - 2),
                                    "v_K(f(1)^{n^2/4}), n=" + std::to_string(n));

                          ChowElem eq = C.unit();
                          for (int k = 0; k < q - n; ++k) eq = C.mul_gen(1, eq);
                          ChowElem e_qmn = eq;
                          for (int k = 0; k < n; ++k) eq = C.mul_gen(1, eq);
                          c.require(C.two_adic_valuation(e_qmn).at_least(n / 2 - 1 - v_n),
                                    "v(e(1)^{n^2/4-n}), n=" + std::to_string(n));
                          c.require(C.two_adic_valuation(eq).at_least(n / 2 - 2),
                                    "v(e(1)^{n^2/4}), n=" + std::to_string(n));
                      }
                  });

    run_criterion("6. oracle and property suites (>= 500 cases each, fixed seed)", 30 * 60,
                  [&](Criterion& c) {
                      auto cert = testing::property_suite(seed);
                      for (const auto& check : cert.checks)
                          c.require(check.status == CheckStatus::pass, check.name);
                      std::cout << "        seed " << cert.engine["seed"] << ", "
                                << cert.checks.size() << " properties\n";
                  });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass\n"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
