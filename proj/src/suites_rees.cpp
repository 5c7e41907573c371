#include "ogring/expression.hpp"
#include "ogring/families.hpp"
#include "ogring/suites.hpp"
#include "suites_util.hpp"

#include <map>
#include <memory>

namespace ogring {

namespace {

long v2_factorial(long j) {
    long v = 0;
    for (long p = 2; p <= j; p *= 2) v += j / p;
    return v;
}

Int factorial(long j) {
    Int r = 1;
    for (long k = 2; k <= j; ++k) r *= k;
    return r;
}

// f(1)^k for every exponent in `need`, sharing one multiplication chain.
std::map<int, ReesElem> f1_powers(const ReesRing& ring, std::vector<int> need) {
    std::sort(need.begin(), need.end());
    std::map<int, ReesElem> out;
    ReesElem x = ring.unit();
    int k = 0;
    for (int target : need) {
        for (; k < target; ++k) x = ring.pieri_mul(1, x);
        out.emplace(target, x);
    }
    return out;
}

}  // namespace

VerificationCertificate suite_rees_congruences(const SuiteContext& ctx) {
    const int n = ctx.params.n;
    if (!is_pow2(n) || n < 8) throw invalid_input("rees suite expects n a power of two, n >= 8");
    if (!ctx.params.exact() && ctx.params.mod_bits < ctx.params.m + 3)
        throw invalid_input("modulus mode needs K >= m+3 for the theorem suites");
    CheckRunner runner;
    std::vector<std::string> ids;
    auto rees = std::make_shared<ReesRing>(ctx.params);
    const auto fam = IndexFamilies::make(n);
    const int m = ctx.params.m;
    const int q = n * n / 4;

    auto powers = std::make_shared<std::map<int, ReesElem>>(
        f1_powers(*rees, {q - n, q - 2, q - 1, q, 2 * n, 3 * n, 4 * n}));

    // Relations for squares of f(i), in the three forms used downstream.
    ids.push_back("krelationinbarmodi");
    for (int i = 1; i <= n; ++i)
        runner.add("krelation.modi.i" + std::to_string(i),
                   "krelationinbarmodi: \"f(i)^2 = f(2i) mod I\"", [rees, i]() {
                       return detail::congruence_check(*rees, rees->pieri_mul(i, rees->f(i)),
                                                       rees->f(2 * i), 1);
                   });
    ids.push_back("krelationinbar");
    for (int i = 1; i <= n; ++i)
        runner.add("krelation.modsq.i" + std::to_string(i),
                   "krelationinbar: \"f(i)^2 = (-1)^{i-1} f(2i) [+ t f(2i+1)] + sum f(i+k)g(i-k) mod I^2\"",
                   [rees, i]() {
                       auto lhs = rees->pieri_mul(i, rees->f(i));
                       auto rhs = rees->scale(rees->f(2 * i), (i % 2 == 1) ? Int(1) : Int(-1));
                       if (i % 2 == 0) rhs = rees->add(rhs, rees->mul_t(rees->f(2 * i + 1)));
                       for (int k = 1; k <= i - 1; ++k)
                           rhs = rees->add(rhs, rees->mul_g(i - k, rees->f(i + k)));
                       return detail::congruence_check(*rees, lhs, rhs, 2);
                   });
    ids.push_back("krelationinbarlargeimodsquare");
    for (int i = (n + 1) / 2; i <= n; ++i)
        runner.add("krelation.largei.i" + std::to_string(i),
                   "krelationinbarlargeimodsquare: \"f(i)^2 = (-1)^{i-1} f(2i) + sum f(i+k)g(i-k) mod I^2\"",
                   [rees, i]() {
                       auto lhs = rees->pieri_mul(i, rees->f(i));
                       auto rhs = rees->scale(rees->f(2 * i), (i % 2 == 1) ? Int(1) : Int(-1));
                       for (int k = 1; k <= i - 1; ++k)
                           rhs = rees->add(rhs, rees->mul_g(i - k, rees->f(i + k)));
                       return detail::congruence_check(*rees, lhs, rhs, 2);
                   });

    ids.push_back("eq:gikigicki");
    for (int i = 1; i <= n; ++i)
        runner.add("g.in.ideal.i" + std::to_string(i),
                   "eq:gikigicki: \"g(i) in K^i(X) cap I(X)\"", [rees, i]() -> std::pair<bool, Json> {
                       auto g = rees->mul_g(i, rees->unit());
                       auto v = rees->ideal_valuation(g);
                       Json w;
                       w["valuation"] = v.str();
                       return {v.at_least(1), w};
                   });

    // Valuation consequences of the square expansions.
    ids.push_back("lemK:eij.K");
    for (int i : fam.i0)
        for (int j : {2, 3, 4})
            runner.add("eij.valuation.i" + std::to_string(i) + ".j" + std::to_string(j),
                       "lemK:eij: \"v_K(f(i)^j) >= v(j!)\"", [rees, i, j]() {
                           ReesElem x = rees->unit();
                           for (int s = 0; s < j; ++s) x = rees->pieri_mul(i, x);
                           return detail::valuation_check(*rees, x, v2_factorial(j));
                       });

    ids.push_back("lemK:eijIthree");
    for (int i : fam.i1)
        for (int j : {2, 3})
            runner.add("eijI3.valuation.i" + std::to_string(i) + ".j" + std::to_string(j),
                       "lemK:eijIthree: \"f(i)^j g(n-i)^j f(I3bar) = 0 mod I^{v(j!)+j+1}\"",
                       [rees, &fam, i, j, n]() {
                           ReesElem x = rees->f_product(fam.i3bar);
                           for (int s = 0; s < j; ++s) x = rees->pieri_mul(i, x);
                           for (int s = 0; s < j; ++s) x = rees->mul_g(n - i, x);
                           return detail::valuation_check(*rees, x, v2_factorial(j) + j + 1);
                       });
    for (int i : fam.i2)
        for (int j : {2, 3})
            runner.add("eijI3.valuation.i" + std::to_string(i) + ".j" + std::to_string(j),
                       "lemK:eijIthree: \"f(i)^j g(n-i)^j f(I3bar) = sum a(J) f(J) f(I3bar), a(J) in I^{v(j!)+j}\"",
                       [rees, &fam, i, j, n]() {
                           ReesElem x = rees->f_product(fam.i3bar);
                           for (int s = 0; s < j; ++s) x = rees->pieri_mul(i, x);
                           for (int s = 0; s < j; ++s) x = rees->mul_g(n - i, x);
                           return detail::valuation_check(*rees, x, v2_factorial(j) + j);
                       });
    if (fam.i1.empty() && fam.i2.empty())
        runner.add("eijI3.valuation.vacuous", "lemK:eijIthree: \"f(i)^j g(n-i)^j f(I3bar)\" (I1, I2 empty)",
                   []() -> std::pair<bool, Json> {
                       return {true, Json{{"note", "I1 and I2 are empty at this n"}}};
                   });

    // Powers of f(1)^n.
    ids.push_back("lemK:eonenj.K");
    for (int j : {2, 3, 4})
        runner.add("eonenj.membership.j" + std::to_string(j),
                   "lemK:eonenj: \"f(1)^{nj} in I^{j+v(j!)-1}\"", [rees, powers, j, n]() {
                       return detail::valuation_check(*rees, powers->at(j * n),
                                                      j + v2_factorial(j) - 1);
                   });
    for (int j : {2, 3})
        runner.add("eonenj.congruence.j" + std::to_string(j),
                   "lemK:eonenj: \"f(1)^{nj} = -j (sum f(i)g(n-i))^{j-1} f(n) mod I^{j+v(j!)}\"",
                   [rees, powers, &fam, j, n]() {
                       std::vector<ExprPtr> hs;
                       for (int i : fam.i0) hs.push_back(prod({F(i), G(n - i)}));
                       ExprPtr rhs_expr = prod({lit(Int(-j)), pw(sum(hs), j - 1), F(n)});
                       auto rhs = eval_expression(rhs_expr, *rees);
                       return detail::congruence_check(*rees, powers->at(j * n), rhs,
                                                       j + v2_factorial(j));
                   });
    runner.add("eonenj.particular.nsq4",
               "lemK:eonenj: \"v_K(f(1)^{n^2/4}) >= n/2 - 2\"", [rees, powers, q, n]() {
                   return detail::valuation_check(*rees, powers->at(q), n / 2 - 2);
               });
    runner.add("eonenj.particular.nsq4mn",
               "lemK:eonenj: \"v_K(f(1)^{n^2/4 - n}) >= n/2 - 1 - v(n)\"",
               [rees, powers, q, n, &fam]() {
                   return detail::valuation_check(*rees, powers->at(q - n), n / 2 - 1 - fam.v_n);
               });

    // f(1)^{n^2/4-n} times f(I3) f(n/2) and its g-variant.
    ids.push_back("propK:eoneeIthree.K");
    runner.add("eoneeIthree.g-interval",
               "propK:eoneeIthree: \"g([n/4+2, n/2-1]) in I^{n/4-2}\"", [rees, n]() {
                   auto g = rees->g_product(interval(n / 4 + 2, n / 2 - 1));
                   return detail::valuation_check(*rees, g, n / 4 - 2);
               });
    runner.add("eoneeIthree.membership",
               "propK:eoneeIthree: \"f(1)^{n^2/4-n} f(I3) f(n/2) in I^{n/2-v(n)-1}\"",
               [rees, powers, &fam, q, n]() {
                   auto x = rees->apply_f(fam.i3, powers->at(q - n));
                   x = rees->pieri_mul(n / 2, x);
                   return detail::valuation_check(*rees, x, n / 2 - fam.v_n - 1);
               });
    runner.add("eoneeIthree.congruence",
               "propK:eoneeIthree: \"f(1)^{n^2/4-n} f(I3) f(n/2) = -(n/4-1)! f([n/2,n]) g([n/4+2,n/2-1]) mod I^{n/2-v(n)}\"",
               [rees, powers, &fam, q, n]() {
                   auto lhs = rees->apply_f(fam.i3, powers->at(q - n));
                   lhs = rees->pieri_mul(n / 2, lhs);
                   auto rhs = rees->f_product(interval(n / 2, n));
                   rhs = rees->apply_g(interval(n / 4 + 2, n / 2 - 1), rhs);
                   rhs = rees->scale(rhs, -factorial(n / 4 - 1));
                   return detail::congruence_check(*rees, lhs, rhs, n / 2 - fam.v_n);
               });

    ids.push_back("cor:fonepower");
    runner.add("fonepower.membership",
               "cor:fonepower: \"f(1)^{n^2/4-n} g(I3) in I^{3n/4-v(n)}\"",
               [rees, powers, &fam, q, n]() {
                   auto x = rees->apply_g(fam.i3, powers->at(q - n));
                   return detail::valuation_check(*rees, x, 3 * n / 4 - fam.v_n);
               });
    runner.add("fonepower.congruence",
               "cor:fonepower: \"f(1)^{n^2/4-n} g(I3) f(n/2) = 2^{n/2-v(n)+2} f([n/2,n]) g([n/4+2,n/2-1]) mod I^{3n/4-v(n)+1}\"",
               [rees, powers, &fam, q, n]() {
                   auto lhs = rees->apply_g(fam.i3, powers->at(q - n));
                   lhs = rees->pieri_mul(n / 2, lhs);
                   auto rhs = rees->f_product(interval(n / 2, n));
                   rhs = rees->apply_g(interval(n / 4 + 2, n / 2 - 1), rhs);
                   rhs = rees->scale(rhs, pow2(n / 2 - fam.v_n + 2));
                   return detail::congruence_check(*rees, lhs, rhs, 3 * n / 4 - fam.v_n + 1);
               });

    // Multisets with a duplicated entry and full tail.
    ids.push_back("lemK:ijmultisubsetnew.K");
    {
        auto sets = (n == 8) ? detail::star_multisets_exhaustive(n, 2)
                             : detail::star_multisets_sampled(n, 500, ctx.seed);
        runner.add("multisubset.star." + std::string(n == 8 ? "exhaustive" : "sampled"),
                   "lemK:ijmultisubsetnew: \"f(J) = 0 mod I\"",
                   [rees, sets = std::move(sets)]() -> std::pair<bool, Json> {
                       int checked = 0, trivially_zero = 0;
                       for (const auto& j_multiset : sets) {
                           auto x = rees->f_product(j_multiset);
                           if (x.is_zero()) ++trivially_zero;
                           if (!rees->ideal_valuation(x).at_least(1)) {
                               Json w;
                               w["counterexample"] = j_multiset;
                               return {false, w};
                           }
                           ++checked;
                       }
                       Json w;
                       w["instances"] = checked;
                       w["vanishing"] = trivially_zero;
                       return {checked > 0, w};
                   });
    }

    // The two top congruences behind the main theorem.
    const std::string a_id = (n == 8) ? "eq:fonefifteen1" : "lemK:indXplus1";
    const std::string b_id = (n == 8) ? "eq:fonefifteen2" : "lemK:indXplus1";
    ids.push_back((n == 8) ? "lemK:indXplus1n8" : "lemK:indXplus1");
    runner.add("indXplus1.a",
               a_id + ": \"f(1)^{n^2/4-1} g(J) = 0 mod I^{v(ind X)+1}\"",
               [rees, powers, &fam, q, m]() {
                   auto y = rees->apply_g(fam.j_set, powers->at(q - 1));
                   return detail::valuation_check(*rees, y, m + 1);
               });
    runner.add("indXplus1.b",
               b_id + ": \"f(1)^{n^2/4-2} g(J') = 2^{v(ind X)-2} t^2 f([2,n]) mod I^{v(ind X)+1}\"",
               [rees, powers, &fam, q, m, n]() {
                   auto z = rees->apply_g(fam.j_prime, powers->at(q - 2));
                   auto rhs = rees->mul_t_pow(rees->f_product(interval(2, n)), 2);
                   rhs = rees->scale(rhs, pow2(m - 2));
                   return detail::congruence_check(*rees, z, rhs, m + 1);
               });

    add_manifest_check(runner, "rees", n, ids);
    return runner.run("rees", ctx);
}

}  // namespace ogring
