#include "ogring/expression.hpp"
#include "ogring/families.hpp"
#include "ogring/steenrod.hpp"
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

std::map<int, ChowElem> e1_powers(const ChowRing& ring, std::vector<int> need) {
    std::sort(need.begin(), need.end());
    std::map<int, ChowElem> out;
    ChowElem x = ring.unit();
    int k = 0;
    for (int target : need) {
        for (; k < target; ++k) x = ring.mul_gen(1, x);
        out.emplace(target, x);
    }
    return out;
}

Mask interval_mask(int lo, int hi) {
    Mask m = 0;
    for (int i = lo; i <= hi; ++i) m |= bit_of(i);
    return m;
}

}  // namespace

VerificationCertificate suite_chow_congruences(const SuiteContext& ctx) {
    const int n = ctx.params.n;
    if (!is_pow2(n) || n < 8) throw invalid_input("chow suite expects n a power of two, n >= 8");
    if (!ctx.params.exact() && ctx.params.mod_bits < ctx.params.m + 3)
        throw invalid_input("modulus mode needs K >= m+3 for the theorem suites");
    CheckRunner runner;
    std::vector<std::string> ids;
    auto chow = std::make_shared<ChowRing>(ctx.params);
    const auto fam = IndexFamilies::make(n);
    const int m = ctx.params.m;
    const int q = n * n / 4;

    auto powers =
        std::make_shared<std::map<int, ChowElem>>(e1_powers(*chow, {q - n, q - 1, q, 2 * n, 3 * n, 4 * n}));

    auto fold_shat = [chow, n](ChowElem x, const std::vector<int>& indices) {
        for (int i : indices) x = chow->mul(x, res(shat(i, n), *chow));
        return x;
    };

    // The defining square-free rewrite, cross-checked between the memoized
    // product path and both normalization strategies.
    ids.push_back("relationinbar");
    for (int i = 1; i <= n; ++i)
        runner.add("relation.squares.i" + std::to_string(i),
                   "relationinbar: \"e(i)^2 = (-1)^{i+1} e(2i) + 2 sum (-1)^{k+1} e(i-k)e(i+k)\"",
                   [chow, i]() -> std::pair<bool, Json> {
                       auto via_mul = chow->mul(chow->gen(i), chow->gen(i));
                       auto via_norm = chow->normalize(std::vector<int>{i, i}, RewriteOrder::largest,
                                                       0, true);
                       auto via_small = chow->normalize(std::vector<int>{i, i}, RewriteOrder::smallest);
                       Json w;
                       w["expansion"] = chow->text(via_mul);
                       return {via_mul == via_norm && via_mul == via_small, w};
                   });

    // Structure of e(i)^j in the free basis.
    ids.push_back("lemK:eij.CH");
    const Mask tail_i12 = interval_mask(n / 2 + 1, 3 * n / 4 - 2);
    const Mask tail_i3bar = interval_mask(3 * n / 4 - 1, n);
    for (int i : fam.i0)
        for (int j : {2, 3, 4})
            runner.add("eij.structure.i" + std::to_string(i) + ".j" + std::to_string(j),
                       "lemK:eij: \"e(i)^j = 2^{v(j!)} sum e(J) mod 2^{v(j!)+1}, J cap [i+1,n] nonempty\"",
                       [chow, i, j, n, tail_i12, tail_i3bar, &fam]() -> std::pair<bool, Json> {
                           auto p = chow->pow(chow->gen(i), j);
                           const long vj = v2_factorial(j);
                           const Int mod = pow2(vj + 1), half = pow2(vj);
                           const Mask above = interval_mask(i + 1, n);
                           bool in_i2 = std::find(fam.i2.begin(), fam.i2.end(), i) != fam.i2.end();
                           long survivors = 0;
                           for (const auto& [mono, coef] : p.terms) {
                               Int r = ((coef % mod) + mod) % mod;
                               if (r == 0) continue;
                               if (r != half) return {false, Json{{"bad_coefficient", coef.str()}}};
                               ++survivors;
                               if ((mono & above) == 0)
                                   return {false, Json{{"support_misses_tail", chow->text(p)}}};
                               if (in_i2 && j >= 2 && (mono & ~tail_i12) != 0 && (mono & tail_i3bar) == 0)
                                   return {false, Json{{"support_violates_I2_refinement", true}}};
                           }
                           Json w;
                           w["terms"] = p.terms.size();
                           w["survivors_mod_2^" + std::to_string(vj + 1)] = survivors;
                           return {true, w};
                       });

    // Powers of e(1)^n.
    ids.push_back("lemK:eonenj.CH");
    for (int j : {2, 3, 4})
        runner.add("eonenj.chow.membership.j" + std::to_string(j),
                   "lemK:eonenj: \"e(1)^{nj} = 0 mod 2^{j+v(j!)-1}\"", [chow, powers, j, n]() {
                       return detail::valuation_check(*chow, powers->at(j * n),
                                                      j + v2_factorial(j) - 1);
                   });
    for (int j : {2, 3})
        runner.add("eonenj.chow.congruence.j" + std::to_string(j),
                   "lemK:eonenj: \"e(1)^{nj} = -j 2^{j-1} (sum e(i)e(n-i))^{j-1} e(n) mod 2^{j+v(j!)}\"",
                   [chow, powers, &fam, j, n]() {
                       ChowElem h = chow->zero();
                       for (int i : fam.i0)
                           h = chow->add(h, chow->mono(std::vector<int>{n - i, i}));
                       auto rhs = chow->pow(h, j - 1);
                       rhs = chow->mul_gen(n, rhs);
                       rhs = chow->scale(rhs, Int(-j) * pow2(j - 1));
                       return detail::congruence_check(*chow, powers->at(j * n), rhs,
                                                       j + v2_factorial(j));
                   });
    runner.add("eonenj.chow.particular.nsq4",
               "lemK:eonenj: \"v(e(1)^{n^2/4}) >= n/2 - 2\"", [chow, powers, q, n]() {
                   return detail::valuation_check(*chow, powers->at(q), n / 2 - 2);
               });
    runner.add("eonenj.chow.particular.nsq4mn",
               "lemK:eonenj: \"v(e(1)^{n^2/4-n}) >= n/2 - 1 - v(n)\"", [chow, powers, &fam, q, n]() {
                   return detail::valuation_check(*chow, powers->at(q - n), n / 2 - 1 - fam.v_n);
               });

    ids.push_back("propK:eoneeIthree.CH");
    runner.add("eoneeIthree.chow.membership",
               "propK:eoneeIthree: \"e(1)^{n^2/4-n} e(I3) e(n/2) = 0 mod 2^{n/2-v(n)-1}\"",
               [chow, powers, &fam, q, n]() {
                   auto x = chow->mul(powers->at(q - n), chow->mono(fam.i3));
                   x = chow->mul_gen(n / 2, x);
                   return detail::valuation_check(*chow, x, n / 2 - fam.v_n - 1);
               });
    runner.add("eoneeIthree.chow.congruence",
               "propK:eoneeIthree: \"e(1)^{n^2/4-n} e(I3) e(n/2) = -(n/4-1)! 2^{n/4-2} e([n/4+2,n]) mod 2^{n/2-v(n)}\"",
               [chow, powers, &fam, q, n]() {
                   auto lhs = chow->mul(powers->at(q - n), chow->mono(fam.i3));
                   lhs = chow->mul_gen(n / 2, lhs);
                   auto rhs = chow->mono(interval(n / 4 + 2, n));
                   rhs = chow->scale(rhs, -factorial(n / 4 - 1) * pow2(n / 4 - 2));
                   return detail::congruence_check(*chow, lhs, rhs, n / 2 - fam.v_n);
               });

    ids.push_back("lem:eonepower");
    runner.add("eonepower.membership",
               "lem:eonepower: \"e(1)^{n^2/4-n} res(S^(I3)) = 0 mod 2^{3n/4-v(n)}\"",
               [chow, powers, fold_shat, &fam, q, n]() {
                   auto x = fold_shat(powers->at(q - n), fam.i3);
                   return detail::valuation_check(*chow, x, 3 * n / 4 - fam.v_n);
               });
    runner.add("eonepower.congruence",
               "lem:eonepower: \"e(1)^{n^2/4-n} res(S^(I3)) e(n/2) = 2^{3n/4-v(n)} e([n/4+2,n]) mod 2^{3n/4-v(n)+1}\"",
               [chow, powers, fold_shat, &fam, q, n]() {
                   auto lhs = fold_shat(powers->at(q - n), fam.i3);
                   lhs = chow->mul_gen(n / 2, lhs);
                   auto rhs = chow->scale(chow->mono(interval(n / 4 + 2, n)), pow2(3 * n / 4 - fam.v_n));
                   return detail::congruence_check(*chow, lhs, rhs, 3 * n / 4 - fam.v_n + 1);
               });

    ids.push_back("lemK:ijmultisubsetnew.CH");
    {
        auto sets = (n == 8) ? detail::star_multisets_exhaustive(n, 2)
                             : detail::star_multisets_sampled(n, 500, ctx.seed);
        runner.add("multisubset.star.chow." + std::string(n == 8 ? "exhaustive" : "sampled"),
                   "lemK:ijmultisubsetnew: \"e(J) = 0 mod 2\"",
                   [chow, sets = std::move(sets)]() -> std::pair<bool, Json> {
                       int checked = 0, vanishing = 0;
                       for (const auto& j_multiset : sets) {
                           auto x = chow->normalize(j_multiset);
                           if (x.is_zero()) ++vanishing;
                           if (!chow->two_adic_valuation(x).at_least(1)) {
                               Json w;
                               w["counterexample"] = j_multiset;
                               return {false, w};
                           }
                           ++checked;
                       }
                       Json w;
                       w["instances"] = checked;
                       w["vanishing"] = vanishing;
                       return {checked > 0, w};
                   });
    }

    // Restriction-side facts.
    ids.push_back("eq:rescitwoe");
    runner.add("res.chern.classes", "eq:rescitwoe: \"res(c(i)) = 2e(i)\"; \"res(e) = e(1)\"",
               [chow, n]() -> std::pair<bool, Json> {
                   for (int i = 1; i <= n; ++i)
                       if (!(res(Ci(i), *chow) == chow->scale(chow->gen(i), Int(2))))
                           return {false, Json{{"failed_index", i}}};
                   bool e_ok = res(E1(), *chow) == chow->gen(1);
                   return {e_ok, Json{{"checked", n + 1}}};
               });

    ids.push_back("eq:steenrodshortenedformula");
    for (int i : std::vector<int>{1, 2, 3, n / 2, n - 2, n - 1, n})
        runner.add("shat.linear-part.i" + std::to_string(i),
                   "eq:steenrodshortenedformula: \"S^(i) = sum binom(i-1,j) c(i+j)\"",
                   [chow, i, n]() -> std::pair<bool, Json> {
                       auto got = res(shat(i, n), *chow);
                       ChowElem want = chow->zero();
                       for (int j = 0; j <= i - 1 && i + j <= n; ++j)
                           want = chow->add(want,
                                            chow->scale(chow->gen(i + j), Int(2) * binomial(i - 1, j)));
                       Json w;
                       w["res_shat"] = chow->text(got);
                       return {got == want, w};
                   });

    ids.push_back("eq:shat23");
    runner.add("shat.set23", "eq:shat23: \"res(S^({2,3})) = 2^2 (e(2)+e(3))(e(3)+2e(4)+e(5))\"",
               [chow, n]() -> std::pair<bool, Json> {
                   auto got = res(shat_set({2, 3}, n), *chow);
                   auto a = chow->add(chow->gen(2), chow->gen(3));
                   auto b = chow->add(chow->gen(3),
                                      chow->add(chow->scale(chow->gen(4), Int(2)), chow->gen(5)));
                   auto want = chow->scale(chow->mul(a, b), Int(4));
                   return {got == want, Json{{"res", chow->text(got)}}};
               });

    ids.push_back("torsionindex");
    runner.add("torsion.index", "torsionindex: \"ind X = 2^{n-2v(n)+2}\"",
               [n, m]() -> std::pair<bool, Json> {
                   Int expect = (n == 8) ? Int(16) : (n == 16 ? Int(1024) : pow2(24));
                   Json w;
                   w["ind_x"] = torsion_index(n).str();
                   w["exponent"] = m;
                   bool frozen_ok = (n > 32) || torsion_index(n) == expect;
                   return {torsion_index(n) == pow2(m) && frozen_ok, w};
               });

    // The top congruence on the restriction side, with its strictness.
    const std::string top_id = (n == 8) ? "lem:indXplus1n8" : "lem:indXplus1";
    ids.push_back(top_id);
    runner.add("indXplus1.chow",
               top_id + ": \"e(1)^{n^2/4-1} res(S^(J)) = ind X * e([1,n]) mod 2 ind X\"",
               [chow, powers, fold_shat, &fam, q, m, n]() -> std::pair<bool, Json> {
                   auto lhs = fold_shat(powers->at(q - 1), fam.j_set);
                   auto rhs = chow->scale(chow->point_class(), pow2(m));
                   auto [ok, w] = detail::congruence_check(*chow, lhs, rhs, m + 1);
                   Int top = chow->degree_top(lhs);
                   w["point_coefficient"] = top.str();
                   bool strict = (top != 0) && chow->params().coeff_val(top).exactly(m);
                   w["point_coefficient_v2"] = top == 0 ? Json("inf") : Json(v2(top));
                   return {ok && strict, w};
               });

    ids.push_back("lem:eonenjtorsioncor");
    runner.add("torsioncor.first",
               "lem:eonenjtorsioncor: \"e(1)^{n^2/4} res(S~(J)) = 0 mod 2 ind X\" (S^ scope)",
               [chow, powers, fold_shat, &fam, q, m]() {
                   auto x = fold_shat(powers->at(q), fam.j_set);
                   return detail::valuation_check(*chow, x, m + 1);
               });
    runner.add("torsioncor.margin",
               "lem:eonenjtorsioncor: \"v(2^{|J|} e(1)^{n^2/4}) > v(ind X)\" and \"v(2^{|J|+1} e(1)^{n^2/4-1}) > v(ind X)\"",
               [chow, powers, &fam, q, m]() -> std::pair<bool, Json> {
                   auto vq = chow->two_adic_valuation(powers->at(q));
                   auto vq1 = chow->two_adic_valuation(powers->at(q - 1));
                   long jsz = static_cast<long>(fam.j_set.size());
                   Json w;
                   w["v_e1_q"] = vq.str();
                   w["v_e1_qm1"] = vq1.str();
                   w["j_size"] = jsz;
                   bool ok = vq.at_least(m + 1 - jsz) && vq1.at_least(m + 1 - (jsz + 1));
                   return {ok, w};
               });
    runner.add("torsioncor.res-factor-valuation",
               "lem:eonenjtorsioncor mechanism: \"res(prod A_k) is divisible by 2^{|J|+1}\"",
               [chow, &fam, n]() -> std::pair<bool, Json> {
                   // each linear factor contributes one 2; a quadratic factor
                   // (any c(k)c(l) pair) contributes two
                   ChowElem sofar = chow->unit();
                   for (int i : fam.j_set) sofar = chow->mul(sofar, res(shat(i, n), *chow));
                   auto v_lin = chow->two_adic_valuation(sofar);
                   Valuation v_quad = Valuation::inf();
                   for (int k = 1; k <= n - 1; ++k)
                       for (int l : {k, n - 1}) {
                           auto pair_elem = res(prod({Ci(k), Ci(l)}), *chow);
                           v_quad = min_val(v_quad, chow->two_adic_valuation(pair_elem));
                       }
                   Json w;
                   w["v_res_shatJ"] = v_lin.str();
                   w["v_res_quadratic_factor_min"] = v_quad.str();
                   long jsz = static_cast<long>(fam.j_set.size());
                   return {v_lin.at_least(jsz) && v_quad.at_least(2), w};
               });

    add_manifest_check(runner, "chow", n, ids);
    return runner.run("chow", ctx);
}

}  // namespace ogring
