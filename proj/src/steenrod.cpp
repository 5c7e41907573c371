#include "ogring/steenrod.hpp"

namespace ogring {

ExprPtr shat(int i, int n) {
    if (i < 1 || i > n) throw invalid_input("index out of range");
    std::vector<ExprPtr> terms;
    for (int j = 0; j <= i - 1 && i + j <= n; ++j) {
        Int b = binomial(i - 1, j);
        terms.push_back(j == 0 ? Ci(i) : prod({lit(b), Ci(i + j)}));
    }
    return sum(std::move(terms));
}

ExprPtr shat_set(const std::vector<int>& indices, int n) {
    std::vector<ExprPtr> factors;
    for (int i : indices) factors.push_back(shat(i, n));
    if (factors.empty()) return lit(1);
    return prod(std::move(factors));
}

int torsion_exponent(int n) {
    if (!is_pow2(n)) throw invalid_input("torsion index formula needs n a power of two");
    int v = 0;
    for (int t = n; (t & 1) == 0; t >>= 1) ++v;
    return n - 2 * v + 2;
}

Int torsion_index(int n) { return pow2(torsion_exponent(n)); }

int deg_over_index(const ChowElem& a, const ChowRing& ring) {
    const auto& p = ring.params();
    if (!p.pow2_n) throw invalid_input("deg/ind needs n a power of two");
    if (!p.exact() && p.mod_bits < p.m + 2)
        throw invalid_input("modulus too small to evaluate deg/ind mod 2");
    Int d = ring.degree_top(a);
    Int ind = pow2(p.m);
    if (d % ind != 0) throw invalid_input("top coefficient not divisible by the torsion index");
    Int q = (d / ind) % 2;
    return static_cast<int>(q);
}

}  // namespace ogring
