#include "ogring/core.hpp"

#include <algorithm>
#include <bit>

namespace ogring {

std::vector<int> mask_indices(Mask m) {
    std::vector<int> idx;
    while (m) {
        idx.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return idx;
}

std::vector<int> mask_indices_desc(Mask m) {
    auto idx = mask_indices(m);
    std::reverse(idx.begin(), idx.end());
    return idx;
}

Mask indices_to_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) {
        if (i < 1 || i > kMaxIndex) throw invalid_input("index out of range: " + std::to_string(i));
        if (mask_has(m, i)) throw invalid_input("repeated index in square-free monomial");
        m |= bit_of(i);
    }
    return m;
}

long v2(const Int& x) {
    if (x == 0) throw invalid_input("v2 of zero");
    return static_cast<long>(boost::multiprecision::lsb(abs(x)));
}

Int pow2(long k) {
    if (k < 0) throw invalid_input("negative power of two");
    return Int(1) << k;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

bool is_pow2(long n) { return n > 0 && (n & (n - 1)) == 0; }

std::string Valuation::str() const {
    if (infinite) return "inf";
    auto s = std::to_string(value);
    return capped ? ">=" + s : s;
}

Valuation min_val(const Valuation& a, const Valuation& b) {
    if (a.infinite) return b;
    if (b.infinite) return a;
    if (a.value < b.value) return a;
    if (b.value < a.value) return b;
    return Valuation{a.value, false, a.capped && b.capped};
}

bool multiset_desc_less(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> x = a, y = b;
    std::sort(x.rbegin(), x.rend());
    std::sort(y.rbegin(), y.rend());
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace ogring
