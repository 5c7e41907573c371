#include "ogring/families.hpp"

#include "ogring/core.hpp"

#include <algorithm>

namespace ogring {

std::vector<int> interval(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

IndexFamilies IndexFamilies::make(int n) {
    if (!is_pow2(n) || n < 8) throw invalid_input("index families need n a power of two, n >= 8");
    IndexFamilies f;
    f.n = n;
    for (int t = n; (t & 1) == 0; t >>= 1) ++f.v_n;
    f.i0 = interval(n / 2 + 1, n - 1);
    f.i1 = (n == 8) ? std::vector<int>{} : interval(n / 2 + 1, 5 * n / 8);
    f.i2 = interval(5 * n / 8 + 1, 3 * n / 4 - 2);
    f.i3 = interval(3 * n / 4 - 1, n - 1);
    f.i3bar = f.i3;
    f.i3bar.push_back(n);
    if (n == 8) f.i3prime = interval(6, 7);
    f.i4 = interval(6, n / 4 + 1);
    for (int i = 3; i <= f.v_n - 2; ++i)
        f.i4.erase(std::remove(f.i4.begin(), f.i4.end(), 1 << i), f.i4.end());
    f.j_set = {2, 3};
    const auto& tail = (n == 8) ? f.i3prime : f.i3;
    f.j_set.insert(f.j_set.end(), tail.begin(), tail.end());
    f.j_set.insert(f.j_set.end(), f.i4.begin(), f.i4.end());
    std::sort(f.j_set.begin(), f.j_set.end());
    f.j_prime = f.j_set;
    std::replace(f.j_prime.begin(), f.j_prime.end(), 3, 4);
    std::sort(f.j_prime.begin(), f.j_prime.end());
    return f;
}

int IndexFamilies::j_sum() const {
    int s = 0;
    for (int j : j_set) s += j;
    return s;
}

}  // namespace ogring
