#pragma once

#include <vector>

namespace ogring {

// Index intervals used throughout the congruence suites; defined for n a
// power of two, n >= 8.
struct IndexFamilies {
    int n = 0;
    int v_n = 0;
    std::vector<int> i0;       // [n/2+1, n-1]
    std::vector<int> i1;       // [n/2+1, 5n/8], empty for n = 8
    std::vector<int> i2;       // [5n/8+1, 3n/4-2]
    std::vector<int> i3;       // [3n/4-1, n-1]
    std::vector<int> i3bar;    // i3 + {n}
    std::vector<int> i3prime;  // [6,7], n = 8 only
    std::vector<int> i4;       // [6, n/4+1] minus {2^i : 3 <= i <= v(n)-2}
    std::vector<int> j_set;    // [2,3] + i3' (+ i4) for n=8, [2,3] + i3 + i4 otherwise
    std::vector<int> j_prime;  // j_set with 3 replaced by 4

    static IndexFamilies make(int n);

    int j_size_expected() const { return n / 2 - v_n + 3; }
    int j_sum() const;
};

std::vector<int> interval(int lo, int hi);  // empty when hi < lo

}  // namespace ogring
