#include "suites_util.hpp"

#include <random>

namespace ogring::detail {

CoeffMap squares_closed_form(int i, int n) {
    CoeffMap m;
    closed_form_add(m, {2 * i}, 1, n);
    for (int k = 1; k <= i - 1; ++k) closed_form_add(m, {i + k, i - k}, 2, n);
    closed_form_add(m, {i + 1, i}, -1, n);
    for (int k = 2; k <= i - 1; ++k) closed_form_add(m, {i + k, i - k + 1}, -3, n);
    closed_form_add(m, {2 * i, 1}, -2, n);
    return m;
}

CoeffMap products_closed_form(int i, int m_part, int n) {
    CoeffMap m;
    closed_form_add(m, {m_part + i}, 1, n);
    closed_form_add(m, {m_part, i}, 1, n);
    for (int k = 1; k <= i - 1; ++k) closed_form_add(m, {m_part + k, i - k}, 2, n);
    closed_form_add(m, {m_part + 1, i}, -2, n);
    for (int k = 2; k <= i - 1; ++k) closed_form_add(m, {m_part + k, i - k + 1}, -3, n);
    closed_form_add(m, {m_part + i, 1}, -2, n);
    return m;
}

std::vector<std::vector<int>> star_multisets_exhaustive(int n, int extra_budget) {
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> base;
        base.push_back(k);
        base.push_back(k);
        for (int j = k + 1; j <= n; ++j) base.push_back(j);
        out.push_back(base);
        for (int a = 1; a <= k && extra_budget >= 1; ++a) {
            auto one = base;
            one.push_back(a);
            out.push_back(one);
            for (int b = a; b <= k && extra_budget >= 2; ++b) {
                auto two = base;
                two.push_back(a);
                two.push_back(b);
                out.push_back(two);
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> star_multisets_sampled(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> out;
    std::uniform_int_distribution<int> pick_k(1, n);
    while (static_cast<int>(out.size()) < count) {
        int k = pick_k(rng);
        std::vector<int> j;
        j.push_back(k);
        j.push_back(k);
        for (int t = k + 1; t <= n; ++t) j.push_back(t);
        int extras = static_cast<int>(rng() % 4);
        for (int t = 0; t < extras; ++t) j.push_back(1 + static_cast<int>(rng() % k));
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace ogring::detail
