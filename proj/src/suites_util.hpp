#pragma once

#include "ogring/certificate.hpp"
#include "ogring/chow_ring.hpp"
#include "ogring/families.hpp"
#include "ogring/rees_ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace ogring::detail {

inline Json val_json(const Valuation& v) { return Json(v.str()); }

// Records the valuation of lhs - rhs and compares it with the bound.
inline std::pair<bool, Json> congruence_check(const ReesRing& ring, const ReesElem& lhs,
                                              const ReesElem& rhs, long power) {
    Valuation v = ring.ideal_valuation(ring.sub(lhs, rhs));
    Json w;
    w["difference_valuation"] = v.str();
    w["required"] = power;
    return {v.at_least(power), w};
}

inline std::pair<bool, Json> valuation_check(const ReesRing& ring, const ReesElem& x, long bound) {
    Valuation v = ring.ideal_valuation(x);
    Json w;
    w["valuation"] = v.str();
    w["required"] = bound;
    return {v.at_least(bound), w};
}

inline std::pair<bool, Json> congruence_check(const ChowRing& ring, const ChowElem& lhs,
                                              const ChowElem& rhs, long bits) {
    Valuation v = ring.two_adic_valuation(ring.sub(lhs, rhs));
    Json w;
    w["difference_valuation"] = v.str();
    w["required_bits"] = bits;
    return {v.at_least(bits), w};
}

inline std::pair<bool, Json> valuation_check(const ChowRing& ring, const ChowElem& x, long bound) {
    Valuation v = ring.two_adic_valuation(x);
    Json w;
    w["valuation"] = v.str();
    w["required"] = bound;
    return {v.at_least(bound), w};
}

// Signed coefficient map on strict partitions, used for closed forms.
using CoeffMap = std::map<std::vector<int>, long long>;

inline void closed_form_add(CoeffMap& m, std::vector<int> parts, long long c, int n) {
    for (int part : parts)
        if (part > n) return;  // zero Schubert class
    if (c == 0) return;
    m[std::move(parts)] += c;
}

// e_i^2 modulo classes of size >= 2i+2, for 1 < i < n.
CoeffMap squares_closed_form(int i, int n);

// e_i e_m modulo classes of size >= i+m+2, for 1 < i < m.
CoeffMap products_closed_form(int i, int m, int n);

// Multisets satisfying the duplicated-tail condition: {k,k} + [k+1,n] + M.
std::vector<std::vector<int>> star_multisets_exhaustive(int n, int extra_budget);
std::vector<std::vector<int>> star_multisets_sampled(int n, int count, std::uint64_t seed);

}  // namespace ogring::detail
