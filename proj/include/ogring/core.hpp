#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ogring {

// Exact arbitrary-precision integer used for all ring coefficients.
using Int = boost::multiprecision::cpp_int;

// A square-free monomial e(I) or a strict partition with distinct parts,
// encoded as a bitmask: bit (i-1) set <=> index i present.
using Mask = std::uint64_t;

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

constexpr int kMaxIndex = 48;  // masks hold indices 1..48

inline Mask bit_of(int index) { return Mask{1} << (index - 1); }

inline bool mask_has(Mask m, int index) { return (m & bit_of(index)) != 0; }

// Sum of the indices present in the mask.
inline int mask_degree(Mask m) {
    int d = 0;
    while (m) {
        int b = std::countr_zero(m);
        d += b + 1;
        m &= m - 1;
    }
    return d;
}

inline int mask_count(Mask m) { return std::popcount(m); }

std::vector<int> mask_indices(Mask m);            // ascending
std::vector<int> mask_indices_desc(Mask m);       // descending
Mask indices_to_mask(const std::vector<int>& idx);  // throws on repeats / out of range

// 2-adic valuation of a nonzero integer.
long v2(const Int& x);

Int pow2(long k);

Int binomial(long n, long k);

bool is_pow2(long n);

// Valuation result; `capped` marks a lower bound produced in modulus mode.
struct Valuation {
    long value = 0;
    bool infinite = false;
    bool capped = false;

    static Valuation inf() { return Valuation{0, true, false}; }
    static Valuation exact(long v) { return Valuation{v, false, false}; }
    static Valuation lower_bound(long v) { return Valuation{v, false, true}; }

    bool at_least(long n) const { return infinite || value >= n; }

    // v is known exactly (not a capped bound, not infinite) and equals n.
    bool exactly(long n) const { return !infinite && !capped && value == n; }

    std::string str() const;
};

Valuation min_val(const Valuation& a, const Valuation& b);

// Compare same-degree index multisets by their descending-sorted sequences.
// Rewriting in the quotient ring strictly increases monomials in this order,
// which is the termination witness checked by the normalizer in debug runs.
bool multiset_desc_less(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace ogring
