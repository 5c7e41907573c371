#pragma once

#include "ogring/core.hpp"
#include "ogring/params.hpp"

#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ogring {

// Element of CH(X-bar): integer combination of square-free monomials e(I),
// I a subset of [1,n].  Immutable value; never stores zero coefficients.
struct ChowElem {
    std::unordered_map<Mask, Int> terms;
    std::uint32_t ring_tag = 0;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const ChowElem& o) const { return terms == o.terms; }
};

// Site-selection strategy for the square-rewrite;  `largest` is the
// production default, the others exist to exercise confluence.
enum class RewriteOrder { largest, smallest, seeded };

// One term of a raw (not yet normalized) combination: an index multiset
// with an integer coefficient.  Indices > n are legal and denote zero.
using RawCombination = std::vector<std::pair<std::vector<int>, Int>>;

class ChowRing {
public:
    explicit ChowRing(RingParams params);

    const RingParams& params() const { return params_; }
    int n() const { return params_.n; }

    ChowElem zero() const;
    ChowElem unit() const;
    ChowElem gen(int i) const;                       // e(i); zero for i > n
    ChowElem mono(Mask square_free) const;           // e(I), coefficient 1
    ChowElem mono(const std::vector<int>& idx) const;
    ChowElem point_class() const;                    // p = e([1,n])

    ChowElem normalize(const RawCombination& raw, RewriteOrder order = RewriteOrder::largest,
                       std::uint64_t seed = 0, bool check_termination = false) const;
    ChowElem normalize(const std::vector<int>& multiset, RewriteOrder order = RewriteOrder::largest,
                       std::uint64_t seed = 0, bool check_termination = false) const;

    ChowElem add(const ChowElem& a, const ChowElem& b) const;
    ChowElem sub(const ChowElem& a, const ChowElem& b) const;
    ChowElem negate(const ChowElem& a) const;
    ChowElem scale(const ChowElem& a, const Int& c) const;
    ChowElem mul(const ChowElem& a, const ChowElem& b) const;
    ChowElem mul_gen(int j, const ChowElem& a) const;  // e(j) * a, memoized
    ChowElem pow(const ChowElem& a, long k) const;

    Int coefficient(const ChowElem& a, Mask mono) const;
    Int coefficient(const ChowElem& a, const std::vector<int>& idx) const;
    Int degree_top(const ChowElem& a) const;  // coefficient of e([1,n])

    Valuation two_adic_valuation(const ChowElem& a) const;
    // v2(a - b) >= bits; in modulus mode requires bits <= K.
    bool congruent_mod_pow2(const ChowElem& a, const ChowElem& b, long bits) const;

    // Canonical text: terms sorted by (degree, descending-lex monomial),
    // each printed `coef*e[i1,i2,...]`.
    std::string text(const ChowElem& a) const;
    // JSON array form [{"mono":[...],"coef":"<decimal>"}], same order.
    std::string json(const ChowElem& a) const;
    ChowElem from_json(const std::string& doc) const;

    // Terms in canonical order (degree, then mask as integer).
    std::vector<std::pair<Mask, Int>> sorted_terms(const ChowElem& a) const;

private:
    RingParams params_;
    mutable std::vector<std::unordered_map<Mask, ChowElem>> memo_;  // per generator index
    mutable std::shared_mutex memo_mx_;

    void check_tag(const ChowElem& a) const;
    void add_term(ChowElem& acc, Mask mono, Int c) const;
    void add_scaled(ChowElem& acc, const ChowElem& e, const Int& c) const;
    // e(j) * e(I) for square-free I containing j; cached.
    ChowElem insert_colliding(int j, Mask mono) const;
    ChowElem insert_gen(int j, Mask mono) const;  // e(j) * e(I), any square-free I
};

}  // namespace ogring
