#pragma once

#include "ogring/chow_ring.hpp"
#include "ogring/core.hpp"
#include "ogring/kog_tableaux.hpp"
#include "ogring/params.hpp"

#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ogring {

// Key of a Rees-ring term: Schubert class label lambda (mask) at grade l,
// i.e. the basis element e_lambda * u^l with |lambda| >= max(l, 0).
// The gap |lambda| - l is the available t-depth of the term.
struct ReesKey {
    Mask lambda;
    int grade;
};

inline std::uint64_t pack_key(Mask lambda, int grade) {
    return lambda | (static_cast<std::uint64_t>(grade + 4096) << kMaxIndex);
}
inline ReesKey unpack_key(std::uint64_t k) {
    return ReesKey{k & ((std::uint64_t(1) << kMaxIndex) - 1),
                   static_cast<int>(k >> kMaxIndex) - 4096};
}
inline int key_gap(std::uint64_t k) {
    auto rk = unpack_key(k);
    return mask_degree(rk.lambda) - rk.grade;
}

// Element of the extended Rees ring of the topological filtration.
struct ReesElem {
    std::unordered_map<std::uint64_t, Int> terms;
    std::uint32_t ring_tag = 0;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const ReesElem& o) const { return terms == o.terms; }
};

struct PointLineCoords {
    Int line;   // coordinate along the line class
    Int point;  // coordinate along the point class
};

class ReesRing {
public:
    explicit ReesRing(RingParams params, std::shared_ptr<PieriCache> cache = nullptr);

    const RingParams& params() const { return params_; }
    int n() const { return params_.n; }
    std::shared_ptr<PieriCache> cache() const { return pieri_; }

    ReesElem zero() const;
    ReesElem unit() const;
    ReesElem basis(Mask lambda, int grade) const;  // e_lambda u^grade, validated
    ReesElem basis(const StrictPartition& lambda, int grade) const;
    ReesElem f(int i) const;                       // f(i) = e_i u^i; zero for i > n

    // Multiplication by f(i) via the Pieri rule; i = n+1 (and beyond) gives 0.
    ReesElem pieri_mul(int i, const ReesElem& x) const;
    ReesElem mul_t(const ReesElem& x) const;
    ReesElem mul_t_pow(const ReesElem& x, int k) const;
    // g(i) = 2 f(i) - t f(i+1) acting by multiplication.
    ReesElem mul_g(int i, const ReesElem& x) const;

    ReesElem apply_f(const std::vector<int>& multiset, const ReesElem& x) const;
    ReesElem apply_g(const std::vector<int>& multiset, const ReesElem& x) const;
    ReesElem f_product(const std::vector<int>& multiset) const;  // f(J) on the unit
    ReesElem g_product(const std::vector<int>& multiset) const;  // g(J) on the unit

    ReesElem add(const ReesElem& a, const ReesElem& b) const;
    ReesElem sub(const ReesElem& a, const ReesElem& b) const;
    ReesElem negate(const ReesElem& a) const;
    ReesElem scale(const ReesElem& a, const Int& c) const;

    ReesElem graded_component(const ReesElem& x, int grade) const;
    // True iff all terms share one grade; stores it in *grade when nonzero.
    bool homogeneous(const ReesElem& x, int* grade = nullptr) const;

    // Largest N with x in I^N, where I = (2, t): min over terms of
    // v2(coefficient) + (|lambda| - grade).
    Valuation ideal_valuation(const ReesElem& x) const;
    bool congruent_mod_ideal(const ReesElem& a, const ReesElem& b, long power) const;

    // Write x in I^N (homogeneous of grade l) as
    //   sum_q 2^{max(N-q,0)} t^q y_q,   y_q in grade l+q,
    // assigning each term to bucket min(gap, q_max).  Returns y_0..y_{q_max}.
    std::vector<ReesElem> canonical_ideal_decomposition(const ReesElem& x, long power, int q_max) const;
    // Inverse of the decomposition (for checks).
    ReesElem recompose(const std::vector<ReesElem>& buckets, long power) const;

    ReesElem point_product() const;  // f([1,n]), the point class at top grade
    ReesElem line_product() const;   // f([2,n]), the line class
    ReesElem regrade(const ReesElem& x, int grade) const;  // multiply by a power of t

    // Coordinates of x (grade l, support size >= dim-1) against the line and
    // point products regraded to l.  Throws on a nonzero remainder.
    PointLineCoords express_in_point_line_basis(const ReesElem& x, int grade) const;

    std::string text(const ReesElem& a) const;
    std::string json(const ReesElem& a) const;

    std::vector<std::pair<std::uint64_t, Int>> sorted_terms(const ReesElem& a) const;

private:
    RingParams params_;
    std::shared_ptr<PieriCache> pieri_;

    void check_tag(const ReesElem& a) const;
    void add_term(ReesElem& acc, std::uint64_t key, Int c) const;
};

// Projection to CH(X-bar): keeps grade-matching terms (t-multiples die) and
// maps e_lambda to the square-free monomial e(lambda).
ChowElem psi_apply(const ReesElem& x, const ReesRing& rees, const ChowRing& chow);

}  // namespace ogring
