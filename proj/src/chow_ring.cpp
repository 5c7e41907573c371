#include "ogring/chow_ring.hpp"

#include <json.hpp>

#include <algorithm>
#include <mutex>
#include <random>

namespace ogring {

ChowRing::ChowRing(RingParams params) : params_(params), memo_(params.n + 1) {}

void ChowRing::check_tag(const ChowElem& a) const {
    if (a.ring_tag != params_.tag()) throw invalid_input("element belongs to a different ring");
}

ChowElem ChowRing::zero() const { return ChowElem{{}, params_.tag()}; }

ChowElem ChowRing::unit() const {
    ChowElem e = zero();
    Int one = 1;
    params_.reduce(one);
    if (one != 0) e.terms.emplace(Mask{0}, one);
    return e;
}

ChowElem ChowRing::gen(int i) const {
    if (i <= 0) throw invalid_input("generator index must be positive");
    if (i > params_.n) return zero();
    return mono(bit_of(i));
}

ChowElem ChowRing::mono(Mask square_free) const {
    ChowElem e = zero();
    Int one = 1;
    params_.reduce(one);
    if (one != 0) e.terms.emplace(square_free, one);
    return e;
}

ChowElem ChowRing::mono(const std::vector<int>& idx) const { return mono(indices_to_mask(idx)); }

ChowElem ChowRing::point_class() const { return mono(bit_of(params_.n + 1) - 1); }

void ChowRing::add_term(ChowElem& acc, Mask mono, Int c) const {
    params_.reduce(c);
    if (c == 0) return;
    auto [it, fresh] = acc.terms.emplace(mono, c);
    if (!fresh) {
        it->second += c;
        params_.reduce(it->second);
        if (it->second == 0) acc.terms.erase(it);
    }
}

void ChowRing::add_scaled(ChowElem& acc, const ChowElem& e, const Int& c) const {
    if (c == 0) return;
    for (const auto& [mono, coef] : e.terms) add_term(acc, mono, coef * c);
}

// Core rewrite: e(j)^2 = (-1)^{j+1} e(2j) + 2 sum_{k=1}^{j-1} (-1)^{k+1} e(j-k) e(j+k),
// with e(i) = 0 for i > n.  `mono` contains j; the collision is resolved by
// re-inserting the produced indices, largest first.
ChowElem ChowRing::insert_colliding(int j, Mask mono) const {
    {
        std::shared_lock lk(memo_mx_);
        auto it = memo_[j].find(mono);
        if (it != memo_[j].end()) return it->second;
    }
    const int n = params_.n;
    Mask base = mono & ~bit_of(j);
    ChowElem result = zero();
    if (2 * j <= n) {
        Int c = (j % 2 == 0) ? Int(-1) : Int(1);
        add_scaled(result, insert_gen(2 * j, base), c);
    }
    for (int k = 1; k <= j - 1; ++k) {
        if (j + k > n) break;
        Int c = (k % 2 == 1) ? Int(2) : Int(-2);
        ChowElem hi = insert_gen(j + k, base);
        ChowElem both = zero();
        for (const auto& [mo, coef] : hi.terms) add_scaled(both, insert_gen(j - k, mo), coef);
        add_scaled(result, both, c);
    }
    {
        std::unique_lock lk(memo_mx_);
        memo_[j].emplace(mono, result);
    }
    return result;
}

ChowElem ChowRing::insert_gen(int j, Mask mono) const {
    if (j > params_.n) return zero();
    if (!mask_has(mono, j)) return this->mono(mono | bit_of(j));
    return insert_colliding(j, mono | bit_of(j));
}

ChowElem ChowRing::mul_gen(int j, const ChowElem& a) const {
    check_tag(a);
    if (j <= 0) throw invalid_input("generator index must be positive");
    ChowElem result = zero();
    if (j > params_.n) return result;
    for (const auto& [mono, coef] : a.terms) add_scaled(result, insert_gen(j, mono), coef);
    return result;
}

ChowElem ChowRing::normalize(const RawCombination& raw, RewriteOrder order, std::uint64_t seed,
                             bool check_termination) const {
    std::mt19937_64 rng(seed);
    ChowElem result = zero();
    std::vector<std::pair<std::vector<int>, Int>> work;
    for (const auto& [multiset, coef] : raw) {
        for (int i : multiset)
            if (i <= 0) throw invalid_input("monomial index must be positive");
        work.emplace_back(multiset, coef);
    }
    while (!work.empty()) {
        auto [ms, coef] = std::move(work.back());
        work.pop_back();
        params_.reduce(coef);
        if (coef == 0) continue;
        // drop indices > n (they denote zero factors -> whole term vanishes)
        bool dead = false;
        for (int i : ms)
            if (i > params_.n) dead = true;
        if (dead) continue;
        std::sort(ms.begin(), ms.end());
        // collect repeated indices (rewrite sites)
        std::vector<int> sites;
        for (size_t k = 0; k + 1 < ms.size(); ++k)
            if (ms[k] == ms[k + 1] && (sites.empty() || sites.back() != ms[k])) sites.push_back(ms[k]);
        if (sites.empty()) {
            Mask mono = 0;
            for (int i : ms) mono |= bit_of(i);
            add_term(result, mono, coef);
            continue;
        }
        int j;
        switch (order) {
            case RewriteOrder::largest: j = sites.back(); break;
            case RewriteOrder::smallest: j = sites.front(); break;
            default: j = sites[rng() % sites.size()]; break;
        }
        std::vector<int> rest;
        int removed = 0;
        for (int i : ms) {
            if (i == j && removed < 2) {
                ++removed;
                continue;
            }
            rest.push_back(i);
        }
        auto emit = [&](std::vector<int> produced, Int c) {
            produced.insert(produced.end(), rest.begin(), rest.end());
            if (check_termination) {
                bool alive = true;
                for (int i : produced)
                    if (i > params_.n) alive = false;
                if (alive && !multiset_desc_less(ms, produced))
                    throw inconsistency_error("rewrite step did not increase the monomial order");
            }
            work.emplace_back(std::move(produced), std::move(c));
        };
        emit({2 * j}, coef * ((j % 2 == 0) ? Int(-1) : Int(1)));
        for (int k = 1; k <= j - 1; ++k)
            emit({j - k, j + k}, coef * ((k % 2 == 1) ? Int(2) : Int(-2)));
    }
    return result;
}

ChowElem ChowRing::normalize(const std::vector<int>& multiset, RewriteOrder order, std::uint64_t seed,
                             bool check_termination) const {
    return normalize(RawCombination{{multiset, Int(1)}}, order, seed, check_termination);
}

ChowElem ChowRing::add(const ChowElem& a, const ChowElem& b) const {
    check_tag(a);
    check_tag(b);
    ChowElem r = a;
    for (const auto& [mono, coef] : b.terms) add_term(r, mono, coef);
    return r;
}

ChowElem ChowRing::sub(const ChowElem& a, const ChowElem& b) const {
    check_tag(a);
    check_tag(b);
    ChowElem r = a;
    for (const auto& [mono, coef] : b.terms) add_term(r, mono, -coef);
    return r;
}

ChowElem ChowRing::negate(const ChowElem& a) const { return scale(a, Int(-1)); }

ChowElem ChowRing::scale(const ChowElem& a, const Int& c) const {
    check_tag(a);
    ChowElem r = zero();
    add_scaled(r, a, c);
    return r;
}

ChowElem ChowRing::mul(const ChowElem& a, const ChowElem& b) const {
    check_tag(a);
    check_tag(b);
    const ChowElem& big = (a.terms.size() >= b.terms.size()) ? a : b;
    const ChowElem& small = (a.terms.size() >= b.terms.size()) ? b : a;
    ChowElem result = zero();
    for (const auto& [mono, coef] : small.terms) {
        // fold the indices of `mono` into `big`, largest first
        ChowElem acc = scale(big, coef);
        for (int j : mask_indices_desc(mono)) acc = mul_gen(j, acc);
        for (const auto& [mo, c] : acc.terms) add_term(result, mo, c);
    }
    return result;
}

ChowElem ChowRing::pow(const ChowElem& a, long k) const {
    check_tag(a);
    if (k < 0) throw invalid_input("negative exponent");
    ChowElem r = unit();
    for (long s = 0; s < k; ++s) r = mul(r, a);
    return r;
}

Int ChowRing::coefficient(const ChowElem& a, Mask mono) const {
    auto it = a.terms.find(mono);
    return it == a.terms.end() ? Int(0) : it->second;
}

Int ChowRing::coefficient(const ChowElem& a, const std::vector<int>& idx) const {
    return coefficient(a, indices_to_mask(idx));
}

Int ChowRing::degree_top(const ChowElem& a) const {
    Mask full = bit_of(params_.n + 1) - 1;
    return coefficient(a, full);
}

Valuation ChowRing::two_adic_valuation(const ChowElem& a) const {
    check_tag(a);
    if (a.terms.empty())
        return params_.exact() ? Valuation::inf() : Valuation::lower_bound(params_.mod_bits);
    Valuation v = Valuation::inf();
    for (const auto& [mono, coef] : a.terms) v = min_val(v, params_.coeff_val(coef));
    return v;
}

bool ChowRing::congruent_mod_pow2(const ChowElem& a, const ChowElem& b, long bits) const {
    if (!params_.exact() && bits > params_.mod_bits)
        throw invalid_input("modulus too small for requested congruence");
    return two_adic_valuation(sub(a, b)).at_least(bits);
}

std::vector<std::pair<Mask, Int>> ChowRing::sorted_terms(const ChowElem& a) const {
    std::vector<std::pair<Mask, Int>> t(a.terms.begin(), a.terms.end());
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
        int dx = mask_degree(x.first), dy = mask_degree(y.first);
        if (dx != dy) return dx < dy;
        return x.first < y.first;
    });
    return t;
}

std::string ChowRing::text(const ChowElem& a) const {
    auto t = sorted_terms(a);
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [mono, coef] : t) {
        if (!out.empty()) out += " + ";
        out += coef.str();
        out += "*e[";
        bool first = true;
        for (int i : mask_indices(mono)) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        out += "]";
    }
    return out;
}

std::string ChowRing::json(const ChowElem& a) const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [mono, coef] : sorted_terms(a)) {
        nlohmann::ordered_json term;
        term["mono"] = mask_indices(mono);
        term["coef"] = coef.str();
        arr.push_back(term);
    }
    return arr.dump();
}

ChowElem ChowRing::from_json(const std::string& doc) const {
    auto arr = nlohmann::json::parse(doc);
    RawCombination raw;
    for (const auto& term : arr)
        raw.emplace_back(term.at("mono").get<std::vector<int>>(), Int(term.at("coef").get<std::string>()));
    return normalize(raw);
}

}  // namespace ogring
