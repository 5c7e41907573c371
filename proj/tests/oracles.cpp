#include "oracles.hpp"

namespace ogring::testing {

ChowOracle::ChowOracle(int n) : n_(n) {}

std::map<Mask, Int> ChowOracle::insert_elem(int i, const std::map<Mask, Int>& e) {
    std::map<Mask, Int> out;
    for (const auto& [mono, coef] : e)
        for (const auto& [mo, c] : insert(i, mono)) {
            Int& slot = out[mo];
            slot += coef * c;
            if (slot == 0) out.erase(mo);
        }
    return out;
}

std::map<Mask, Int> ChowOracle::insert(int i, Mask mono) {
    if (i > n_) return {};
    if (!mask_has(mono, i)) return {{mono | bit_of(i), Int(1)}};
    auto key = std::make_pair(i, mono);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Mask base = mono & ~bit_of(i);
    std::map<Mask, Int> acc;
    auto add_all = [&](const std::map<Mask, Int>& e, const Int& c) {
        for (const auto& [mo, co] : e) {
            Int& slot = acc[mo];
            slot += co * c;
            if (slot == 0) acc.erase(mo);
        }
    };
    if (2 * i <= n_) add_all(insert_elem(2 * i, {{base, Int(1)}}), (i % 2 == 0) ? Int(-1) : Int(1));
    for (int k = 1; k <= i - 1; ++k) {
        if (i + k > n_) continue;
        // smallest index first
        auto lo = insert_elem(i - k, {{base, Int(1)}});
        auto both = insert_elem(i + k, lo);
        add_all(both, (k % 2 == 1) ? Int(2) : Int(-2));
    }
    memo_.emplace(key, acc);
    return acc;
}

std::map<Mask, Int> ChowOracle::mul(const std::map<Mask, Int>& a, const std::map<Mask, Int>& b) {
    std::map<Mask, Int> out;
    for (const auto& [mb, cb] : b) {
        std::map<Mask, Int> cur;
        for (const auto& [ma, ca] : a) {
            Int& slot = cur[ma];
            slot += ca * cb;
            if (slot == 0) cur.erase(ma);
        }
        for (int i : mask_indices(mb)) cur = insert_elem(i, cur);  // ascending
        for (const auto& [mo, c] : cur) {
            Int& slot = out[mo];
            slot += c;
            if (slot == 0) out.erase(mo);
        }
    }
    return out;
}

std::map<Mask, Int> ChowOracle::from_elem(const ChowElem& e) const {
    return {e.terms.begin(), e.terms.end()};
}

bool ChowOracle::equals(const std::map<Mask, Int>& a, const ChowElem& b) const {
    return a == from_elem(b);
}

long rees_valuation_oracle(const ReesElem& x, long cap) {
    if (x.terms.empty()) return cap;
    auto member = [&](long power) {
        for (const auto& [key, coef] : x.terms) {
            auto rk = unpack_key(key);
            int size = mask_degree(rk.lambda);
            long best = power + 1;  // required exponent of 2
            for (long q = 0; q <= power; ++q) {
                if (size < rk.grade + q) continue;
                best = std::min(best, std::max(power - q, 0L));
            }
            if (best > power) return false;  // no generator box admits this term
            if (best > 0 && v2(coef) < best) return false;
        }
        return true;
    };
    long value = 0;
    for (long p = 1; p <= cap; ++p) {
        if (!member(p)) break;
        value = p;
    }
    return value;
}

std::vector<int> random_multiset(std::mt19937_64& rng, int n, int max_len) {
    int len = 1 + static_cast<int>(rng() % max_len);
    std::vector<int> m;
    for (int k = 0; k < len; ++k) m.push_back(1 + static_cast<int>(rng() % n));
    return m;
}

ChowElem random_chow_elem(const ChowRing& ring, std::mt19937_64& rng, int max_terms) {
    RawCombination raw;
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int k = 0; k < terms; ++k) {
        Int coef = static_cast<long>(rng() % 41) - 20;
        raw.emplace_back(random_multiset(rng, ring.n(), 5), coef);
    }
    return ring.normalize(raw);
}

ReesElem random_rees_elem(const ReesRing& ring, std::mt19937_64& rng, int max_words) {
    ReesElem total = ring.zero();
    int words = 1 + static_cast<int>(rng() % max_words);
    for (int w = 0; w < words; ++w) {
        ReesElem x = ring.unit();
        int ops = static_cast<int>(rng() % 5);
        for (int s = 0; s < ops; ++s) {
            int pick = static_cast<int>(rng() % 3);
            int i = 1 + static_cast<int>(rng() % ring.n());
            if (pick == 0)
                x = ring.pieri_mul(i, x);
            else if (pick == 1)
                x = ring.mul_g(i, x);
            else
                x = ring.mul_t(x);
        }
        Int coef = static_cast<long>(rng() % 17) - 8;
        total = ring.add(total, ring.scale(x, coef));
    }
    return total;
}

ReesElem random_homogeneous_rees(const ReesRing& ring, std::mt19937_64& rng) {
    // random words of one fixed grade: f/g raise by i, t lowers by one
    int target = 2 + static_cast<int>(rng() % 6);
    ReesElem total = ring.zero();
    int words = 1 + static_cast<int>(rng() % 3);
    for (int w = 0; w < words; ++w) {
        ReesElem x = ring.unit();
        int grade = 0;
        while (grade < target) {
            int i = 1 + static_cast<int>(rng() % std::min(ring.n(), target - grade + 1));
            if (i > target - grade) {
                if (rng() % 2) continue;
                i = target - grade;
            }
            if (rng() % 3 == 0) {
                x = ring.mul_g(i, x);
            } else {
                x = ring.pieri_mul(i, x);
            }
            grade += i;
        }
        int extra_t = static_cast<int>(rng() % 2);
        for (int s = 0; s < extra_t; ++s) {
            // keep homogeneity: t then f(1) restores the grade
            x = ring.pieri_mul(1, ring.mul_t(x));
        }
        Int coef = static_cast<long>(rng() % 15) - 7;
        total = ring.add(total, ring.scale(x, coef));
    }
    return total;
}

}  // namespace ogring::testing
