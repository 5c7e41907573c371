#include "ogring/rees_ring.hpp"

#include <json.hpp>

#include <algorithm>

namespace ogring {

ReesRing::ReesRing(RingParams params, std::shared_ptr<PieriCache> cache)
    : params_(params), pieri_(std::move(cache)) {
    if (!pieri_)
        pieri_ = std::make_shared<PieriCache>(params_.n);
    else if (pieri_->n() != params_.n)
        throw invalid_input("pieri cache bound does not match ring");
}

void ReesRing::check_tag(const ReesElem& a) const {
    if (a.ring_tag != params_.tag()) throw invalid_input("element belongs to a different ring");
}

ReesElem ReesRing::zero() const { return ReesElem{{}, params_.tag()}; }

ReesElem ReesRing::unit() const { return basis(Mask{0}, 0); }

ReesElem ReesRing::basis(Mask lambda, int grade) const {
    StrictPartition p = StrictPartition::from_mask(lambda);
    if (!p.in_range(params_.n)) throw invalid_input("partition exceeds ring bound");
    if (grade > 0 && mask_degree(lambda) < grade)
        throw invalid_input("grade exceeds partition size");
    ReesElem e = zero();
    Int one = 1;
    params_.reduce(one);
    if (one != 0) e.terms.emplace(pack_key(lambda, grade), one);
    return e;
}

ReesElem ReesRing::basis(const StrictPartition& lambda, int grade) const {
    if (!lambda.in_range(params_.n)) return zero();  // zero Schubert class
    return basis(lambda.to_mask(), grade);
}

ReesElem ReesRing::f(int i) const {
    if (i <= 0) throw invalid_input("generator index must be positive");
    if (i > params_.n) return zero();
    return basis(bit_of(i), i);
}

void ReesRing::add_term(ReesElem& acc, std::uint64_t key, Int c) const {
    params_.reduce(c);
    if (c == 0) return;
    auto [it, fresh] = acc.terms.emplace(key, c);
    if (!fresh) {
        it->second += c;
        params_.reduce(it->second);
        if (it->second == 0) acc.terms.erase(it);
    }
}

ReesElem ReesRing::pieri_mul(int i, const ReesElem& x) const {
    check_tag(x);
    if (i <= 0) throw invalid_input("pieri index must be positive");
    ReesElem result = zero();
    if (i > params_.n) return result;  // f(i) = 0
    for (const auto& [key, coef] : x.terms) {
        auto rk = unpack_key(key);
        const auto& exp = pieri_->expansion(rk.lambda, i);
        for (const auto& [nu, c] : exp.terms) add_term(result, pack_key(nu, rk.grade + i), coef * c);
    }
    return result;
}

ReesElem ReesRing::mul_t(const ReesElem& x) const {
    check_tag(x);
    ReesElem result = zero();
    for (const auto& [key, coef] : x.terms) {
        auto rk = unpack_key(key);
        result.terms.emplace(pack_key(rk.lambda, rk.grade - 1), coef);
    }
    result.ring_tag = params_.tag();
    return result;
}

ReesElem ReesRing::mul_t_pow(const ReesElem& x, int k) const {
    if (k < 0) throw invalid_input("negative t power");
    ReesElem r = x;
    check_tag(r);
    for (int s = 0; s < k; ++s) r = mul_t(r);
    return r;
}

ReesElem ReesRing::mul_g(int i, const ReesElem& x) const {
    if (i <= 0) throw invalid_input("g index must be positive");
    ReesElem two_f = scale(pieri_mul(i, x), Int(2));
    ReesElem tf = mul_t(pieri_mul(i + 1, x));
    return sub(two_f, tf);
}

ReesElem ReesRing::apply_f(const std::vector<int>& multiset, const ReesElem& x) const {
    ReesElem r = x;
    for (int i : multiset) r = pieri_mul(i, r);
    return r;
}

ReesElem ReesRing::apply_g(const std::vector<int>& multiset, const ReesElem& x) const {
    ReesElem r = x;
    for (int i : multiset) r = mul_g(i, r);
    return r;
}

ReesElem ReesRing::f_product(const std::vector<int>& multiset) const { return apply_f(multiset, unit()); }

ReesElem ReesRing::g_product(const std::vector<int>& multiset) const { return apply_g(multiset, unit()); }

ReesElem ReesRing::add(const ReesElem& a, const ReesElem& b) const {
    check_tag(a);
    check_tag(b);
    ReesElem r = a;
    for (const auto& [key, coef] : b.terms) add_term(r, key, coef);
    return r;
}

ReesElem ReesRing::sub(const ReesElem& a, const ReesElem& b) const {
    check_tag(a);
    check_tag(b);
    ReesElem r = a;
    for (const auto& [key, coef] : b.terms) add_term(r, key, -coef);
    return r;
}

ReesElem ReesRing::negate(const ReesElem& a) const { return scale(a, Int(-1)); }

ReesElem ReesRing::scale(const ReesElem& a, const Int& c) const {
    check_tag(a);
    ReesElem r = zero();
    if (c == 0) return r;
    for (const auto& [key, coef] : a.terms) add_term(r, key, coef * c);
    return r;
}

ReesElem ReesRing::graded_component(const ReesElem& x, int grade) const {
    check_tag(x);
    ReesElem r = zero();
    for (const auto& [key, coef] : x.terms)
        if (unpack_key(key).grade == grade) r.terms.emplace(key, coef);
    return r;
}

bool ReesRing::homogeneous(const ReesElem& x, int* grade) const {
    check_tag(x);
    bool first = true;
    int g = 0;
    for (const auto& [key, coef] : x.terms) {
        int kg = unpack_key(key).grade;
        if (first) {
            g = kg;
            first = false;
        } else if (kg != g) {
            return false;
        }
    }
    if (!first && grade) *grade = g;
    return true;
}

Valuation ReesRing::ideal_valuation(const ReesElem& x) const {
    check_tag(x);
    if (x.terms.empty())
        return params_.exact() ? Valuation::inf() : Valuation::lower_bound(params_.mod_bits);
    Valuation v = Valuation::inf();
    for (const auto& [key, coef] : x.terms) {
        Valuation tv = params_.coeff_val(coef);
        tv.value += key_gap(key);
        v = min_val(v, tv);
    }
    return v;
}

bool ReesRing::congruent_mod_ideal(const ReesElem& a, const ReesElem& b, long power) const {
    if (!params_.exact() && power > params_.mod_bits)
        throw invalid_input("modulus too small for requested congruence");
    return ideal_valuation(sub(a, b)).at_least(power);
}

std::vector<ReesElem> ReesRing::canonical_ideal_decomposition(const ReesElem& x, long power,
                                                              int q_max) const {
    check_tag(x);
    if (q_max < 0) throw invalid_input("negative bucket depth");
    int grade = 0;
    if (!homogeneous(x, &grade)) throw invalid_input("decomposition needs a homogeneous element");
    if (!ideal_valuation(x).at_least(power)) throw invalid_input("valuation below requested ideal power");
    std::vector<ReesElem> buckets(q_max + 1, zero());
    for (const auto& [key, coef] : x.terms) {
        auto rk = unpack_key(key);
        int q = std::min(key_gap(key), q_max);
        long shift = std::max(power - q, 0L);
        Int scaled = coef;
        if (shift > 0) {
            if (scaled % pow2(shift) != 0)
                throw invalid_input("bucket coefficient not divisible by the required 2-power");
            scaled /= pow2(shift);
        }
        buckets[q].terms.emplace(pack_key(rk.lambda, rk.grade + q), scaled);
    }
    return buckets;
}

ReesElem ReesRing::recompose(const std::vector<ReesElem>& buckets, long power) const {
    ReesElem r = zero();
    for (int q = 0; q < static_cast<int>(buckets.size()); ++q) {
        ReesElem part = scale(buckets[q], pow2(std::max(power - q, 0L)));
        r = add(r, mul_t_pow(part, q));
    }
    return r;
}

ReesElem ReesRing::point_product() const {
    std::vector<int> all(params_.n);
    for (int i = 1; i <= params_.n; ++i) all[i - 1] = i;
    return f_product(all);
}

ReesElem ReesRing::line_product() const {
    std::vector<int> idx;
    for (int i = 2; i <= params_.n; ++i) idx.push_back(i);
    return f_product(idx);
}

ReesElem ReesRing::regrade(const ReesElem& x, int grade) const {
    check_tag(x);
    int g = 0;
    if (!homogeneous(x, &g)) throw invalid_input("regrade needs a homogeneous element");
    if (x.is_zero()) return x;
    if (grade > g) throw invalid_input("cannot raise the grade (u is not in the ring)");
    return mul_t_pow(x, g - grade);
}

PointLineCoords ReesRing::express_in_point_line_basis(const ReesElem& x, int grade) const {
    check_tag(x);
    int g = 0;
    if (!homogeneous(x, &g) || (!x.is_zero() && g != grade))
        throw invalid_input("element is not homogeneous of the requested grade");
    const Mask full = bit_of(params_.n + 1) - 1;
    const Mask line_mask = full & ~bit_of(1);
    for (const auto& [key, coef] : x.terms) {
        Mask lam = unpack_key(key).lambda;
        if (lam != full && lam != line_mask)
            throw inconsistency_error("support outside the point/line span");
    }
    ReesElem line = regrade(line_product(), grade);
    ReesElem point = regrade(point_product(), grade);
    Int cl = 0, dl = 0, cp = 0;
    for (const auto& [key, coef] : line.terms) {
        Mask lam = unpack_key(key).lambda;
        if (lam == line_mask) cl = coef;
        if (lam == full) dl = coef;
    }
    for (const auto& [key, coef] : point.terms) {
        if (unpack_key(key).lambda == full) cp = coef;
    }
    if (cl == 0 || cp == 0) throw inconsistency_error("degenerate point/line basis");
    Int xl = 0, xp = 0;
    for (const auto& [key, coef] : x.terms) {
        Mask lam = unpack_key(key).lambda;
        if (lam == line_mask) xl = coef;
        if (lam == full) xp = coef;
    }
    if (xl % cl != 0) throw inconsistency_error("line coordinate is not integral");
    Int a = xl / cl;
    Int num = xp - a * dl;
    if (num % cp != 0) throw inconsistency_error("point coordinate is not integral");
    Int b = num / cp;
    // remainder must vanish
    ReesElem rem = sub(x, add(scale(line, a), scale(point, b)));
    if (!rem.is_zero()) throw inconsistency_error("nonzero remainder in point/line expression");
    return PointLineCoords{a, b};
}

std::vector<std::pair<std::uint64_t, Int>> ReesRing::sorted_terms(const ReesElem& a) const {
    std::vector<std::pair<std::uint64_t, Int>> t(a.terms.begin(), a.terms.end());
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
        auto kx = unpack_key(x.first), ky = unpack_key(y.first);
        if (kx.grade != ky.grade) return kx.grade < ky.grade;
        int sx = mask_degree(kx.lambda), sy = mask_degree(ky.lambda);
        if (sx != sy) return sx < sy;
        return kx.lambda < ky.lambda;
    });
    return t;
}

std::string ReesRing::text(const ReesElem& a) const {
    auto t = sorted_terms(a);
    if (t.empty()) return "0";
    std::string out;
    for (const auto& [key, coef] : t) {
        auto rk = unpack_key(key);
        if (!out.empty()) out += " + ";
        out += coef.str();
        out += "*E[";
        bool first = true;
        for (int i : mask_indices_desc(rk.lambda)) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        out += "]u^" + std::to_string(rk.grade);
    }
    return out;
}

std::string ReesRing::json(const ReesElem& a) const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [key, coef] : sorted_terms(a)) {
        auto rk = unpack_key(key);
        nlohmann::ordered_json term;
        term["lambda"] = mask_indices_desc(rk.lambda);
        term["grade"] = rk.grade;
        term["coef"] = coef.str();
        arr.push_back(term);
    }
    return arr.dump();
}

ChowElem psi_apply(const ReesElem& x, const ReesRing& rees, const ChowRing& chow) {
    if (!(rees.params() == chow.params())) throw invalid_input("ring parameter mismatch");
    ChowElem out = chow.zero();
    for (const auto& [key, coef] : x.terms) {
        auto rk = unpack_key(key);
        if (mask_degree(rk.lambda) != rk.grade) continue;  // t-multiple, killed by xi
        out = chow.add(out, chow.scale(chow.mono(rk.lambda), coef));
    }
    return out;
}

}  // namespace ogring
