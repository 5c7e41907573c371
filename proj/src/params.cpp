#include "ogring/params.hpp"

namespace ogring {

static RingParams base(int n) {
    if (n < 1 || n > kMaxIndex) throw invalid_input("generator count n out of range");
    RingParams p;
    p.n = n;
    p.dim_x = n * (n + 1) / 2;
    p.pow2_n = is_pow2(n);
    p.v_n = 0;
    for (int t = n; (t & 1) == 0; t >>= 1) ++p.v_n;
    p.m = n - 2 * p.v_n + 2;
    return p;
}

RingParams RingParams::exact_ring(int n) {
    RingParams p = base(n);
    p.mode = CoeffMode::exact;
    return p;
}

RingParams RingParams::mod_ring(int n, int bits) {
    if (bits < 1 || bits > 1 << 20) throw invalid_input("modulus bits out of range");
    RingParams p = base(n);
    p.mode = CoeffMode::mod_pow2;
    p.mod_bits = bits;
    return p;
}

Int RingParams::ind_x() const {
    if (!pow2_n) throw invalid_input("torsion index formula needs n a power of two");
    return pow2(m);
}

void RingParams::reduce(Int& c) const {
    if (mode != CoeffMode::mod_pow2) return;
    Int mod = pow2(mod_bits);
    c %= mod;
    if (c < 0) c += mod;
}

Valuation RingParams::coeff_val(const Int& c) const {
    if (mode == CoeffMode::mod_pow2) {
        if (c == 0) return Valuation::lower_bound(mod_bits);
        return Valuation::exact(v2(c));
    }
    if (c == 0) return Valuation::inf();
    return Valuation::exact(v2(c));
}

std::uint32_t RingParams::tag() const {
    return static_cast<std::uint32_t>(n) | (static_cast<std::uint32_t>(mode) << 8) |
           (static_cast<std::uint32_t>(mod_bits) << 12);
}

}  // namespace ogring
