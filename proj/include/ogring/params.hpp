#pragma once

#include "ogring/core.hpp"

namespace ogring {

enum class CoeffMode { exact, mod_pow2 };

// Shared ring parameters for the Chow and Rees engines.
//
// Coefficients are exact integers by default.  In modulus mode every
// coefficient is kept as its canonical residue in [0, 2^K); all congruence
// checks modulo 2^N (or I^N) stay sound as long as N <= K, and valuations
// become capped lower bounds.
struct RingParams {
    int n = 0;
    int dim_x = 0;       // n(n+1)/2
    int v_n = 0;         // v2(n)
    bool pow2_n = false;
    int m = 0;           // n - 2*v2(n) + 2, the exponent of the torsion index
    CoeffMode mode = CoeffMode::exact;
    int mod_bits = 0;    // K in modulus mode

    static RingParams exact_ring(int n);
    static RingParams mod_ring(int n, int bits);

    bool exact() const { return mode == CoeffMode::exact; }

    Int ind_x() const;  // 2^m; requires pow2_n

    // Canonical residue in modulus mode; identity otherwise.
    void reduce(Int& c) const;

    // 2-adic valuation of a single stored coefficient, with modulus capping.
    Valuation coeff_val(const Int& c) const;

    // Cheap fingerprint stamped into elements to detect engine mixups.
    std::uint32_t tag() const;

    bool operator==(const RingParams& o) const {
        return n == o.n && mode == o.mode && mod_bits == o.mod_bits;
    }
};

}  // namespace ogring
