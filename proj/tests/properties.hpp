#pragma once

// Randomized property suites backing the oracle-equivalence acceptance
// criterion.  Scale factor 1 runs >= 500 cases per property.

#include "ogring/certificate.hpp"

namespace ogring::testing {

VerificationCertificate property_suite(std::uint64_t seed, int scale = 1);

}  // namespace ogring::testing
