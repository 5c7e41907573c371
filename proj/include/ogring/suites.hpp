#pragma once

#include "ogring/certificate.hpp"

#include <string>
#include <vector>

namespace ogring {

// Verification suites.  Each check binds a named computation to the
// statement it reproduces and records its witnesses (valuations,
// coefficients, coordinates) in the certificate.

// Pieri closed forms and the derived product formulas; any 2 <= n <= 16.
VerificationCertificate suite_appendix_pieri(const SuiteContext& ctx);

// Congruences in the extended Rees ring; n in {8, 16} (32 accepted as a
// stretch run, preferably with modulus coefficients).
VerificationCertificate suite_rees_congruences(const SuiteContext& ctx);

// Congruences in the Chow ring, including the restriction-side statements.
VerificationCertificate suite_chow_congruences(const SuiteContext& ctx);

// The main-theorem computation: the element y, its ideal decomposition, the
// point/line coordinates, and the degree-over-index functional.
VerificationCertificate suite_main_theorem(const SuiteContext& ctx);

// Statement-to-suite assignment; every in-scope statement appears exactly
// once.  `n_selector` is "any", "8" or "16+".
struct ManifestEntry {
    std::string statement;
    std::string suite;
    std::string n_selector;
};

const std::vector<ManifestEntry>& paper_statement_manifest();

bool manifest_applies(const ManifestEntry& entry, int n);

// Coverage check appended to every suite: each manifest statement assigned
// to `suite` and applicable to n must appear among the emitted paper_refs.
void add_manifest_check(CheckRunner& runner, const std::string& suite, int n,
                        const std::vector<std::string>& statement_ids);

}  // namespace ogring
