#pragma once

#include "ogring/params.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace ogring {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, assumed_structural, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    std::string paper_ref;
    CheckStatus status = CheckStatus::fail;
    Json witness;
    double elapsed_ms = 0.0;
};

struct VerificationCertificate {
    std::string suite;
    int n = 0;
    Json engine;
    std::vector<CheckResult> checks;

    bool all_ok() const;  // no failed check
    int count(CheckStatus s) const;
    // include_timings=false drops elapsed_ms, yielding byte-stable output.
    Json to_json(bool include_timings = true) const;
};

struct SuiteContext {
    RingParams params;
    std::uint64_t seed = 12345;
    int threads = 1;

    Json engine_json() const;
};

// Collects named checks and runs them (optionally on a small thread pool),
// assembling a certificate with checks sorted by name.
class CheckRunner {
public:
    using CheckFn = std::function<std::pair<bool, Json>()>;

    void add(std::string name, std::string paper_ref, CheckFn fn);
    // Structural assumption: recorded, never executed.
    void add_structural(std::string name, std::string paper_ref, Json note);

    VerificationCertificate run(const std::string& suite, const SuiteContext& ctx);

private:
    struct Pending {
        std::string name;
        std::string paper_ref;
        CheckFn fn;  // null for structural entries
        Json note;
    };
    std::vector<Pending> pending_;
};

}  // namespace ogring
