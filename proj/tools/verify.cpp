// Command-line verification harness: runs the named congruence suites and
// writes JSON certificates.
//
// Exit codes: 0 all checks pass (or are assumed-structural), 1 any failure,
// 2 usage error.

#include "ogring/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

void print_certificate(const ogring::VerificationCertificate& cert) {
    std::cout << "== suite " << cert.suite << " (n=" << cert.n << ") ==\n";
    for (const auto& c : cert.checks) {
        std::cout << "  [" << ogring::to_string(c.status) << "] " << c.name;
        if (c.status == ogring::CheckStatus::fail) std::cout << "  " << c.witness.dump();
        std::cout << "\n";
    }
    std::cout << "  -> " << cert.count(ogring::CheckStatus::pass) << " pass, "
              << cert.count(ogring::CheckStatus::fail) << " fail, "
              << cert.count(ogring::CheckStatus::assumed_structural) << " assumed-structural\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for the orthogonal-grassmannian ring engines"};
    int n = 8;
    std::string suite = "all";
    std::string coeff = "exact";
    std::string json_path;
    int threads = 1;
    std::uint64_t seed = 12345;

    app.add_option("--n", n, "generator count (8 or 16; 32 accepted as a stretch run)")->required();
    app.add_option("--suite", suite, "appendix_pieri|rees|chow|main_theorem|all");
    app.add_option("--coeff", coeff, "exact or mod:<K>");
    app.add_option("--json", json_path, "write certificate(s) to this path");
    app.add_option("--threads", threads, "worker threads per suite");
    app.add_option("--seed", seed, "seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* env = std::getenv("OGRING_THREADS")) threads = std::atoi(env);

    using namespace ogring;
    std::vector<std::string> suites;
    if (suite == "all")
        suites = {"appendix_pieri", "rees", "chow", "main_theorem"};
    else if (suite == "appendix_pieri" || suite == "rees" || suite == "chow" ||
             suite == "main_theorem")
        suites = {suite};
    else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }

    // validation: the theorem suites need n a power of two, n >= 8
    bool needs_pow2 = suite != "appendix_pieri";
    if (needs_pow2 && (!is_pow2(n) || n < 8)) {
        std::cerr << "n must be a power of two, n >= 8, for suite " << suite << "\n";
        return 2;
    }
    if (suite == "appendix_pieri" && (n < 2 || n > 16)) {
        std::cerr << "appendix_pieri expects 2 <= n <= 16\n";
        return 2;
    }
    if (suite == "all" && n > 16) {
        std::cerr << "--suite all expects n in {8, 16}; run theorem suites individually for larger n\n";
        return 2;
    }
    if (n > 16) std::cerr << "note: n=" << n << " is a stretch run (not part of acceptance)\n";

    RingParams params;
    try {
        if (coeff == "exact") {
            params = RingParams::exact_ring(n);
        } else if (coeff.rfind("mod:", 0) == 0) {
            params = RingParams::mod_ring(n, std::stoi(coeff.substr(4)));
        } else {
            std::cerr << "bad --coeff value: " << coeff << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    SuiteContext ctx{params, seed, threads};
    Json out = Json::array();
    bool ok = true;
    try {
        for (const auto& s : suites) {
            VerificationCertificate cert;
            if (s == "appendix_pieri") {
                cert = suite_appendix_pieri(ctx);
            } else if (s == "rees") {
                cert = suite_rees_congruences(ctx);
            } else if (s == "chow") {
                cert = suite_chow_congruences(ctx);
            } else {
                cert = suite_main_theorem(ctx);
            }
            print_certificate(cert);
            out.push_back(cert.to_json());
            ok = ok && cert.all_ok();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        f << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    }
    return ok ? 0 : 1;
}
