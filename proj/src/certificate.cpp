#include "ogring/certificate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace ogring {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::assumed_structural: return "assumed-structural";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool VerificationCertificate::all_ok() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

int VerificationCertificate::count(CheckStatus s) const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

Json VerificationCertificate::to_json(bool include_timings) const {
    Json doc;
    doc["suite"] = suite;
    doc["n"] = n;
    doc["engine"] = engine;
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json jc;
        jc["name"] = c.name;
        jc["paper_ref"] = c.paper_ref;
        jc["status"] = to_string(c.status);
        jc["witness"] = c.witness;
        if (include_timings) jc["elapsed_ms"] = c.elapsed_ms;
        arr.push_back(jc);
    }
    doc["checks"] = arr;
    return doc;
}

Json SuiteContext::engine_json() const {
    Json e;
    e["coeff_mode"] =
        params.exact() ? std::string("exact") : ("mod:" + std::to_string(params.mod_bits));
    e["version"] = "0.1.0";
    e["seed"] = seed;
    e["threads"] = threads;
    return e;
}

void CheckRunner::add(std::string name, std::string paper_ref, CheckFn fn) {
    pending_.push_back(Pending{std::move(name), std::move(paper_ref), std::move(fn), {}});
}

void CheckRunner::add_structural(std::string name, std::string paper_ref, Json note) {
    pending_.push_back(Pending{std::move(name), std::move(paper_ref), nullptr, std::move(note)});
}

VerificationCertificate CheckRunner::run(const std::string& suite, const SuiteContext& ctx) {
    VerificationCertificate cert;
    cert.suite = suite;
    cert.n = ctx.params.n;
    cert.engine = ctx.engine_json();
    cert.checks.resize(pending_.size());

    auto run_one = [&](size_t k) {
        const Pending& p = pending_[k];
        CheckResult r;
        r.name = p.name;
        r.paper_ref = p.paper_ref;
        auto start = std::chrono::steady_clock::now();
        if (!p.fn) {
            r.status = CheckStatus::assumed_structural;
            r.witness = p.note;
        } else {
            try {
                auto [ok, witness] = p.fn();
                r.status = ok ? CheckStatus::pass : CheckStatus::fail;
                r.witness = std::move(witness);
            } catch (const std::exception& ex) {
                r.status = CheckStatus::fail;
                r.witness = Json{{"error", ex.what()}};
            }
        }
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        cert.checks[k] = std::move(r);
    };

    int workers = std::max(1, ctx.threads);
    if (workers == 1) {
        for (size_t k = 0; k < pending_.size(); ++k) run_one(k);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t k = next.fetch_add(1); k < pending_.size(); k = next.fetch_add(1)) run_one(k);
            });
        for (auto& th : pool) th.join();
    }

    std::sort(cert.checks.begin(), cert.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    pending_.clear();
    return cert;
}

}  // namespace ogring
