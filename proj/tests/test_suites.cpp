#include "ogring/suites.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace ogring;

TEST_CASE("manifest assigns every statement to exactly one suite") {
    std::map<std::string, std::string> where;
    for (const auto& entry : paper_statement_manifest()) {
        auto [it, fresh] = where.emplace(entry.statement, entry.suite);
        CHECK_MESSAGE(fresh, entry.statement);
    }
    std::set<std::string> suites;
    for (const auto& entry : paper_statement_manifest()) suites.insert(entry.suite);
    std::set<std::string> expected{"appendix_pieri", "rees", "chow", "main_theorem"};
    CHECK(suites == expected);
}

TEST_CASE("appendix suite passes at small n") {
    for (int n : {3, 6}) {
        SuiteContext ctx{RingParams::exact_ring(n), 1, 1};
        auto cert = suite_appendix_pieri(ctx);
        CHECK(cert.all_ok());
        CHECK(cert.count(CheckStatus::fail) == 0);
    }
}

TEST_CASE("certificates are deterministic modulo timings") {
    SuiteContext ctx{RingParams::exact_ring(6), 99, 1};
    auto a = suite_appendix_pieri(ctx).to_json(false).dump();
    auto b = suite_appendix_pieri(ctx).to_json(false).dump();
    CHECK(a == b);
}

TEST_CASE("threaded and sequential runs agree") {
    SuiteContext seq{RingParams::exact_ring(5), 7, 1};
    SuiteContext par{RingParams::exact_ring(5), 7, 4};
    CHECK(suite_appendix_pieri(seq).to_json(false).dump() ==
          suite_appendix_pieri(par).to_json(false).dump());
}

TEST_CASE("certificate json schema") {
    SuiteContext ctx{RingParams::exact_ring(3), 1, 1};
    auto doc = suite_appendix_pieri(ctx).to_json();
    CHECK(doc.contains("suite"));
    CHECK(doc.contains("n"));
    CHECK(doc["engine"].contains("coeff_mode"));
    CHECK(doc["engine"].contains("seed"));
    CHECK(doc["checks"].is_array());
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("paper_ref"));
        CHECK(c.contains("status"));
        CHECK(c.contains("witness"));
    }
}
