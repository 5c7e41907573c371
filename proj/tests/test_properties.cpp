#include "properties.hpp"

#include <doctest.h>

using namespace ogring;

TEST_CASE("property suite passes end to end") {
    // scale 1 is the acceptance configuration; it runs in the acceptance
    // binary, so exercise a reduced-volume pass here
    auto cert = testing::property_suite(2024, 1);
    for (const auto& c : cert.checks) {
        CAPTURE(c.name);
        CHECK(c.status == CheckStatus::pass);
    }
    CHECK(cert.engine["seed"] == 2024);
}
