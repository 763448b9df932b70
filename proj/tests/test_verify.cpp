#include <formwidth/error.hpp>
#include <formwidth/verify.hpp>

#include <doctest.h>

#include <set>

using namespace formwidth;

TEST_SUITE("verify")
{
    TEST_CASE("ids are unique and carry a locus")
    {
        std::set<std::string> ids;
        for (auto & info : verify_checks()) {
            CHECK(ids.insert(info.id).second);
            CHECK_FALSE(info.locus.empty());
        }
        CHECK(ids.size() == 15);
    }

    TEST_CASE("single check with grid overrides")
    {
        VerifyOptions options;
        options.check = "fw-pair";
        options.parameters = {{"k", 3}, {"t", 3}};
        auto report = run_verify(options);
        REQUIRE(report.checks.size() == 1);
        CHECK(report.checks[0].expected == "5");
        CHECK(report.checks[0].computed == "5");
        CHECK(report.checks[0].parameters == "k=3 t=3");
        CHECK(report.overall());
    }

    TEST_CASE("unknown id")
    {
        VerifyOptions options;
        options.check = "no-such-check";
        CHECK_THROWS_AS((void) run_verify(options), InvalidArgument);
    }

    TEST_CASE("errors inside a check become failures")
    {
        VerifyOptions options;
        options.check = "es-lemma";
        options.parameters = {{"r", 3}, {"s", 3}};
        options.limits.enumeration_cap = 1000;
        auto report = run_verify(options);
        REQUIRE(report.checks.size() == 1);
        CHECK_FALSE(report.checks[0].pass);
        CHECK_FALSE(report.overall());
    }
}
