#include "octica/report.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("report groups and criteria")
{
    CHECK(check_groups().size() == 9);
    CHECK(criterion_of("fix") == 1);
    CHECK(criterion_of("props") == 9);
    CHECK_THROWS_AS(criterion_of("nope"), std::invalid_argument);
}

TEST_CASE("filtered run passes and round-trips through json")
{
    Report r = run_checks(testing::data(), {"mod2", "cone"}, 2);
    CHECK(r.pass());
    CHECK(r.checksum == testing::data().checksum());
    for (const auto& c : r.checks) CHECK((c.group == "mod2" || c.group == "cone"));
    Report back = Report::from_json(r.to_json(true));
    REQUIRE(back.checks.size() == r.checks.size());
    for (std::size_t k = 0; k < r.checks.size(); ++k) {
        CHECK(back.checks[k].id == r.checks[k].id);
        CHECK(back.checks[k].pass == r.checks[k].pass);
        CHECK(back.checks[k].computed == r.checks[k].computed);
    }
    CHECK(back.to_json(false) == r.to_json(false));
    CHECK(r.text().find(r.checksum) != std::string::npos);
}

TEST_CASE("thread count does not change the report")
{
    const auto& pd = testing::data();
    Report a = run_checks(pd, {"fix", "ovq"}, 1);
    Report b = run_checks(pd, {"fix", "ovq"}, 4);
    CHECK(a.text() == b.text());
}

TEST_CASE("overall verdict needs every check")
{
    Report r;
    r.checks.push_back(CheckResult{"a", "fix", "t", "1", "1", true, 0});
    CHECK(r.pass());
    r.checks.push_back(CheckResult{"b", "fix", "t", "1", "2", false, 0});
    CHECK_FALSE(r.pass());
    CHECK(r.passed() == 1);
    CHECK(r.text().find("failing checks: b") != std::string::npos);
}
