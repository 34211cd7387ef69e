#include <doctest.h>

#include "u21/error.hpp"
#include "u21/verify.hpp"

using namespace u21;

namespace {

VerifyConfig small() {
    VerifyConfig cfg;
    cfg.grid_max = 2;
    cfg.threads = 2;
    return cfg;
}

}  // namespace

TEST_CASE("suite names round-trip") {
    for (Suite s : {Suite::identities, Suite::ode, Suite::harmonics, Suite::zeta, Suite::theorem1})
        CHECK(parse_suite(suite_name(s)) == s);
    CHECK_THROWS_AS(parse_suite("everything"), Error);
}

TEST_CASE("grids skip invalid and boundary tuples") {
    auto all = case_grid(CaseTag::C1, 3, false);
    auto interior = case_grid(CaseTag::C1, 3, true);
    CHECK(interior.size() < all.size());
    for (const auto& c : interior) CHECK(c.subcase.has_value());
    CHECK(minimal_cells().size() == 12);
    CHECK(midrange_cells().size() == 12);
}

TEST_CASE("every suite passes on a small grid") {
    for (Suite s : {Suite::identities, Suite::ode, Suite::harmonics, Suite::zeta, Suite::theorem1}) {
        VerifyConfig cfg = small();
        // patterns 2 and 8 first have points once a parameter reaches 4
        if (s == Suite::theorem1) cfg.grid_max = 5;
        auto rep = run_suite(s, cfg);
        CAPTURE(rep.suite);
        CHECK(!rep.checks.empty());
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
            CHECK(c.count > 0);
        }
    }
}

TEST_CASE("results do not depend on the thread count") {
    VerifyConfig one = small();
    one.threads = 1;
    VerifyConfig many = small();
    many.threads = 8;
    auto a = run_suite(Suite::ode, one);
    auto b = run_suite(Suite::ode, many);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].worst == b.checks[i].worst);
        CHECK(a.checks[i].count == b.checks[i].count);
    }
}

TEST_CASE("zeta cell check reports a failing cell") {
    CaseParams p;
    p.mu1 = 6;
    p.mu2 = 4;
    p.alpha = 1;
    auto r = check_zeta_cells({make_case(CaseTag::C1, p)}, "C1-II", small());
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("C1") != std::string::npos);
}
