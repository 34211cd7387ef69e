#include <doctest.h>

#include "u21/error.hpp"
#include "u21/repparams.hpp"

using namespace u21;

namespace {

HalfIntTriple T(const char* s) { return parse_triple(s); }

CaseParams params(CaseTag t, long a, long b, long c) {
    CaseParams p;
    auto names = case_param_names(t);
    set_param(p, names[0], a);
    set_param(p, names[1], b);
    set_param(p, names[2], c);
    return p;
}

}  // namespace

TEST_CASE("chamber classification") {
    CHECK(classify_chamber(T("7/2 3/2 -1/2")) == Chamber::I);
    CHECK(classify_chamber(T("-1/2 -3/2 5/2")) == Chamber::II);
    CHECK(classify_chamber(T("5/2 -3/2 1/2")) == Chamber::III);
}

TEST_CASE("validation errors") {
    auto code = [](const char* s) {
        try {
            validate_hc(T(s));
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::invalid_argument;  // sentinel, never expected
    };
    CHECK(code("1/2 1/2 3/2") == Errc::not_regular);
    CHECK(code("-1/2 1/2 3/2") == Errc::not_compact_dominant);
    CHECK(code("1 2 3") == Errc::invalid_argument);
    CHECK_NOTHROW(validate_hc(T("5/2 -3/2 1/2")));
}

TEST_CASE("rho vectors") {
    CHECK(rho_vectors(Chamber::I).rho_J == T("1 0 -1"));
    CHECK(rho_vectors(Chamber::III).rho_J == T("1 -1 0"));
    CHECK(chamber_delta(Chamber::I) == T("0 1 -1"));
    CHECK(chamber_delta(Chamber::II) == T("-1 0 1"));
    CHECK(chamber_delta(Chamber::III) == T("0 0 0"));
}

TEST_CASE("Blattner parameters") {
    // mu2 = mu1 = 0, alpha = 4 in the C1 subcase I pattern
    auto b = blattner(T("-1/2 -3/2 -5/2"));
    CHECK(b.Lambda == T("-1/2 -1/2 -7/2"));
    // case A pattern in chamber II
    auto b2 = blattner(T("-1/2 -3/2 1/2"));
    CHECK(b2.Lambda == T("-3/2 -3/2 3/2"));
    auto b3 = blattner(T("5/2 -3/2 1/2"));
    CHECK(b3.Lambda == T("5/2 -3/2 1/2"));
    CHECK(b3.r == 4);
    CHECK(b3.s == -2);
    for (const char* s : {"7/2 3/2 -1/2", "-1/2 -3/2 5/2", "5/2 -3/2 1/2"}) {
        auto l = T(s);
        CHECK(blattner_inverse(blattner(l).Lambda, classify_chamber(l)) == l);
    }
}

TEST_CASE("dual parameter and formal degree") {
    CHECK(dual_param(T("7/2 3/2 -1/2")) == T("-3/2 -7/2 1/2"));
    CHECK(dual_param(dual_param(T("5/2 -3/2 1/2"))) == T("5/2 -3/2 1/2"));
    CHECK(formal_degree(T("-1/2 -5/2 -3/2")) == Rational(2));
    CHECK(formal_degree(T("-1/2 -3/2 5/2")) == Rational(12));
}

TEST_CASE("admissible radial ranges") {
    CHECK(is_admissible(Chamber::I, 0, 3));
    CHECK_FALSE(is_admissible(Chamber::I, 0, 2));
    CHECK(is_admissible(Chamber::II, 1, -4));
    CHECK_FALSE(is_admissible(Chamber::II, 1, -3));
    CHECK(is_admissible(Chamber::III, 2, -1));
    CHECK_FALSE(is_admissible(Chamber::III, 1, -1));
    CHECK_FALSE(is_admissible(Chamber::III, 3, 0));
}

TEST_CASE("case classification") {
    // The input is the Fock-side weight; the Blattner parameter goes through its dual.
    auto c = case_from_blattner(T("-1/2 -5/2 -3/2"));
    CHECK(case_classify(dual_param(T("-1/2 -5/2 -3/2"))) == c);
    CHECK(c.tag == CaseTag::C1);
    CHECK(c.params.mu1 == 2);
    CHECK(c.params.mu2 == 0);
    CHECK(c.params.alpha == 2);
    REQUIRE(c.subcase.has_value());
    CHECK(*c.subcase == Chamber::III);

    CHECK_THROWS_AS(case_classify(T("1/2 1/2 1/2")), Error);
    // Matches are exhaustive: each returned case reproduces the weight.
    auto ms = case_matches(T("1/2 -1/2 -5/2"));
    for (const auto& m : ms) CHECK(fock_weight(m) == T("1/2 -1/2 -5/2"));
}

TEST_CASE("case matcher agrees with brute-force enumeration") {
    for (CaseTag t : kAllCases) {
        for (long a = 0; a <= 4; ++a)
            for (long b = 0; b <= 4; ++b)
                for (long c = 0; c <= 4; ++c) {
                    DualPairCase dc;
                    try {
                        dc = make_case(t, params(t, a, b, c));
                    } catch (const Error&) {
                        continue;
                    }
                    auto ms = case_matches(fock_weight(dc));
                    bool found = false;
                    for (const auto& m : ms) found = found || m == dc;
                    CAPTURE(dc.describe());
                    CHECK(found);
                }
    }
}

TEST_CASE("case construction") {
    CHECK_THROWS_AS(make_case(CaseTag::A, params(CaseTag::A, 0, 1, 0)), Error);
    auto a = make_case(CaseTag::A, params(CaseTag::A, 0, 0, 0));
    CHECK(fock_weight(a) == T("3/2 3/2 -3/2"));
    CHECK(a.describe().find("A(") == 0);
    CHECK(parse_case("D2") == CaseTag::D2);
    CHECK_THROWS_AS(parse_case("E"), Error);
    CHECK(vprime_signature(CaseTag::A) == std::pair<int, int>{3, 0});
    CHECK(hc_param_of_case(make_case(CaseTag::C1, params(CaseTag::C1, 2, 0, 2))) == T("-1/2 -5/2 -3/2"));
}
