#include <doctest.h>

#include <algorithm>

#include "chb/regimes.hpp"

using namespace chb;

namespace {

bool has_failed(const RegimeReport& report, const std::string& name) {
    auto failed = report.failed_clauses();
    return std::find(failed.begin(), failed.end(), name) != failed.end();
}

} // namespace

TEST_SUITE_BEGIN("regimes");

TEST_CASE("regime_p5 for u >= 2") {
    Integer d = ipow(Integer(10), 21);
    Integer s = ipow(Integer(10), 9);
    Integer t = ipow(Integer(10), 3);
    RegimeReport rep = regime_p5(d, s, t, 2);
    CHECK_FALSE(rep.satisfied);
    CHECK(has_failed(rep, "t > 408(u+1)^3")); // 1000 <= 11016
    CHECK(has_failed(rep, "s > (2/3)t^4"));
    CHECK(has_failed(rep, "d > (2/3)s^4"));
}

TEST_CASE("regime_p5 for u = 1") {
    RegimeReport ok = regime_p5(200, 3, 2, 1);
    CHECK(ok.satisfied); // 200 > max{54, 192}, 3 > 2, t >= 2

    RegimeReport at_boundary = regime_p5(192, 3, 2, 1);
    CHECK_FALSE(at_boundary.satisfied); // strict >

    RegimeReport t1 = regime_p5(200, 3, 1, 1);
    CHECK_FALSE(t1.satisfied);
    CHECK(has_failed(t1, "t >= 2"));
}

TEST_CASE("regime_p5 boundary strictness") {
    // d at floor((2/3)s^4) fails the strict comparison, one above passes
    Integer t = 11017, u = 2; // t clears 408*27 = 11016
    Integer s_big = (2 * ipow(t, 4)) / 3 + 1;
    Integer d_at = (2 * ipow(s_big, 4)) / 3;
    RegimeReport rep = regime_p5(d_at, s_big, t, u);
    CHECK_FALSE(rep.satisfied);
    CHECK(has_failed(rep, "d > (2/3)s^4"));
    RegimeReport rep2 = regime_p5(d_at + 1, s_big, t, u);
    CHECK(rep2.satisfied);
}

TEST_CASE("regime_flag thresholds") {
    // l = 4, r = 5: threshold 2*1*33*(24^3/6^2)*(24*6*2) = 7299072
    RegimeReport below = regime_flag(FlagCondition(5, {7299072, 24, 6, 2}));
    CHECK_FALSE(below.satisfied);
    RegimeReport above = regime_flag(FlagCondition(5, {7299073, 24, 6, 2}));
    CHECK(above.satisfied);
    CHECK(above.clauses.size() == 1);
    CHECK(above.clauses[0].threshold == Rational(7299072));
    CHECK_FALSE(above.note.empty());

    // l = 2, r = 4: s3 := r-3 = 1, threshold 2*2*17*s2^4 (s2 >= r-l+1 = 3)
    for (long s2 = 3; s2 <= 6; ++s2) {
        Integer threshold = 68 * ipow(Integer(s2), 4);
        RegimeReport at = regime_flag(FlagCondition(4, {threshold, s2}));
        CHECK_FALSE(at.satisfied); // strict
        RegimeReport over = regime_flag(FlagCondition(4, {threshold + 1, s2}));
        CHECK(over.satisfied);
    }

    CHECK_THROWS_AS(regime_flag(FlagCondition(3, {10, 2})), DomainError); // r=3, l=2
    CHECK_THROWS_AS(regime_flag(FlagCondition(4, {10})), DomainError);    // l < 2
}

TEST_CASE("regime_via_genus") {
    CHECK(regime_via_genus(4, 1000, 4)); // 1000 > 256
    CHECK_FALSE(regime_via_genus(4, 256, 4));
    for (long s2 = 1; s2 <= 5; ++s2)
        CHECK_FALSE(regime_via_genus(3, 2 * ipow(Integer(s2), 4), s2)); // boundary
    CHECK(regime_via_genus(6, 129, 4)); // 129 > 128
    CHECK_FALSE(regime_via_genus(6, 128, 4));
    CHECK_THROWS_AS(regime_via_genus(2, 10, 2), DomainError);
}

TEST_CASE("regime_flag2") {
    CHECK(regime_flag2(4, 300, 4));       // 300 > 256
    CHECK_FALSE(regime_flag2(4, 256, 4)); // boundary is strict
    CHECK(regime_flag2(5, 171, 4));       // 171 > 512/3
    CHECK_FALSE(regime_flag2(5, 170, 4));
}

TEST_CASE("genus_gap_check") {
    CHECK_FALSE(genus_gap_check(120, 24, 6, 2)); // right side is negative
    CHECK(genus_gap_check(ipow(Integer(10), 21), ipow(Integer(10), 9),
                          ipow(Integer(10), 3), 2));
    // t <= 3u^2(u+1) makes the right side nonpositive
    for (long u = 1; u <= 3; ++u) {
        Integer t = 3 * u * u * (u + 1);
        CHECK_FALSE(genus_gap_check(20 * t, 10 * t, t, u));
    }
    CHECK_THROWS_AS(genus_gap_check(1, 2, 3, 4), DomainError);
}

TEST_CASE("regime_p5 implies genus_gap_check near the thresholds") {
    int points = 0;
    for (long u = 2; u <= 3; ++u) {
        Integer t_min = 408 * ipow(Integer(u + 1), 3) + 1;
        for (long toff = 0; toff < 3; ++toff) {
            Integer t = t_min + toff;
            Integer s_min = (2 * ipow(t, 4)) / 3 + 1;
            for (long soff = 0; soff < 2; ++soff) {
                Integer s = s_min + soff;
                Integer d_min = (2 * ipow(s, 4)) / 3 + 1;
                for (long doff = 0; doff < 2; ++doff) {
                    Integer d = d_min + doff;
                    REQUIRE(regime_p5(d, s, t, u).satisfied);
                    CHECK(genus_gap_check(d, s, t, u));
                    ++points;
                }
            }
        }
    }
    CHECK(points >= 20);
}

TEST_SUITE_END();
