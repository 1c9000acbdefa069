#include <doctest.h>

#include "chb/ci.hpp"
#include "chb/halphen.hpp"

using namespace chb;

TEST_SUITE_BEGIN("halphen");

TEST_CASE("remainder worked examples") {
    CHECK(halphen_remainder(3, 19, 3) == Rational(1, 3));
    CHECK(halphen_remainder(3, 18, 3) == Rational(1));
    CHECK(halphen_remainder(4, 41, 4) == Rational(3, 8));
    CHECK(halphen_remainder(4, 24, 4) == Rational(1));
}

TEST_CASE("remainder is 1 whenever eps = s-1") {
    for (long r = 3; r <= 6; ++r)
        for (long s = r - 1; s <= 15; ++s)
            for (long f = 1; f <= 12; ++f)
                CHECK(halphen_remainder(r, f * s, s) == Rational(1));
}

TEST_CASE("remainder magnitude") {
    for (long r = 3; r <= 6; ++r)
        for (long s = r - 1; s <= 12; ++s)
            for (long d = s + 1; d <= 12 * s; ++d)
                CHECK(abs(halphen_remainder(r, d, s)) <=
                      Rational(ipow(Integer(s), 3), Integer(r - 2)));
}

TEST_CASE("bound worked examples") {
    CHECK(halphen_bound(3, 19, 3) == 51);
    CHECK(halphen_bound(3, 18, 3) == 46);
    CHECK(halphen_bound(4, 24, 4) == 61);
    CHECK(halphen_value(3, 19, 3) == Rational(51));
    CHECK_THROWS_AS(halphen_bound(4, 18, 2), DomainError); // s < r-1
}

TEST_CASE("bound agrees with the complete-intersection genus in P^3") {
    for (long s = 2; s <= 12; ++s)
        for (long f = 2; f <= 20; ++f) {
            Integer d(f * s);
            Integer ci_genus = ci_invariants(CIType(3, {s, f})).genus;
            CHECK(halphen_bound(3, d, s) == ci_genus);
        }
}

TEST_CASE("genus_bound_p4 examples") {
    CHECK(genus_bound_p4(24, 6, 2) == 49);
    CHECK(genus_bound_p4(24, 6, 2) == ci_invariants(CIType(4, {2, 3, 4})).genus);
    for (long s = 2; s <= 20; ++s)
        CHECK(genus_bound_p4(s, 1, 1) == Integer((s - 1) * (s - 2) / 2));
    // s = t collapse onto the space-curve bound 1 + (t/2)(t/u + u - 4)
    for (long u = 1; u <= 4; ++u)
        for (long b = 1; b <= 5; ++b) {
            Integer t(u * b);
            Rational expect = Rational(1) + Rational(t, 2) * Rational(t / u + u - 4);
            CHECK(Rational(genus_bound_p4(t, t, u)) == expect);
        }
    CHECK_THROWS_AS(genus_bound_p4(24, 7, 2), DivisibilityError);
    CHECK_THROWS_AS(genus_bound_p4(25, 6, 2), DivisibilityError);
    CHECK_THROWS_AS(genus_bound_p4(6, 24, 2), DomainError);
}

TEST_CASE("genus_bound_p4 equals the CI genus whenever u|t|s") {
    for (long u = 1; u <= 4; ++u)
        for (long b = 1; b <= 4; ++b)
            for (long c = 1; c <= 4; ++c) {
                Integer t(u * b), s(u * b * c);
                CHECK(genus_bound_p4(s, t, u) ==
                      ci_invariants(CIType(4, {u, b, c})).genus);
            }
}

TEST_CASE("genus_interval_p4") {
    IntervalBound collapsed = genus_interval_p4(24, 6, 2);
    CHECK(collapsed.lo == Rational(49));
    CHECK(collapsed.hi == Rational(49));
    CHECK(collapsed.center == Rational(49));

    // u does not divide t: full-width interval around the closed form
    IntervalBound open = genus_interval_p4(24, 7, 2);
    CHECK(open.center == Rational(331, 7));
    CHECK(open.width() == Rational(2 * 343, 3));
    CHECK(open.lo == open.center - Rational(1) - Rational(343, 3));

    // u = 1 with t not dividing s keeps the symmetric width 2t^3/3
    IntervalBound u1 = genus_interval_p4(24, 7, 1);
    CHECK(u1.width() == Rational(2 * 343, 3));

    // u >= 2 dividing t (t not dividing s) caps the top end at the center
    IntervalBound capped = genus_interval_p4(25, 6, 2);
    CHECK(capped.hi == capped.center);
    CHECK(capped.lo == capped.center - Rational(1) - Rational(72));

    CHECK_THROWS_AS(genus_interval_p4(5, 6, 2), DomainError);
}

TEST_CASE("genus_interval_p4 always encloses its center") {
    for (long u = 1; u <= 5; ++u)
        for (long t = u; t <= 15; ++t)
            for (long s = t; s <= 30; ++s) {
                IntervalBound iv = genus_interval_p4(s, t, u);
                CHECK(iv.lo <= iv.center);
                CHECK(iv.center <= iv.hi);
                if (t % u == 0 && s % t == 0) {
                    CHECK(iv.lo == iv.hi);
                    CHECK(iv.center == Rational(genus_bound_p4(s, t, u)));
                }
            }
}

TEST_CASE("genus_interval_p5") {
    IntervalBound iv = genus_interval_p5(120, 24, 6, 2);
    CHECK(iv.center == Rational(481));
    CHECK(iv.hi - iv.center == Rational(12717));
    CHECK(iv.center - iv.lo == Rational(12717));
    CHECK(iv.center == Rational(ci_invariants(CIType(5, {2, 3, 4, 5})).genus));

    // symmetric by construction
    for (long u = 1; u <= 3; ++u)
        for (long t = u; t <= 3 * u; ++t)
            for (long s = t; s <= 3 * t; ++s)
                for (long d = s; d <= 2 * s; ++d) {
                    IntervalBound x = genus_interval_p5(d, s, t, u);
                    Rational half = Rational(3, 4) * Rational(d, 2) +
                                    Rational(33 * s * s * s, t * t);
                    CHECK(x.width() == Rational(2) * half);
                }

    CHECK_THROWS_AS(genus_interval_p5(10, 24, 6, 2), DomainError);
}

TEST_SUITE_END();
