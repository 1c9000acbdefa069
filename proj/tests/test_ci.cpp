#include <doctest.h>

#include "chb/ci.hpp"
#include "chb/speciality.hpp"

using namespace chb;

TEST_SUITE_BEGIN("ci");

TEST_CASE("invariants of worked examples") {
    CIInvariants a = ci_invariants(CIType(5, {2, 3, 4, 5}));
    CHECK(a.degree == 120);
    CHECK(a.speciality == 8);
    CHECK(a.genus == 481);
    CHECK(a.flag_degrees == std::vector<Integer>{2, 6, 24, 120});
    CHECK_FALSE(a.has_linear_entry);

    CIInvariants b = ci_invariants(CIType(3, {2, 4}));
    CHECK(b.degree == 8);
    CHECK(b.speciality == 2);
    CHECK(b.genus == 9);

    for (long r = 3; r <= 7; ++r) {
        CIInvariants line =
            ci_invariants(CIType(r, std::vector<Integer>(r - 1, Integer(1))));
        CHECK(line.degree == 1);
        CHECK(line.speciality == -2);
        CHECK(line.genus == 0);
        CHECK(line.has_linear_entry);
    }
}

TEST_CASE("multidegrees are canonicalized sorted") {
    CIType ci(4, {6, 2, 3});
    CHECK(ci.multidegree() == std::vector<Integer>{2, 3, 6});
    CHECK(ci.str() == "2x3x6");
    CHECK(ci == CIType(4, {3, 6, 2}));
}

TEST_CASE("construction validates shape") {
    CHECK_THROWS_AS(CIType(3, {2, 3, 4}), DomainError); // too many degrees
    CHECK_THROWS_AS(CIType(5, {2, 3}), DomainError);    // too few
    CHECK_THROWS_AS(CIType(3, {0, 4}), DomainError);    // degree < 1
    CHECK_THROWS_AS(CIType(2, {2}), DomainError);       // r < 3
}

TEST_CASE("degree * speciality is always even") {
    // exhaustive over sorted multidegrees of bounded product
    for (long r = 3; r <= 6; ++r) {
        std::vector<std::vector<Integer>> stack{{}};
        std::size_t len = static_cast<std::size_t>(r - 1);
        std::vector<std::vector<Integer>> complete;
        while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            if (cur.size() == len) {
                complete.push_back(cur);
                continue;
            }
            Integer prod = 1;
            for (const auto& a : cur)
                prod *= a;
            Integer lo = cur.empty() ? Integer(1) : cur.back();
            for (Integer a = lo; prod * a <= 2000; ++a) {
                auto next = cur;
                next.push_back(a);
                stack.push_back(next);
            }
        }
        for (const auto& degrees : complete) {
            CIInvariants inv = ci_invariants(CIType(r, degrees));
            CHECK((inv.degree * inv.speciality) % 2 == 0);
        }
    }
}

TEST_CASE("subcanonical identity d*e = 2g - 2") {
    for (long a = 1; a <= 6; ++a)
        for (long b = a; b <= 6; ++b)
            for (long c = b; c <= 6; ++c) {
                CIInvariants inv = ci_invariants(CIType(4, {a, b, c}));
                CHECK(inv.degree * inv.speciality == 2 * inv.genus - 2);
                CHECK(speciality_from_genus(inv.degree, inv.genus) == inv.speciality);
            }
}

TEST_CASE("enumerate_ci_for_flag") {
    auto one = enumerate_ci_for_flag(5, {120, 24, 6, 2});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == CIType(5, {2, 3, 4, 5}));

    CHECK(enumerate_ci_for_flag(3, {19, 3}).empty());

    auto mixed = enumerate_ci_for_flag(4, {36, 12, 2});
    REQUIRE(mixed.size() == 1);
    CHECK(mixed[0] == CIType(4, {2, 3, 6}));

    // ascending input is accepted too
    auto asc = enumerate_ci_for_flag(4, {2, 12, 36});
    REQUIRE(asc.size() == 1);
    CHECK(asc[0] == mixed[0]);

    CHECK_THROWS_AS(enumerate_ci_for_flag(5, {120, 24}), DomainError);
    CHECK_THROWS_AS(enumerate_ci_for_flag(4, {36, 0, 2}), DomainError);
}

TEST_CASE("flag consistency") {
    for (long a = 1; a <= 5; ++a)
        for (long b = a; b <= 5; ++b)
            for (long c = b; c <= 5; ++c) {
                CIType ci(4, {a, b, c});
                auto found = enumerate_ci_for_flag(4, ci_invariants(ci).flag_degrees);
                REQUIRE(found.size() == 1);
                CHECK(found[0] == ci);
            }
}

TEST_CASE("verify_sharp worked examples") {
    SharpResult thmb = verify_sharp(SharpModel::ThmB, {120, 24, 6, 2});
    CHECK(thmb.bound == Rational(8));
    CHECK(thmb.ci == CIType(5, {2, 3, 4, 5}));
    CHECK(thmb.attained);

    SharpResult thma = verify_sharp(SharpModel::ThmA, {18, 3});
    CHECK(thma.bound == Rational(5));
    CHECK(thma.ci == CIType(3, {3, 6}));
    CHECK(thma.attained);

    SharpResult prop2 = verify_sharp(SharpModel::Prop2, {4, 24, 4});
    CHECK(prop2.bound == Rational(5));
    CHECK(prop2.ci == CIType(4, {2, 2, 6}));
    CHECK(prop2.attained);

    SharpResult prop1 = verify_sharp(SharpModel::Prop1ii, {4, 120, 24, 4});
    CHECK(prop1.bound == Rational(10));
    CHECK(prop1.ci == CIType(4, {4, 5, 6}));
    CHECK(prop1.attained);
}

TEST_CASE("verify_sharp rejects points without a witness") {
    CHECK_THROWS_AS(verify_sharp(SharpModel::ThmA, {19, 3}), DivisibilityError);
    CHECK_THROWS_AS(verify_sharp(SharpModel::ThmB, {121, 24, 6, 2}),
                    DivisibilityError);
    // 5 | 25 but no factorization of 5 into two degrees reaches the maximal
    // genus in P^3, so no canonical witness exists
    CHECK_THROWS_AS(verify_sharp(SharpModel::Prop2, {4, 25, 5}), DivisibilityError);
    CHECK_THROWS_AS(verify_sharp(SharpModel::Prop2, {4, 23, 4}), DivisibilityError);
    CHECK_THROWS_AS(verify_sharp(SharpModel::ThmA, {18}), DomainError);
}

TEST_CASE("thmB sharpness over a divisible grid") {
    for (long u = 1; u <= 4; ++u)
        for (long b = 1; b <= 4; ++b)
            for (long c = 1; c <= 4; ++c)
                for (long f = 1; f <= 4; ++f) {
                    Integer t(u * b), s(u * b * c), d(u * b * c * f);
                    SharpResult res = verify_sharp_p5(d, s, t, u);
                    CHECK(res.attained);
                }
}

TEST_SUITE_END();
