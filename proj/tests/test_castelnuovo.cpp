#include <doctest.h>

#include "chb/hilbert.hpp"

using namespace chb;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
    return std::vector<Integer>(values.begin(), values.end());
}

} // namespace

TEST_SUITE_BEGIN("castelnuovo");

TEST_CASE("castelnuovo_bound examples") {
    for (long s = 2; s <= 40; ++s)
        CHECK(castelnuovo_bound(2, s) == Integer((s - 1) * (s - 2) / 2));
    CHECK(castelnuovo_bound(3, 6) == 4);
    CHECK(castelnuovo_bound(4, 5) == 1);
    CHECK(castelnuovo_bound(3, 4) == 1);
    CHECK(castelnuovo_bound(3, 8) == 9);
    for (long n = 2; n <= 8; ++n)
        CHECK(castelnuovo_bound(n, n) == 0); // rational normal curve
    CHECK_THROWS_AS(castelnuovo_bound(1, 5), DomainError);
    CHECK_THROWS_AS(castelnuovo_bound(3, 2), DomainError);
}

TEST_CASE("castelnuovo_hilbert values") {
    HilbertFunction h36 = castelnuovo_hilbert(3, 6);
    CHECK(h36.values() == ints({1, 3, 5, 6}));
    CHECK(h36.cap() == 6);
    CHECK(h36.at(10) == 6);

    // n = 2: the section lies on a line, h(i) = min(s, i+1)
    CHECK(castelnuovo_hilbert(2, 4).values() == ints({1, 2, 3, 4}));
    // elliptic quartic section values
    CHECK(castelnuovo_hilbert(3, 4).values() == ints({1, 3, 4}));

    for (long n = 2; n <= 8; ++n) {
        HilbertFunction h = castelnuovo_hilbert(n, n);
        CHECK(h.values() == ints({1, n}));
    }
    CHECK_THROWS_AS(castelnuovo_hilbert(3, 2), DomainError);
}

TEST_CASE("hilbert function invariants are validated") {
    CHECK_THROWS_AS(HilbertFunction(ints({2, 3}), 3), DomainError);  // h(0) != 1
    CHECK_THROWS_AS(HilbertFunction(ints({1, 3, 2}), 3), DomainError); // decreasing
    CHECK_THROWS_AS(HilbertFunction(ints({1, 5}), 4), DomainError); // above cap
    CHECK_THROWS_AS(HilbertFunction({}, 4), DomainError);
}

TEST_CASE("genus_from_hilbert") {
    CHECK(genus_from_hilbert(6, HilbertFunction(ints({1, 3, 5, 6}), 6)) == 4);
    CHECK(genus_from_hilbert(4, HilbertFunction(ints({1, 3, 4}), 4)) == 1);
    for (long d = 2; d <= 12; ++d)
        CHECK(genus_from_hilbert(d, HilbertFunction(ints({1, d}), d)) == 0);
    CHECK_THROWS_AS(genus_from_hilbert(5, HilbertFunction(ints({1, 3, 4}), 4)),
                    DomainError);
}

TEST_CASE("acm_speciality") {
    CHECK(acm_speciality(HilbertFunction(ints({1, 3, 5, 6}), 6), 6) == 1);
    // elliptic quartic: genus 1, subcanonical with e = 0
    CHECK(acm_speciality(HilbertFunction(ints({1, 3, 4}), 4), 4) == 0);
    for (long d = 2; d <= 12; ++d)
        CHECK(acm_speciality(HilbertFunction(ints({1, d}), d), d) == -1);
    CHECK_THROWS_AS(acm_speciality(HilbertFunction(ints({1, 3, 4}), 4), 5),
                    DomainError);
    CHECK_THROWS_AS(acm_speciality(HilbertFunction(ints({1}), 1), 1), DomainError);
}

TEST_CASE("bound agrees with the hilbert oracle") {
    for (long n = 2; n <= 8; ++n)
        for (long s = n; s <= 80; ++s)
            CHECK(castelnuovo_bound(n, s) ==
                  genus_from_hilbert(s, castelnuovo_hilbert(n, s)));
}

TEST_CASE("subcanonical case d == 2 mod (r-1)") {
    for (long r = 3; r <= 6; ++r) {
        for (long d = r + 1; d <= 80; ++d) {
            if ((d - 2) % (r - 1) != 0)
                continue;
            Integer g = castelnuovo_bound(r, d);
            Integer e = acm_speciality(castelnuovo_hilbert(r, d), d);
            CHECK(Integer(d) * e == 2 * g - 2);
        }
    }
}

TEST_CASE("bound is monotone in the degree") {
    for (long n = 2; n <= 6; ++n)
        for (long s = n; s < 100; ++s)
            CHECK(castelnuovo_bound(n, s + 1) >= castelnuovo_bound(n, s));
}

TEST_SUITE_END();
