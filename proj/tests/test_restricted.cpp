#include <doctest.h>

#include "mixstir/mixedcore.hpp"
#include "mixstir/oracle.hpp"
#include "mixstir/restricted.hpp"

using namespace mixstir;

namespace {

std::vector<SizeSet> menu() {
    return {SizeSet::all(),        SizeSet::evens(),       SizeSet::odds(),      SizeSet::at_most(2),
            SizeSet::at_most(3),   SizeSet::at_least(2),   SizeSet::at_least(3), SizeSet::of({1, 3})};
}

}  // namespace

TEST_CASE("size set parsing and membership") {
    CHECK(SizeSet::parse("all").is_all());
    CHECK(SizeSet::parse("evens").contains(4));
    CHECK_FALSE(SizeSet::parse("evens").contains(3));
    CHECK(SizeSet::parse("odds").contains(1));
    CHECK(SizeSet::parse("<=3").contains(3));
    CHECK_FALSE(SizeSet::parse("<=3").contains(4));
    CHECK(SizeSet::parse(">=2").contains(100));
    CHECK_FALSE(SizeSet::parse(">=2").contains(1));
    CHECK(SizeSet::parse("{1,3}").members_up_to(10) == std::vector<std::size_t>{1, 3});
    CHECK(SizeSet::parse("!{2}").members_up_to(4) == std::vector<std::size_t>{1, 3, 4});
    CHECK(SizeSet::all().without(1).members_up_to(3) == std::vector<std::size_t>{2, 3});
    for (const auto& S : menu()) {
        CHECK_FALSE(S.contains(0));
        CHECK(SizeSet::parse(S.to_string()) == S);
    }
    CHECK_THROWS_AS(SizeSet::parse("primes"), std::invalid_argument);
    CHECK_THROWS_AS(SizeSet::parse("{0,1}"), std::invalid_argument);
    CHECK_THROWS_AS(SizeSet::parse("<=x"), std::invalid_argument);
}

TEST_CASE("restricted stirling numbers") {
    CHECK(stirling1_S(4, 2, SizeSet::evens()) == 3);
    CHECK(stirling1_S(3, 1, SizeSet::at_least(2)) == 2);
    CHECK(stirling1_S(0, 0, SizeSet::evens()) == 1);
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::size_t k = 0; k <= n; ++k) CHECK(stirling1_S(n, k, SizeSet::all()) == stirling1(n, k));
    }
}

TEST_CASE("mixed_S examples") {
    CHECK(mixed_S(4, 2, 1, SizeSet::evens()) == 6);
    CHECK(mixed_S(5, 1, 2, SizeSet::odds()) == 0);
    CHECK(mixed_derangement(4, 2, 1) == 6);
    CHECK(mixed_derangement(3, 1, 1) == 2);
    CHECK(mixed_derangement(5, 2, 2) == 0);
    CHECK_THROWS_AS(mixed_S(3, 0, 1, SizeSet::all()), std::invalid_argument);
    CHECK_THROWS_AS(mixed_derangement(3, 0, 1), std::invalid_argument);
}

TEST_CASE("five paths agree over the size-set menu") {
    for (const auto& S : menu()) {
        for (std::size_t n = 0; n <= 10; ++n) {
            for (std::size_t k = 1; k <= 4; ++k) {
                for (std::size_t t = 0; t <= 4; ++t) {
                    CAPTURE(S.to_string());
                    CAPTURE(n);
                    CAPTURE(k);
                    CAPTURE(t);
                    const Nat ref = mixed_S(n, k, t, S);
                    CHECK(mixed_S_conv(n, k, t, S) == ref);
                    CHECK(mixed_S_cyclesize(n, k, t, S) == ref);
                    if (k >= 2) CHECK(mixed_S_marknonspecial(n, k, t, S) == ref);
                    if (t >= 1) CHECK(mixed_S_markspecial(n, k, t, S) == ref);
                    if (S.is_all()) CHECK(ref == mixed_closed(n, k, t));
                }
            }
        }
    }
}

TEST_CASE("extraction theorems") {
    CHECK(extract_fixed_points(4, 2, 2, SizeSet::all()) == 18);
    CHECK(extract_fixed_points(2, 1, 2, SizeSet::all()) == 1);
    CHECK(extract_fixed_points(5, 3, 2, SizeSet::all()) == 120);
    CHECK(extract_u_cycles(4, 2, 1, 2, SizeSet::all()) == mixed_S(4, 2, 1, SizeSet::all()));
    CHECK_THROWS_AS(extract_fixed_points(4, 2, 1, SizeSet::evens()), std::invalid_argument);
    CHECK_THROWS_AS(extract_u_cycles(4, 2, 1, 2, SizeSet::odds()), std::invalid_argument);
    for (const auto& S : menu()) {
        for (std::size_t n = 0; n <= 8; ++n) {
            for (std::size_t k = 1; k <= n + 1; ++k) {
                for (std::size_t t = 0; t + k <= n + 1; ++t) {
                    const Nat ref = mixed_S(n, k, t, S);
                    if (S.contains(1)) {
                        CHECK(extract_fixed_points(n, k, t, S) == ref);
                        CHECK(extract_u_cycles(n, k, t, 1, S) == ref);
                    }
                    for (std::size_t u = 2; u <= 3; ++u) {
                        if (S.contains(u)) CHECK(extract_u_cycles(n, k, t, u, S) == ref);
                    }
                }
            }
        }
    }
}

TEST_CASE("restricted counts against enumeration") {
    for (const auto& S : menu()) {
        for (std::size_t n = 0; n <= 6; ++n) {
            for (std::size_t k = 1; k <= n + 1; ++k) {
                for (std::size_t t = 0; t + k <= n + 1; ++t) {
                    CHECK(mixed_S(n, k, t, S) == oracle::count_coloured(n, ColourProfile::mixed(k, t), S));
                }
            }
        }
    }
}
