#include <doctest.h>

#include "mixstir/mixedcore.hpp"
#include "mixstir/oracle.hpp"
#include "mixstir/rstirling.hpp"

using namespace mixstir;

TEST_CASE("r-Stirling reference values") {
    CHECK(stirling1_r(3, 2, 2) == 2);
    CHECK(stirling1_r(3, 3, 3) == 1);
    CHECK(stirling1_r(2, 1, 2) == 0);
    CHECK(stirling1_r(1, 1, 2) == 0);
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (n >= 1) CHECK(stirling1_r(n, k, 1) == stirling1(n, k));
            CHECK(stirling1_r(n, k, 0) == stirling1(n, k));
        }
    }
}

TEST_CASE("weak distributions") {
    CHECK(weak_distributions(0, 3) == 1);
    CHECK(weak_distributions(1, 2) == 2);
    CHECK(weak_distributions(2, 2) == 6);
    CHECK(weak_distributions(3, 1) == 6);
}

TEST_CASE("corrected convolutions") {
    CHECK(stirling1_r_conv_front(3, 2, 2) == 2);
    CHECK(stirling1_r_conv_front(3, 2, 1) == 3);
    CHECK(stirling1_r_conv_back(3, 2, 2) == 2);
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t r = 0; r <= 4; ++r) {
            for (std::size_t k = r; k <= n; ++k) {
                CHECK(stirling1_r_conv_front(n, k, r) == stirling1_r(n, k, r));
                CHECK(stirling1_r_conv_back(n, k, r) == stirling1_r(n, k, r));
            }
            if (r <= n) CHECK(stirling1_r_conv_back(n, n, r) == 1);
        }
    }
}

TEST_CASE("printed convolution undercounts") {
    CHECK(literal::stirling1_r_conv_front(3, 2, 1) == 2);
    CHECK(literal::stirling1_r_conv_front(3, 2, 2) == 0);
    CHECK(stirling1_r(3, 2, 1) == 3);
}

TEST_CASE("r-mixed numbers") {
    CHECK(mixed_r_closed(3, 2, 1, 2) == 4);
    CHECK(mixed_r_doublesum(3, 2, 1, 2) == 4);
    CHECK(mixed_r_closed(4, 2, 2, 3) == 3 * stirling1_r(4, 3, 3));
    CHECK_THROWS_AS(mixed_r_closed(3, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(mixed_r_doublesum(3, 0, 1, 1), std::invalid_argument);
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t k = 1; k <= n + 1; ++k) {
            for (std::size_t t = 0; t + k <= n + 1; ++t) {
                CHECK(mixed_r_closed(n, k, t, 0) == mixed_closed(n, k, t));
                if (n >= 1) CHECK(mixed_r_closed(n, k, t, 1) == mixed_closed(n, k, t));
                CHECK(mixed_r_doublesum(n, k, t, 0) == mixed_closed(n, k, t));
                for (std::size_t r = 1; r <= 3; ++r) {
                    CHECK(mixed_r_doublesum(n, k, t, r) == mixed_r_closed(n, k, t, r));
                }
            }
        }
    }
}

TEST_CASE("pinning only removes permutations") {
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t r = 1; r <= 4; ++r) CHECK(stirling1_r(n, k, r) <= stirling1_r(n, k, r - 1));
        }
    }
}

TEST_CASE("r-Stirling against enumeration") {
    for (std::size_t r = 0; r <= 3; ++r) {
        for (std::size_t n = 0; n <= 6; ++n) {
            Nat total = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                const Nat truth = oracle::count_coloured(n, {k}, SizeSet::all(), r);
                CHECK(stirling1_r(n, k, r) == truth);
                total += truth;
            }
            Nat filtered = 0;
            oracle::enumerate_permutations(n, [&](const oracle::CycleDecomposition& d) {
                for (const auto& c : d.cycles) {
                    std::size_t pinned = 0;
                    for (auto x : c) pinned += x <= r ? 1 : 0;
                    if (pinned > 1) return;
                }
                if (r <= n) ++filtered;
            });
            if (n > 0) CHECK(total == filtered);
        }
    }
}
