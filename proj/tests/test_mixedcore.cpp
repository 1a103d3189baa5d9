#include <doctest.h>

#include "mixstir/colourperm.hpp"
#include "mixstir/mixedcore.hpp"
#include "mixstir/oracle.hpp"

#include <map>

using namespace mixstir;

namespace {

// Table 1, keyed by (n, k)
const std::map<std::pair<std::size_t, std::size_t>, long> kPanelT2{
    {{2, 1}, 1},   {{3, 1}, 3},   {{3, 2}, 3},    {{4, 1}, 11},  {{4, 2}, 18},
    {{4, 3}, 12},  {{5, 1}, 50},  {{5, 2}, 105},  {{5, 3}, 120}, {{5, 4}, 60},
    {{6, 1}, 274}, {{6, 2}, 675}, {{6, 3}, 1020}, {{6, 4}, 900}, {{6, 5}, 360},
};
const std::map<std::pair<std::size_t, std::size_t>, long> kPanelT3{
    {{3, 1}, 1},    {{4, 1}, 6},    {{4, 2}, 4},    {{5, 1}, 35},   {{5, 2}, 40},
    {{5, 3}, 20},   {{6, 1}, 225},  {{6, 2}, 340},  {{6, 3}, 300},  {{6, 4}, 120},
    {{7, 1}, 1624}, {{7, 2}, 2940}, {{7, 3}, 3500}, {{7, 4}, 2520}, {{7, 5}, 840},
};

template <typename F>
void for_valid(std::size_t N, F&& f) {
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t k = 1; k <= n + 1; ++k) {
            for (std::size_t t = 0; t + k <= n + 1; ++t) f(n, k, t);
        }
    }
}

}  // namespace

TEST_CASE("closed form reproduces Table 1") {
    for (const auto& [nk, v] : kPanelT2) CHECK(mixed_closed(nk.first, nk.second, 2) == v);
    for (const auto& [nk, v] : kPanelT3) CHECK(mixed_closed(nk.first, nk.second, 3) == v);
}

TEST_CASE("mixed_table matches Table 1 exactly") {
    const auto t2 = mixed_table(2, 6);
    CHECK(t2.size() == kPanelT2.size());
    for (const auto& e : t2) CHECK(kPanelT2.at({e.n, e.k}) == e.value);
    const auto t3 = mixed_table(3, 7);
    CHECK(t3.size() == kPanelT3.size());
    for (const auto& e : t3) CHECK(kPanelT3.at({e.n, e.k}) == e.value);
    for (const auto& e : mixed_table(1, 6)) CHECK(e.value == factorial(e.k) * stirling1(e.n, e.k));
    CHECK_THROWS_AS(mixed_table(2, kDefaultTableLimit + 1), std::invalid_argument);
}

TEST_CASE("degenerate indices") {
    CHECK(mixed_closed(0, 1, 0) == 1);
    CHECK(mixed_closed(3, 1, 0) == 0);
    CHECK(mixed_closed(3, 3, 2) == 0);
    CHECK_THROWS_AS(mixed_closed(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mixed_conv(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mixed_rec_insert(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mixed_rec_marknonspecial(3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(mixed_rec_markspecial(3, 2, 0), std::invalid_argument);
}

TEST_CASE("spot values per path") {
    CHECK(mixed_conv(4, 2, 2) == 18);
    CHECK(mixed_conv(3, 1, 3) == 1);
    CHECK(mixed_conv(7, 5, 3) == 840);
    CHECK(mixed_rec_insert(4, 2, 2) == 18);
    CHECK(mixed_rec_insert(2, 1, 1) == 1);
    CHECK(mixed_rec_insert(6, 5, 2) == 360);
    CHECK(mixed_rec_cyclesize(3, 2, 1) == 6);
    CHECK(mixed_rec_cyclesize(4, 2, 2) == 18);
    CHECK(mixed_rec_cyclesize(5, 3, 2) == 120);
    CHECK(mixed_rec_cyclesize(5, 1, 1) == 24);
    CHECK(mixed_rec_cyclesize(5, 2, 0) == 24);
    CHECK(mixed_rec_marknonspecial(3, 2, 1) == 6);
    CHECK(mixed_rec_marknonspecial(4, 3, 2) == 12);
    CHECK(mixed_rec_marknonspecial(5, 2, 3) == 40);
    CHECK(mixed_rec_markspecial(3, 1, 2) == 3);
    CHECK(mixed_rec_markspecial(4, 2, 2) == 18);
    CHECK(mixed_rec_markspecial(6, 4, 2) == 900);
}

TEST_CASE("leader sums") {
    CHECK(mixed_leader_sum_k(3, 1, 2) == 3);
    CHECK(mixed_leader_sum_k(4, 1, 2) == 18);
    CHECK(mixed_leader_sum_k(3, 0, 3) == 1);
    CHECK(mixed_leader_sum_t(3, 1, 2) == 1);
    CHECK(mixed_leader_sum_t(5, 2, 2) == 40);
    CHECK(mixed_leader_sum_t(4, 2, 1) == 18);
    CHECK(literal::mixed_leader_sum_k(3, 1, 2) == 18);
    CHECK(literal::mixed_leader_sum_k(3, 1, 2) != mixed_closed(3, 2, 2));
}

TEST_CASE("every path agrees for n <= 12") {
    for_valid(12, [](std::size_t n, std::size_t k, std::size_t t) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(t);
        const Nat ref = mixed_closed(n, k, t);
        CHECK(mixed_conv(n, k, t) == ref);
        CHECK(mixed_rec_insert(n, k, t) == ref);
        if (n >= 1) CHECK(mixed_rec_cyclesize(n, k, t) == ref);
        if (k >= 2) CHECK(mixed_rec_marknonspecial(n, k, t) == ref);
        if (t >= 1) CHECK(mixed_rec_markspecial(n, k, t) == ref);
        if (n >= 1 && k >= 2) CHECK(mixed_leader_sum_k(n, k - 1, t) == ref);
        if (n >= 1 && t >= 1) CHECK(mixed_leader_sum_t(n, k, t - 1) == ref);
        CHECK(coloured_count(n, ColourProfile::mixed(k, t)) == ref);
    });
}

TEST_CASE("corollaries") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (std::size_t k = 2; k <= n; ++k) CHECK(mixed_closed(n, k, 0) == mixed_closed(n, k - 1, 1));
        for (std::size_t t = 1; t <= n; ++t) {
            CHECK(mixed_closed(n, 1, t) == stirling1(n, t));
            CHECK(mixed_closed(n, n - t + 1, t) == factorial(n) / factorial(t));
        }
        CHECK(mixed_closed(n, 1, n - 1) == binomial(n, 2));
        CHECK(mixed_closed(n, 2, n - 1) == n);
    }
}

TEST_CASE("closed form against enumeration") {
    for_valid(6, [](std::size_t n, std::size_t k, std::size_t t) {
        CHECK(mixed_closed(n, k, t) == oracle::count_coloured(n, ColourProfile::mixed(k, t)));
    });
}
