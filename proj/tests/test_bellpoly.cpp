#include <doctest.h>

#include "mixstir/bellpoly.hpp"
#include "mixstir/egfseries.hpp"
#include "mixstir/mixedcore.hpp"
#include "mixstir/oracle.hpp"
#include "mixstir/restricted.hpp"
#include "mixstir/rstirling.hpp"

using namespace mixstir;

namespace {

std::vector<WeightSequence> presets() {
    return {WeightSequence::ones(), WeightSequence::fact_shift(), WeightSequence::fact(),
            WeightSequence::characteristic_weighted(SizeSet::evens())};
}

}  // namespace

TEST_CASE("weight sequences") {
    CHECK(WeightSequence::ones()(0) == 0);
    CHECK(WeightSequence::ones()(7) == 1);
    CHECK(WeightSequence::fact_shift()(4) == 6);
    CHECK(WeightSequence::fact()(4) == 24);
    const auto c = WeightSequence::parse("charS:odds");
    CHECK(c(3) == 2);
    CHECK(c(4) == 0);
    const auto e = WeightSequence::parse("1,1,2,6");
    CHECK(e(3) == 2);
    CHECK(e(5) == 0);
    for (const char* text : {"ones", "factshift", "fact", "charS:evens", "1,1,2,6"}) {
        CHECK(WeightSequence::parse(text).to_string() == text);
    }
    CHECK_THROWS_AS(WeightSequence::parse("squares"), std::invalid_argument);
    CHECK_THROWS_AS(WeightSequence::parse("1,x"), std::invalid_argument);
}

TEST_CASE("multiplicity vectors") {
    const auto v = multiplicity_vectors(6, 2);
    CHECK(v.size() == 3);  // 1+5, 2+4, 3+3
    for (const auto& m : v) {
        CHECK(m.parts() == 2);
        CHECK(m.weight() == 6);
    }
    CHECK(multiplicity_vectors(0, 0).size() == 1);
    CHECK(multiplicity_vectors(3, 4).empty());
}

TEST_CASE("partial Bell polynomial") {
    CHECK(bell_partial(6, 2, WeightSequence::parse("0,1,1,1")) == 25);
    CHECK(bell_partial(4, 2, WeightSequence::fact_shift()) == 11);
    CHECK(bell_partial(0, 0, WeightSequence::ones()) == 1);
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(bell_partial(n, k, WeightSequence::ones()) == stirling2(n, k));
            CHECK(bell_partial(n, k, WeightSequence::fact_shift()) == stirling1(n, k));
            CHECK(bell_partial(n, k, WeightSequence::fact()) == lah(n, k));
        }
    }
}

TEST_CASE("mixed Bell polynomial") {
    CHECK(bellstar(3, 2, 2, WeightSequence::ones(), WeightSequence::ones()) == 3);
    CHECK(bellstar_composition(3, 2, 2, WeightSequence::fact_shift()) == 3);
    CHECK(bellstar_composition(4, 2, 2, WeightSequence::fact_shift()) == 18);
    CHECK(bellstar_composition(5, 1, 1, WeightSequence::fact()) == 120);
    CHECK_THROWS_AS(bellstar(3, 0, 1, WeightSequence::ones(), WeightSequence::ones()), std::invalid_argument);
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 1; k <= 4; ++k) {
            for (std::size_t t = 0; t <= 4; ++t) {
                for (const auto& w : presets()) {
                    const Nat v = bellstar(n, k, t, w, w);
                    CHECK(bellstar_composition(n, k, t, w) == v);
                    CHECK(egf_bellstar(n, k, t, w) == v);
                }
                const auto fs = WeightSequence::fact_shift();
                CHECK(bellstar(n, k, t, fs, fs) == mixed_closed(n, k, t));
                const auto ce = WeightSequence::characteristic_weighted(SizeSet::evens());
                CHECK(bellstar(n, k, t, ce, ce) == mixed_S(n, k, t, SizeSet::evens()));
            }
        }
    }
}

TEST_CASE("mixed Bell polynomial against enumeration") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t k = 1; k <= n + 1; ++k) {
            for (std::size_t t = 0; t + k <= n + 1; ++t) {
                for (const auto& w : {WeightSequence::ones(), WeightSequence::fact()}) {
                    CHECK(bellstar(n, k, t, w, w) == oracle::count_mixed_partitions(n, k, t, w));
                }
                // i-cycles carry one of a_i labels
                const auto a = WeightSequence::parse("2,1,2,1,2,1");
                std::vector<Nat> xs;
                for (std::size_t i = 1; i <= 6; ++i) xs.push_back(factorial(i - 1) * a(i));
                const auto x = WeightSequence::explicit_values(xs);
                CHECK(bellstar(n, k, t, x, x) ==
                      oracle::count_coloured(n, ColourProfile::mixed(k, t), SizeSet::all(), 0, a));
            }
        }
    }
}

TEST_CASE("r-partial Bell polynomial") {
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            for (const auto& w : presets()) CHECK(bell_r_partial(n, k, 0, w, w) == bell_partial(n, k, w));
        }
    }
    const auto ones = WeightSequence::ones(), shift = WeightSequence::fact_shift(), fact = WeightSequence::fact();
    for (std::size_t r = 0; r <= 3; ++r) {
        for (std::size_t n = 0; n + r <= 7; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(r);
                CHECK(bell_r_partial(n, k, r, ones, ones) == oracle::count_set_partitions(n + r, k + r, r));
                CHECK(bell_r_partial(n, k, r, shift, shift) == stirling1_r(n + r, k + r, r));
                CHECK(bell_r_partial(n, k, r, fact, fact) == oracle::count_list_partitions(n + r, k + r, r));
            }
        }
    }
}
