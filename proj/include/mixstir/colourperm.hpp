#pragma once

#include "mixstir/exactmath.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mixstir {

/// Per-colour cycle multiplicities (t_1, ..., t_k). Zero entries are allowed.
struct ColourProfile {
    std::vector<std::size_t> multiplicities;

    ColourProfile() = default;
    ColourProfile(std::initializer_list<std::size_t> ts) : multiplicities(ts) {}
    explicit ColourProfile(std::vector<std::size_t> ts) : multiplicities(std::move(ts)) {}

    std::size_t colours() const { return multiplicities.size(); }
    std::size_t total_cycles() const;

    /// The mixed profile (t, 1, ..., 1) with k-1 trailing ones.
    static ColourProfile mixed(std::size_t k, std::size_t t);

    friend bool operator==(const ColourProfile&, const ColourProfile&) = default;
    friend auto operator<=>(const ColourProfile&, const ColourProfile&) = default;
};

/// Number of permutations of [n] whose cycles are coloured so that exactly t_i
/// cycles carry colour i, via the multinomial convolution of c(l_i, t_i) over
/// compositions l_1 + ... + l_k = n.
Nat coloured_count(std::size_t n, const ColourProfile& profile);

/// Same count through the insertion recurrence on the largest element.
Nat coloured_count_rec(std::size_t n, const ColourProfile& profile);

/// Sum of coloured_count over every sub-profile 0 <= j_i <= t_i.
Nat coloured_atmost(std::size_t n, const ColourProfile& profile);

/// Recovers coloured_count from coloured_atmost by Moebius inversion on the
/// product of chains: only j_i in {t_i - 1, t_i} contribute.
Nat coloured_from_atmost(std::size_t n, const ColourProfile& profile);

/// k! c(n,k), the distinctly coloured permutations.
Nat distinct_coloured(std::size_t n, std::size_t k);

/// distinct_coloured through [n][k/1] = k [n-1][k-1/1] + (n-1) [n-1][k/1].
Nat distinct_coloured_rec(std::size_t n, std::size_t k);

/// Sum over k of k! c(n,k) (OEIS A006252).
Nat distinct_coloured_total(std::size_t n);

namespace literal {

/// The inclusion-exclusion statement as printed: sum over every 0 <= j_i <= t_i
/// with sign (-1)^{#nonzero j_i}. Disagrees with coloured_count already at
/// n = 1, profile (1); kept to document the discrepancy.
mpz_class coloured_inclusion_exclusion(std::size_t n, const ColourProfile& profile);

}  // namespace literal

}  // namespace mixstir
