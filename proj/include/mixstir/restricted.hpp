#pragma once

#include "mixstir/exactmath.hpp"
#include "mixstir/sizeset.hpp"

#include <cstddef>

namespace mixstir {

/// Permutations of [n] into k cycles, every cycle length in S.
Nat stirling1_S(std::size_t n, std::size_t k, const SizeSet& S);

/// [n][k/t]_S, the mixed coloured permutations whose cycle lengths all lie in S.
/// Reference path: (t+k-1)_{k-1} stirling1_S(n, t+k-1, S). Throws on k = 0.
Nat mixed_S(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S);

// Alternate routes to mixed_S; each must return the same value.

/// sum_j (k-1)! binom(n,j) c_S(j,t) c_S(n-j,k-1)
Nat mixed_S_conv(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S);
/// sum_{s in S} binom(n,s)(s-1)! [n-s][k-1/t]_S, bottoming out at c_S(., t). k >= 2.
Nat mixed_S_marknonspecial(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S);
/// t [n][k/t]_S = sum_{s in S} binom(n,s)(s-1)! [n-s][k/t-1]_S. t >= 1.
Nat mixed_S_markspecial(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S);
/// sum_{s in S} (s-1)! binom(n-1,s-1) [(k-1)[n-s][k-1/t]_S + [n-s][k/t-1]_S]
Nat mixed_S_cyclesize(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S);

/// Mixed coloured derangements: S = {2, 3, ...}.
Nat mixed_derangement(std::size_t n, std::size_t k, std::size_t t);

/// Splits off the i special and j non-special fixed points. Requires 1 in S.
Nat extract_fixed_points(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S);

/// Splits off the i special and j non-special cycles of length u. Requires u in S.
Nat extract_u_cycles(std::size_t n, std::size_t k, std::size_t t, std::size_t u, const SizeSet& S);

}  // namespace mixstir
