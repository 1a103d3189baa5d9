#pragma once

#include "mixstir/exactmath.hpp"

#include <cstddef>

namespace mixstir {

/// r-Stirling numbers of the first kind: permutations of [n] into k cycles
/// with 1..r in pairwise distinct cycles. Triangle recurrence seeded at n = r.
Nat stirling1_r(std::size_t n, std::size_t k, std::size_t r);

/// Weak distributions of l labelled items into r distinguishable,
/// possibly-empty ordered lists: r (r+1) ... (r+l-1).
Nat weak_distributions(std::size_t l, std::size_t r);

/// Pinned cycles first: sum_l binom(n-r,l) D(l,r) c(n-r-l, k-r).
Nat stirling1_r_conv_front(std::size_t n, std::size_t k, std::size_t r);

/// Free cycles first: sum_l binom(n-r,l) c(l,k-r) D(n-r-l, r).
Nat stirling1_r_conv_back(std::size_t n, std::size_t k, std::size_t r);

/// r-mixed Stirling numbers: (t+k-1)_{k-1} c_r(n, t+k-1). Throws on k = 0.
Nat mixed_r_closed(std::size_t n, std::size_t k, std::size_t t, std::size_t r);

/// Colour the r pinned cycles first (i of them special), build a mixed
/// permutation on l free elements, then fill the pinned cycles:
/// sum_l sum_i binom(r,i) binom(k-1,r-i) (r-i)! binom(n-r,l) D(n-r-l,r)
///        [l][k-(r-i)/t-i].
Nat mixed_r_doublesum(std::size_t n, std::size_t k, std::size_t t, std::size_t r);

namespace literal {

// The statements as printed, with r! binom(n-r,l) Lah(l,r) in place of the
// weak distribution count. Wrong already at r = 1: (3,2,1) yields 2, not 3.
Nat stirling1_r_conv_front(std::size_t n, std::size_t k, std::size_t r);
Nat stirling1_r_conv_back(std::size_t n, std::size_t k, std::size_t r);
Nat mixed_r_doublesum(std::size_t n, std::size_t k, std::size_t t, std::size_t r);

}  // namespace literal

}  // namespace mixstir
