#pragma once

#include "mixstir/exactmath.hpp"

#include <cstddef>
#include <vector>

namespace mixstir {

/// Index of a mixed Stirling number [n][k/t]: permutations of [n] with t
/// cycles in one special colour and k-1 cycles in pairwise distinct colours.
struct MixedIndex {
    std::size_t n = 0;
    std::size_t k = 1;
    std::size_t t = 0;

    std::size_t cycles() const { return t + k - 1; }
    friend bool operator==(const MixedIndex&, const MixedIndex&) = default;
};

// Every path below returns the same number. Degenerate indices (t+k-1 > n, or
// n > 0 with no cycles at all) give zero; k = 0 throws std::invalid_argument.

/// Reference path: (t+k-1)_{k-1} c(n, t+k-1).
Nat mixed_closed(std::size_t n, std::size_t k, std::size_t t);

/// Convolution over the j elements that go into special cycles:
/// sum_j (k-1)! binom(n,j) c(j,t) c(n-j,k-1).
Nat mixed_conv(std::size_t n, std::size_t k, std::size_t t);

/// Recurrence on whether n is a singleton:
/// [n][k/t] = [n-1][k/t-1] + (k-1)[n-1][k-1/t] + (n-1)[n-1][k/t].
Nat mixed_rec_insert(std::size_t n, std::size_t k, std::size_t t);

/// Recurrence on the length j of the cycle containing n (1 <= j <= n-1), with
/// the single-cycle case answered directly by c(n,1).
Nat mixed_rec_cyclesize(std::size_t n, std::size_t k, std::size_t t);

/// Marks a non-special cycle: [n][k/t] = sum_j binom(n,j)(j-1)! [n-j][k-1/t].
/// Requires k >= 2.
Nat mixed_rec_marknonspecial(std::size_t n, std::size_t k, std::size_t t);

/// Marks a special cycle: t [n][k/t] = sum_j binom(n,j)(j-1)! [n-j][k/t-1].
/// Requires t >= 1; an inexact division raises IdentityViolation.
Nat mixed_rec_markspecial(std::size_t n, std::size_t k, std::size_t t);

/// [n][k+1/t] by conditioning on the largest cycle minimum j+1:
/// sum_{j=t+k-1}^{n-1} (n-1)!/j! c(j,t+k-1) (t+k)_k.
/// Needs t + k >= 1.
Nat mixed_leader_sum_k(std::size_t n, std::size_t k, std::size_t t);

/// [n][k/t+1] by the same decomposition, colouring t+1 cycles special:
/// sum_{j=t+k-1}^{n-1} (n-1)!/j! c(j,t+k-1) (t+k)_{k-1}. Requires k >= 1.
Nat mixed_leader_sum_t(std::size_t n, std::size_t k, std::size_t t);

struct TableEntry {
    std::size_t n = 0;
    std::size_t k = 0;
    Nat value;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Largest n_max accepted by mixed_table.
inline constexpr std::size_t kDefaultTableLimit = 400;

/// [n][k/t] for t <= n <= n_max and 1 <= k <= n-t+1, row-major.
std::vector<TableEntry> mixed_table(std::size_t t, std::size_t n_max,
                                    std::size_t limit = kDefaultTableLimit);

namespace literal {

// The leader-sum statements as printed (upper limit n, weight n!/j!). They
// overcount: at [3][2/2] the k-form yields 18 instead of 3.
Nat mixed_leader_sum_k(std::size_t n, std::size_t k, std::size_t t);
Nat mixed_leader_sum_t(std::size_t n, std::size_t k, std::size_t t);

}  // namespace literal

}  // namespace mixstir
