#pragma once

#include "mixstir/bellpoly.hpp"
#include "mixstir/colourperm.hpp"
#include "mixstir/exactmath.hpp"
#include "mixstir/sizeset.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mixstir::oracle {

/// Brute-force enumeration over all n! permutations: ground truth for every
/// formula in the library at small n.

inline constexpr std::size_t kDefaultLimit = 8;

class LimitExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Cycles of a permutation of {1..n}: each cycle starts at its least element,
/// cycles sorted by least element.
struct CycleDecomposition {
    std::vector<std::vector<std::size_t>> cycles;

    friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
    friend auto operator<=>(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// A permutation together with a colour (1-based) for each of its cycles.
struct ColouredPermutation {
    CycleDecomposition decomposition;
    std::vector<std::size_t> colouring;
};

/// Canonical cycle form of a permutation in one-line notation over 1..n.
CycleDecomposition decompose(const std::vector<std::size_t>& one_line);

struct Limits {
    std::size_t max_n = kDefaultLimit;
};

/// Calls `visit` once per permutation of [n], in lexicographic one-line order.
void enumerate_permutations(std::size_t n, const std::function<void(const CycleDecomposition&)>& visit,
                            Limits limits = {});

/// Calls `visit` once per colouring of `cycles` cycles matching `profile`
/// (exactly t_i cycles receive colour i). Visits nothing when the totals differ.
void enumerate_colourings(std::size_t cycles, const ColourProfile& profile,
                          const std::function<void(const std::vector<std::size_t>&)>& visit);

/// Counts pairs (permutation of [n], colouring) such that every cycle length is
/// in S, the elements 1..r sit in distinct cycles and the colouring matches
/// `profile`. Each pair is weighted by prod labels(length) over its cycles.
Nat count_coloured(std::size_t n, const ColourProfile& profile, const SizeSet& S = SizeSet::all(),
                   std::size_t r = 0, const WeightSequence& labels = WeightSequence::ones(),
                   Limits limits = {});

/// Calls `visit` with the block index of each element (restricted growth
/// string) for every set partition of [n].
void enumerate_set_partitions(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit,
                              Limits limits = {});

/// Mixed partitions of [n]: t unordered special blocks plus k-1 blocks carrying
/// distinct labels 2..k, each block of size j decorated by labels_per_size(j)
/// colours. Enumerated explicitly.
Nat count_mixed_partitions(std::size_t n, std::size_t k, std::size_t t,
                           const WeightSequence& labels_per_size = WeightSequence::ones(),
                           Limits limits = {});

/// Set partitions of [n] into k blocks with 1..r in distinct blocks.
Nat count_set_partitions(std::size_t n, std::size_t k, std::size_t r = 0, Limits limits = {});

/// Partitions of [n] into k nonempty linearly ordered lists, by enumerating
/// every (permutation, cut) pair whose list minima increase
/// left to right. With r > 0 the elements 1..r must lie in distinct lists.
Nat count_list_partitions(std::size_t n, std::size_t k, std::size_t r = 0, Limits limits = {});

}  // namespace mixstir::oracle
