#pragma once

#include "mixstir/exactmath.hpp"
#include "mixstir/sizeset.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mixstir {

/// Weights x_1, x_2, ... indexed from 1. Indices past an explicit list read as 0.
///
/// Presets: Ones (x_i = 1), FactShift (x_i = (i-1)!), Fact (x_i = i!) and
/// CharacteristicWeighted(S) (x_i = (i-1)! when i is in S, else 0).
/// CLI syntax: "ones", "factshift", "fact", "charS:<sizeset>", "1,1,2,6".
class WeightSequence {
  public:
    enum class Kind { Ones, FactShift, Fact, CharacteristicWeighted, Explicit };

    static WeightSequence ones() { return WeightSequence(Kind::Ones); }
    static WeightSequence fact_shift() { return WeightSequence(Kind::FactShift); }
    static WeightSequence fact() { return WeightSequence(Kind::Fact); }
    static WeightSequence characteristic_weighted(SizeSet S);
    /// values[0] is x_1.
    static WeightSequence explicit_values(std::vector<Nat> values);

    static WeightSequence parse(std::string_view text);

    Nat operator()(std::size_t i) const;

    Kind kind() const { return kind_; }
    std::string to_string() const;

  private:
    explicit WeightSequence(Kind kind) : kind_(kind) {}

    Kind kind_;
    SizeSet set_;
    std::vector<Nat> values_;
};

/// Block-size multiplicities: counts[i] = number of parts of size i.
struct MultiplicityVector {
    std::map<std::size_t, std::size_t> counts;

    std::size_t parts() const;
    std::size_t weight() const;  // sum of i * counts[i]
};

/// All multiplicity vectors with exactly `parts` parts summing to `n`.
std::vector<MultiplicityVector> multiplicity_vectors(std::size_t n, std::size_t parts);

/// Exponential partial Bell polynomial B_{n,k}(x) evaluated exactly.
Nat bell_partial(std::size_t n, std::size_t k, const WeightSequence& x);

/// Mixed partial Bell polynomial B*_{n,k,t}(x; y): t special blocks weighted by
/// x and k-1 ordered blocks weighted by y. Throws on k = 0.
Nat bellstar(std::size_t n, std::size_t k, std::size_t t, const WeightSequence& x,
             const WeightSequence& y);

/// B*_{n,k,t}(a) as (1/t!) sum over compositions of n into t+k-1 positive parts
/// of multinomial * prod a_{n_i}.
Nat bellstar_composition(std::size_t n, std::size_t k, std::size_t t, const WeightSequence& a);

/// r-partial Bell polynomial. Sums over (k_i)_{i>=1} and (r_i)_{i>=0} with
/// sum k_i = k, sum r_i = r and sum i (k_i + r_i) = n of
///   n!/prod(k_i!) prod (x_i/i!)^{k_i} * r!/prod(r_i!) prod (y_{i+1}/i!)^{r_i}.
/// r_i counts pinned blocks carrying i further elements; such a block is
/// weighted by the (i+1)-th entry of y so that the presets line up:
///   (ones, ones)           -> S_r(n+r, k+r)
///   (factshift, factshift) -> c_r(n+r, k+r)
///   (fact, fact)           -> r-Lah L_r(n+r, k+r)
Nat bell_r_partial(std::size_t n, std::size_t k, std::size_t r, const WeightSequence& x,
                   const WeightSequence& y);

}  // namespace mixstir
