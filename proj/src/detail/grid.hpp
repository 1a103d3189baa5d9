#pragma once

#include "mixstir/exactmath.hpp"

#include <cstddef>
#include <vector>

namespace mixstir::detail {

// Dense (n, k, t) table of Nat used by the bottom-up recurrences.
class Grid3 {
  public:
    Grid3(std::size_t n, std::size_t k, std::size_t t)
        : dk_(k + 1), dt_(t + 1), cells_((n + 1) * (k + 1) * (t + 1)) {}

    Nat& at(std::size_t n, std::size_t k, std::size_t t) { return cells_[(n * dk_ + k) * dt_ + t]; }
    const Nat& at(std::size_t n, std::size_t k, std::size_t t) const {
        return cells_[(n * dk_ + k) * dt_ + t];
    }

  private:
    std::size_t dk_;
    std::size_t dt_;
    std::vector<Nat> cells_;
};

}  // namespace mixstir::detail
