#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixstir {

/// Nonnegative arbitrary-precision integer. All counts live here.
using Nat = mpz_class;
/// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;

/// Thrown when two algebraic routes that must agree do not, or when an exact
/// division that an identity guarantees turns out to leave a remainder.
class IdentityViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

Nat factorial(std::size_t n);
Nat binomial(std::size_t n, std::size_t k);

/// n! / (parts[0]! ... parts[m-1]!). Throws std::invalid_argument unless the
/// parts sum to n.
Nat multinomial(std::size_t n, std::span<const std::size_t> parts);

/// x (x-1) ... (x-k+1)
Nat falling(std::size_t x, std::size_t k);
/// x (x+1) ... (x+k-1)
Nat rising(std::size_t x, std::size_t k);

/// a - b, throwing std::domain_error when the result would be negative.
Nat checked_sub(const Nat& a, const Nat& b);

/// a / b, throwing IdentityViolation when b does not divide a.
Nat exact_div(const Nat& a, const Nat& b, const char* what);

/// num/den in lowest terms; den must be nonzero.
Rat ratio(const Nat& num, const Nat& den);

/// Converts an integral rational to Nat; IdentityViolation otherwise.
Nat to_nat(const Rat& q, const char* what);

std::string to_string(const Nat& v);
std::string to_string(const Rat& v);

enum class TriangleKind { Stirling1, Stirling2, Lah };

/// Lower-triangular table of a classical two-index family, built row by row on
/// demand. Rows never shrink. Lookups are safe from concurrent threads.
class Triangle {
  public:
    explicit Triangle(TriangleKind kind);

    Triangle(const Triangle&) = delete;
    Triangle& operator=(const Triangle&) = delete;

    /// Value at (n, k); zero outside 0 <= k <= n.
    Nat operator()(std::size_t n, std::size_t k) const;

    /// Number of rows materialized so far.
    std::size_t rows() const;

    TriangleKind kind() const { return kind_; }

  private:
    void grow_locked(std::size_t n) const;

    TriangleKind kind_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<Nat>> rows_;
};

/// Process-wide caches used by stirling1/stirling2/lah.
const Triangle& stirling1_triangle();
const Triangle& stirling2_triangle();
const Triangle& lah_triangle();

/// Signless Stirling numbers of the first kind c(n,k).
Nat stirling1(std::size_t n, std::size_t k);
/// Stirling numbers of the second kind S(n,k).
Nat stirling2(std::size_t n, std::size_t k);
/// Unsigned Lah numbers L(n,k).
Nat lah(std::size_t n, std::size_t k);

}  // namespace mixstir
