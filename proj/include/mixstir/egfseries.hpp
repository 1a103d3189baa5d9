#pragma once

#include "mixstir/bellpoly.hpp"
#include "mixstir/exactmath.hpp"
#include "mixstir/sizeset.hpp"

#include <cstddef>
#include <vector>

namespace mixstir {

/// Coefficients of x^0 .. x^order of a formal power series over Q. Products
/// are truncated at the same order; nothing beyond it is ever read or written.
class TruncatedSeries {
  public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    /// coeffs.size() - 1 becomes the order; coeffs must be non-empty.
    explicit TruncatedSeries(std::vector<Rat> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(std::size_t order, std::size_t degree, const Rat& c = 1);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rat& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    std::vector<Rat> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// s^m by repeated squaring; s^0 is the unit series.
TruncatedSeries series_pow(const TruncatedSeries& s, std::size_t m);
/// 1/s; requires a nonzero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& s);

/// log(1/(1-x)) = sum_{m>=1} x^m / m
TruncatedSeries log_one_over_one_minus_x(std::size_t order);
/// sum_{s in S} x^s / s
TruncatedSeries cyc_restricted(const SizeSet& S, std::size_t order);
/// sum_{m>=1} a_m x^m / m!
TruncatedSeries egf_of(const WeightSequence& a, std::size_t order);

/// n! [x^n] s. Throws std::out_of_range when n > order.
Rat egf_extract(const TruncatedSeries& s, std::size_t n);

/// (1/t!) base^{t+k-1}, the exponential generating function of the mixed
/// family built over `base`. Throws on k = 0.
TruncatedSeries mixed_egf(const TruncatedSeries& base, std::size_t k, std::size_t t);

/// [n][k/t] from (1/t!) log(1/(1-x))^{t+k-1}.
Nat egf_mixed(std::size_t n, std::size_t k, std::size_t t);
/// [n][k/t]_S from (1/t!) (sum_{s in S} x^s/s)^{t+k-1}.
Nat egf_mixed_S(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S);
/// B*_{n,k,t}(a) from (1/t!) (sum a_m x^m/m!)^{t+k-1}.
Nat egf_bellstar(std::size_t n, std::size_t k, std::size_t t, const WeightSequence& a);
/// c_S(n,k) from (1/k!) (sum_{s in S} x^s/s)^k.
Nat egf_stirling1_S(std::size_t n, std::size_t k, const SizeSet& S);
/// n! [x^n] 1/(1 - log(1/(1-x))), i.e. sum_k k! c(n,k).
Nat egf_distinct_total(std::size_t n);

}  // namespace mixstir
