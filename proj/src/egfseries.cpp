#include "mixstir/egfseries.hpp"

#include <stdexcept>
#include <string>

namespace mixstir {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::one(std::size_t order) { return monomial(order, 0); }

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t degree, const Rat& c) {
    TruncatedSeries s(order);
    if (degree <= order) s.coeffs_[degree] = c;
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r = a;
    for (std::size_t i = 0; i <= a.order(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r = a;
    for (std::size_t i = 0; i <= a.order(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const std::size_t order = a.order();
    TruncatedSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries operator*(const Rat& c, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_pow(const TruncatedSeries& s, std::size_t m) {
    TruncatedSeries result = TruncatedSeries::one(s.order());
    TruncatedSeries base = s;
    while (m > 0) {
        if (m & 1U) result = result * base;
        m >>= 1U;
        if (m > 0) base = base * base;
    }
    return result;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    if (s[0] == 0) throw std::invalid_argument("series_inverse: zero constant term");
    const std::size_t order = s.order();
    std::vector<Rat> inv(order + 1);
    inv[0] = 1 / s[0];
    for (std::size_t i = 1; i <= order; ++i) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += s[j] * inv[i - j];
        inv[i] = -acc * inv[0];
    }
    return TruncatedSeries(std::move(inv));
}

TruncatedSeries log_one_over_one_minus_x(std::size_t order) { return cyc_restricted(SizeSet::all(), order); }

TruncatedSeries cyc_restricted(const SizeSet& S, std::size_t order) {
    std::vector<Rat> c(order + 1);
    for (std::size_t s : S.members_up_to(order)) c[s] = ratio(1, static_cast<unsigned long>(s));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries egf_of(const WeightSequence& a, std::size_t order) {
    std::vector<Rat> c(order + 1);
    for (std::size_t m = 1; m <= order; ++m) c[m] = ratio(a(m), factorial(m));
    return TruncatedSeries(std::move(c));
}

Rat egf_extract(const TruncatedSeries& s, std::size_t n) {
    if (n > s.order()) {
        throw std::out_of_range("egf_extract: n = " + std::to_string(n) + " beyond order " +
                                std::to_string(s.order()));
    }
    Rat v = s[n] * factorial(n);
    v.canonicalize();
    return v;
}

TruncatedSeries mixed_egf(const TruncatedSeries& base, std::size_t k, std::size_t t) {
    if (k == 0) throw std::invalid_argument("mixed_egf: k must be >= 1");
    return ratio(1, factorial(t)) * series_pow(base, t + k - 1);
}

Nat egf_mixed(std::size_t n, std::size_t k, std::size_t t) {
    return to_nat(egf_extract(mixed_egf(log_one_over_one_minus_x(n), k, t), n), "egf_mixed");
}

Nat egf_mixed_S(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S) {
    return to_nat(egf_extract(mixed_egf(cyc_restricted(S, n), k, t), n), "egf_mixed_S");
}

Nat egf_bellstar(std::size_t n, std::size_t k, std::size_t t, const WeightSequence& a) {
    return to_nat(egf_extract(mixed_egf(egf_of(a, n), k, t), n), "egf_bellstar");
}

Nat egf_stirling1_S(std::size_t n, std::size_t k, const SizeSet& S) {
    const auto s = ratio(1, factorial(k)) * series_pow(cyc_restricted(S, n), k);
    return to_nat(egf_extract(s, n), "egf_stirling1_S");
}

Nat egf_distinct_total(std::size_t n) {
    const auto one = TruncatedSeries::one(n);
    const auto s = series_inverse(one - log_one_over_one_minus_x(n));
    return to_nat(egf_extract(s, n), "egf_distinct_total");
}

}  // namespace mixstir
