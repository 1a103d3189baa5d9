#include "mixstir/rstirling.hpp"

#include "mixstir/mixedcore.hpp"

#include <algorithm>
#include <vector>

namespace mixstir {

Nat stirling1_r(std::size_t n, std::size_t k, std::size_t r) {
    if (n < r || k < r || k > n) return 0;
    std::vector<Nat> row(k + 1, 0);
    row[r] = 1;
    for (std::size_t m = r + 1; m <= n; ++m) {
        for (std::size_t j = k; j >= 1; --j) {
            row[j] = row[j - 1] + row[j] * static_cast<unsigned long>(m - 1);
        }
        row[0] *= static_cast<unsigned long>(m - 1);
    }
    return row[k];
}

Nat weak_distributions(std::size_t l, std::size_t r) { return rising(r, l); }

Nat stirling1_r_conv_front(std::size_t n, std::size_t k, std::size_t r) {
    if (n < r || k < r) return 0;
    Nat sum = 0;
    for (std::size_t l = 0; l <= n - r; ++l) {
        const Nat free_cycles = stirling1(n - r - l, k - r);
        if (free_cycles == 0) continue;
        sum += binomial(n - r, l) * weak_distributions(l, r) * free_cycles;
    }
    return sum;
}

Nat stirling1_r_conv_back(std::size_t n, std::size_t k, std::size_t r) {
    if (n < r || k < r) return 0;
    Nat sum = 0;
    for (std::size_t l = k - r; l <= n - r; ++l) {
        sum += binomial(n - r, l) * stirling1(l, k - r) * weak_distributions(n - r - l, r);
    }
    return sum;
}

Nat mixed_r_closed(std::size_t n, std::size_t k, std::size_t t, std::size_t r) {
    if (k == 0) throw std::invalid_argument("mixed_r_closed: k must be >= 1");
    const std::size_t m = t + k - 1;
    if (m > n) return 0;
    return falling(m, k - 1) * stirling1_r(n, m, r);
}

Nat mixed_r_doublesum(std::size_t n, std::size_t k, std::size_t t, std::size_t r) {
    if (k == 0) throw std::invalid_argument("mixed_r_doublesum: k must be >= 1");
    if (n < r) return 0;
    Nat sum = 0;
    for (std::size_t i = 0; i <= std::min(t, r); ++i) {
        const std::size_t plain_pinned = r - i;
        if (plain_pinned > k - 1) continue;
        const Nat pinned_colourings = binomial(r, i) * binomial(k - 1, plain_pinned) * factorial(plain_pinned);
        const std::size_t inner_k = k - plain_pinned;
        const std::size_t inner_t = t - i;
        for (std::size_t l = 0; l <= n - r; ++l) {
            const Nat inner = mixed_closed(l, inner_k, inner_t);
            if (inner == 0) continue;
            sum += pinned_colourings * binomial(n - r, l) * weak_distributions(n - r - l, r) * inner;
        }
    }
    return sum;
}

namespace literal {

Nat stirling1_r_conv_front(std::size_t n, std::size_t k, std::size_t r) {
    if (n < r || k < r) return 0;
    const Nat rf = factorial(r);
    Nat sum = 0;
    for (std::size_t l = 0; l + k <= n + 1 && l <= n - r; ++l) {
        sum += rf * binomial(n - r, l) * lah(l, r) * stirling1(n - r - l, k - r);
    }
    return sum;
}

Nat stirling1_r_conv_back(std::size_t n, std::size_t k, std::size_t r) {
    if (n < r || k < r) return 0;
    const Nat rf = factorial(r);
    Nat sum = 0;
    for (std::size_t l = k - r; l <= n - r; ++l) {
        sum += rf * binomial(n - r, l) * stirling1(l, k - r) * lah(n - r - l, r);
    }
    return sum;
}

Nat mixed_r_doublesum(std::size_t n, std::size_t k, std::size_t t, std::size_t r) {
    if (k == 0) throw std::invalid_argument("mixed_r_doublesum: k must be >= 1");
    if (n < r) return 0;
    const Nat rf = factorial(r);
    const std::size_t lower = k + t >= r + 1 ? k + t - r - 1 : 0;
    Nat sum = 0;
    for (std::size_t l = lower; l <= n - r; ++l) {
        for (std::size_t i = 0; i <= std::min(t, r); ++i) {
            if (k + i <= r) continue;  // inner colour count k-r+i must be >= 1
            sum += rf * binomial(r, i) * binomial(k - 1, r - i) * binomial(n - r, l) *
                   lah(n - r - l, r) * mixed_closed(l, k - r + i, t - i);
        }
    }
    return sum;
}

}  // namespace literal

}  // namespace mixstir
