#include "mixstir/mixedcore.hpp"

#include "detail/grid.hpp"

#include <string>

namespace mixstir {

namespace {

void require_k(std::size_t k, const char* op) {
    if (k == 0) throw std::invalid_argument(std::string(op) + ": k must be >= 1");
}

// (j-1)! binom(n, j): ways to pick the j elements of a cycle and arrange them.
Nat cycle_on(std::size_t n, std::size_t j) { return binomial(n, j) * factorial(j - 1); }

}  // namespace

Nat mixed_closed(std::size_t n, std::size_t k, std::size_t t) {
    require_k(k, "mixed_closed");
    const std::size_t m = t + k - 1;
    if (m > n) return 0;
    return falling(m, k - 1) * stirling1(n, m);
}

Nat mixed_conv(std::size_t n, std::size_t k, std::size_t t) {
    require_k(k, "mixed_conv");
    if (t + k - 1 > n) return 0;
    const Nat colourings = factorial(k - 1);
    Nat sum = 0;
    for (std::size_t j = t; j + (k - 1) <= n; ++j) {
        sum += binomial(n, j) * stirling1(j, t) * stirling1(n - j, k - 1);
    }
    return colourings * sum;
}

Nat mixed_rec_insert(std::size_t n, std::size_t k, std::size_t t) {
    require_k(k, "mixed_rec_insert");
    if (t + k - 1 > n) return 0;
    detail::Grid3 g(n, k, t);
    g.at(0, 1, 0) = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t kk = 1; kk <= k; ++kk) {
            for (std::size_t tt = 0; tt <= t; ++tt) {
                Nat v = g.at(m - 1, kk, tt) * static_cast<unsigned long>(m - 1);
                if (tt >= 1) v += g.at(m - 1, kk, tt - 1);
                if (kk >= 2) v += g.at(m - 1, kk - 1, tt) * static_cast<unsigned long>(kk - 1);
                g.at(m, kk, tt) = std::move(v);
            }
        }
    }
    return g.at(n, k, t);
}

Nat mixed_rec_cyclesize(std::size_t n, std::size_t k, std::size_t t) {
    require_k(k, "mixed_rec_cyclesize");
    if (t + k - 1 > n) return 0;
    detail::Grid3 g(n, k, t);
    for (std::size_t m = 0; m <= n; ++m) {
        for (std::size_t kk = 1; kk <= k; ++kk) {
            for (std::size_t tt = 0; tt <= t; ++tt) {
                const std::size_t cycles = tt + kk - 1;
                Nat v = 0;
                if (cycles > m) {
                    // stays zero
                } else if (cycles == 0) {
                    v = m == 0 ? 1 : 0;
                } else if (cycles == 1) {
                    v = factorial(m - 1);
                } else {
                    for (std::size_t j = 1; j + 1 <= m; ++j) {
                        Nat inner = 0;
                        if (kk >= 2) inner += g.at(m - j, kk - 1, tt) * static_cast<unsigned long>(kk - 1);
                        if (tt >= 1) inner += g.at(m - j, kk, tt - 1);
                        if (inner != 0) v += factorial(j - 1) * binomial(m - 1, j - 1) * inner;
                    }
                }
                g.at(m, kk, tt) = std::move(v);
            }
        }
    }
    return g.at(n, k, t);
}

Nat mixed_rec_marknonspecial(std::size_t n, std::size_t k, std::size_t t) {
    if (k < 2) throw std::invalid_argument("mixed_rec_marknonspecial: k must be >= 2");
    if (t + k - 1 > n) return 0;
    // layer[m] holds [m][kk/t]; the kk = 1 layer is c(m, t)
    std::vector<Nat> layer(n + 1);
    for (std::size_t m = 0; m <= n; ++m) layer[m] = stirling1(m, t);
    for (std::size_t kk = 2; kk <= k; ++kk) {
        std::vector<Nat> next(n + 1, 0);
        for (std::size_t m = 1; m <= n; ++m) {
            for (std::size_t j = 1; j <= m; ++j) {
                if (layer[m - j] != 0) next[m] += cycle_on(m, j) * layer[m - j];
            }
        }
        layer = std::move(next);
    }
    return layer[n];
}

Nat mixed_rec_markspecial(std::size_t n, std::size_t k, std::size_t t) {
    require_k(k, "mixed_rec_markspecial");
    if (t == 0) throw std::invalid_argument("mixed_rec_markspecial: t must be >= 1");
    if (t + k - 1 > n) return 0;
    // layer[m] holds [m][k/tt]; the tt = 0 layer is (k-1)! c(m, k-1)
    std::vector<Nat> layer(n + 1);
    const Nat colourings = factorial(k - 1);
    for (std::size_t m = 0; m <= n; ++m) layer[m] = colourings * stirling1(m, k - 1);
    for (std::size_t tt = 1; tt <= t; ++tt) {
        std::vector<Nat> next(n + 1, 0);
        for (std::size_t m = 1; m <= n; ++m) {
            Nat marked = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (layer[m - j] != 0) marked += cycle_on(m, j) * layer[m - j];
            }
            next[m] = exact_div(marked, Nat(static_cast<unsigned long>(tt)), "mixed_rec_markspecial");
        }
        layer = std::move(next);
    }
    return layer[n];
}

Nat mixed_leader_sum_k(std::size_t n, std::size_t k, std::size_t t) {
    if (t + k == 0) throw std::invalid_argument("mixed_leader_sum_k: needs t + k >= 1");
    const std::size_t base = t + k - 1;
    const Nat colourings = falling(t + k, k);
    Nat sum = 0;
    for (std::size_t j = base; j + 1 <= n; ++j) {
        sum += rising(j + 1, n - 1 - j) * stirling1(j, base);
    }
    return colourings * sum;
}

Nat mixed_leader_sum_t(std::size_t n, std::size_t k, std::size_t t) {
    require_k(k, "mixed_leader_sum_t");
    const std::size_t base = t + k - 1;
    const Nat colourings = falling(t + k, k - 1);
    Nat sum = 0;
    for (std::size_t j = base; j + 1 <= n; ++j) {
        sum += rising(j + 1, n - 1 - j) * stirling1(j, base);
    }
    return colourings * sum;
}

std::vector<TableEntry> mixed_table(std::size_t t, std::size_t n_max, std::size_t limit) {
    if (n_max > limit) {
        throw std::invalid_argument("mixed_table: n_max " + std::to_string(n_max) +
                                    " exceeds limit " + std::to_string(limit));
    }
    std::vector<TableEntry> out;
    for (std::size_t n = t; n <= n_max; ++n) {
        for (std::size_t k = 1; k + t <= n + 1; ++k) {
            out.push_back({n, k, mixed_closed(n, k, t)});
        }
    }
    return out;
}

namespace literal {

namespace {

Nat leader_literal(std::size_t n, std::size_t base, const Nat& colourings) {
    Nat sum = 0;
    for (std::size_t j = base; j <= n; ++j) {
        sum += rising(j + 1, n - j) * stirling1(j, base);
    }
    return colourings * sum;
}

}  // namespace

Nat mixed_leader_sum_k(std::size_t n, std::size_t k, std::size_t t) {
    if (t + k == 0) throw std::invalid_argument("mixed_leader_sum_k: needs t + k >= 1");
    return leader_literal(n, t + k - 1, falling(t + k, k));
}

Nat mixed_leader_sum_t(std::size_t n, std::size_t k, std::size_t t) {
    require_k(k, "mixed_leader_sum_t");
    return leader_literal(n, t + k - 1, falling(t + k, k - 1));
}

}  // namespace literal

}  // namespace mixstir
