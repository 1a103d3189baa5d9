#include "mixstir/restricted.hpp"

#include "detail/grid.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace mixstir {

namespace {

using Rows = std::vector<std::vector<Nat>>;

void require_k(std::size_t k, const char* op) {
    if (k == 0) throw std::invalid_argument(std::string(op) + ": k must be >= 1");
}

// c_S(m, j) for 0 <= m <= n, 0 <= j <= k via
// c_S(m+1, j) = sum_{s in S} (s-1)! binom(m, s-1) c_S(m-s+1, j-1).
Rows restricted_rows(std::size_t n, std::size_t k, const SizeSet& S) {
    Rows rows(n + 1, std::vector<Nat>(k + 1, 0));
    rows[0][0] = 1;
    const auto sizes = S.members_up_to(n);
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t j = 1; j <= k; ++j) {
            Nat v = 0;
            for (std::size_t s : sizes) {
                if (s > m) break;
                const Nat& rest = rows[m - s][j - 1];
                if (rest != 0) v += factorial(s - 1) * binomial(m - 1, s - 1) * rest;
            }
            rows[m][j] = std::move(v);
        }
    }
    return rows;
}

}  // namespace

Nat stirling1_S(std::size_t n, std::size_t k, const SizeSet& S) {
    if (k > n) return 0;
    return restricted_rows(n, k, S)[n][k];
}

Nat mixed_S(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S) {
    require_k(k, "mixed_S");
    const std::size_t m = t + k - 1;
    if (m > n) return 0;
    return falling(m, k - 1) * stirling1_S(n, m, S);
}

Nat mixed_S_conv(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S) {
    require_k(k, "mixed_S_conv");
    if (t + k - 1 > n) return 0;
    const Rows c = restricted_rows(n, std::max(t, k - 1), S);
    Nat sum = 0;
    for (std::size_t j = t; j + (k - 1) <= n; ++j) {
        if (c[j][t] == 0 || c[n - j][k - 1] == 0) continue;
        sum += binomial(n, j) * c[j][t] * c[n - j][k - 1];
    }
    return factorial(k - 1) * sum;
}

Nat mixed_S_marknonspecial(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S) {
    if (k < 2) throw std::invalid_argument("mixed_S_marknonspecial: k must be >= 2");
    if (t + k - 1 > n) return 0;
    const Rows c = restricted_rows(n, t, S);
    const auto sizes = S.members_up_to(n);
    std::vector<Nat> layer(n + 1);
    for (std::size_t m = 0; m <= n; ++m) layer[m] = c[m][t];
    for (std::size_t kk = 2; kk <= k; ++kk) {
        std::vector<Nat> next(n + 1, 0);
        for (std::size_t m = 1; m <= n; ++m) {
            for (std::size_t s : sizes) {
                if (s > m) break;
                if (layer[m - s] != 0) next[m] += binomial(m, s) * factorial(s - 1) * layer[m - s];
            }
        }
        layer = std::move(next);
    }
    return layer[n];
}

Nat mixed_S_markspecial(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S) {
    require_k(k, "mixed_S_markspecial");
    if (t == 0) throw std::invalid_argument("mixed_S_markspecial: t must be >= 1");
    if (t + k - 1 > n) return 0;
    const Rows c = restricted_rows(n, k - 1, S);
    const auto sizes = S.members_up_to(n);
    const Nat colourings = factorial(k - 1);
    std::vector<Nat> layer(n + 1);
    for (std::size_t m = 0; m <= n; ++m) layer[m] = colourings * c[m][k - 1];
    for (std::size_t tt = 1; tt <= t; ++tt) {
        std::vector<Nat> next(n + 1, 0);
        for (std::size_t m = 1; m <= n; ++m) {
            Nat marked = 0;
            for (std::size_t s : sizes) {
                if (s > m) break;
                if (layer[m - s] != 0) marked += binomial(m, s) * factorial(s - 1) * layer[m - s];
            }
            next[m] = exact_div(marked, Nat(static_cast<unsigned long>(tt)), "mixed_S_markspecial");
        }
        layer = std::move(next);
    }
    return layer[n];
}

Nat mixed_S_cyclesize(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S) {
    require_k(k, "mixed_S_cyclesize");
    if (t + k - 1 > n) return 0;
    const auto sizes = S.members_up_to(n);
    detail::Grid3 g(n, k, t);
    g.at(0, 1, 0) = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t kk = 1; kk <= k; ++kk) {
            for (std::size_t tt = 0; tt <= t; ++tt) {
                Nat v = 0;
                for (std::size_t s : sizes) {
                    if (s > m) break;
                    Nat inner = 0;
                    if (kk >= 2) inner += g.at(m - s, kk - 1, tt) * static_cast<unsigned long>(kk - 1);
                    if (tt >= 1) inner += g.at(m - s, kk, tt - 1);
                    if (inner != 0) v += factorial(s - 1) * binomial(m - 1, s - 1) * inner;
                }
                g.at(m, kk, tt) = std::move(v);
            }
        }
    }
    return g.at(n, k, t);
}

Nat mixed_derangement(std::size_t n, std::size_t k, std::size_t t) {
    return mixed_S(n, k, t, SizeSet::at_least(2));
}

Nat extract_fixed_points(std::size_t n, std::size_t k, std::size_t t, const SizeSet& S) {
    require_k(k, "extract_fixed_points");
    if (!S.contains(1)) throw std::invalid_argument("extract_fixed_points: 1 must belong to S");
    const SizeSet rest = S.without(1);
    Nat sum = 0;
    for (std::size_t i = 0; i <= t && i <= n; ++i) {
        for (std::size_t j = 0; j + 1 <= k && i + j <= n; ++j) {
            const std::size_t parts[] = {i, j, n - i - j};
            Nat inner = mixed_S(n - i - j, k - j, t - i, rest);
            if (inner == 0) continue;
            sum += multinomial(n, parts) * falling(k - 1, j) * inner;
        }
    }
    return sum;
}

Nat extract_u_cycles(std::size_t n, std::size_t k, std::size_t t, std::size_t u, const SizeSet& S) {
    require_k(k, "extract_u_cycles");
    if (u == 0 || !S.contains(u)) {
        throw std::invalid_argument("extract_u_cycles: u must belong to S");
    }
    const SizeSet rest = S.without(u);
    Nat sum = 0;
    for (std::size_t i = 0; i <= t && u * i <= n; ++i) {
        for (std::size_t j = 0; j + 1 <= k && u * (i + j) <= n; ++j) {
            const std::size_t used = u * (i + j);
            Nat inner = mixed_S(n - used, k - j, t - i, rest);
            if (inner == 0) continue;
            Nat u_pow;
            mpz_ui_pow_ui(u_pow.get_mpz_t(), u, i + j);
            // arrangements of `used` elements into i special and j plain u-cycles
            const Nat arrangements =
                exact_div(factorial(used), u_pow * factorial(i) * factorial(j), "extract_u_cycles");
            sum += binomial(n, used) * arrangements * falling(k - 1, j) * inner;
        }
    }
    return sum;
}

}  // namespace mixstir
