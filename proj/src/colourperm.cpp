#include "mixstir/colourperm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace mixstir {

std::size_t ColourProfile::total_cycles() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
}

ColourProfile ColourProfile::mixed(std::size_t k, std::size_t t) {
    if (k == 0) throw std::invalid_argument("mixed profile needs k >= 1");
    std::vector<std::size_t> ts(k, 1);
    ts[0] = t;
    return ColourProfile(std::move(ts));
}

namespace {

// Sum over compositions l_i >= t_i (and l_i = 0 whenever t_i = 0, since
// c(l, 0) vanishes for l > 0) of binom(remaining, l_i) c(l_i, t_i).
Nat convolve(std::span<const std::size_t> ts, std::size_t remaining, std::size_t reserved) {
    if (ts.empty()) return remaining == 0 ? Nat(1) : Nat(0);
    const std::size_t t = ts.front();
    const std::size_t rest_reserved = reserved - t;
    if (ts.size() == 1) {
        return stirling1(remaining, t);
    }
    if (t == 0) return convolve(ts.subspan(1), remaining, rest_reserved);
    Nat sum = 0;
    for (std::size_t l = t; l + rest_reserved <= remaining; ++l) {
        Nat inner = convolve(ts.subspan(1), remaining - l, rest_reserved);
        if (inner == 0) continue;
        sum += binomial(remaining, l) * stirling1(l, t) * inner;
    }
    return sum;
}

}  // namespace

Nat coloured_count(std::size_t n, const ColourProfile& profile) {
    const std::size_t total = profile.total_cycles();
    if (total > n) return 0;
    if (total == 0) return n == 0 ? Nat(1) : Nat(0);
    return convolve(profile.multiplicities, n, total);
}

namespace {

class RecurrenceMemo {
  public:
    Nat eval(std::size_t n, const std::vector<std::size_t>& ts) {
        const std::size_t total = std::accumulate(ts.begin(), ts.end(), std::size_t{0});
        if (total > n) return 0;
        if (n == 0) return 1;  // total == 0 here
        auto key = std::make_pair(n, ts);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Nat value = eval(n - 1, ts) * static_cast<unsigned long>(n - 1);
        auto lowered = ts;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (ts[j] == 0) continue;
            --lowered[j];
            value += eval(n - 1, lowered);
            ++lowered[j];
        }
        memo_.emplace(std::move(key), value);
        return value;
    }

  private:
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, Nat> memo_;
};

template <typename Visit>
void for_each_subprofile(const std::vector<std::size_t>& bounds, std::vector<std::size_t>& cur,
                         std::size_t i, Visit&& visit) {
    if (i == bounds.size()) {
        visit(cur);
        return;
    }
    for (std::size_t j = 0; j <= bounds[i]; ++j) {
        cur[i] = j;
        for_each_subprofile(bounds, cur, i + 1, visit);
    }
}

}  // namespace

Nat coloured_count_rec(std::size_t n, const ColourProfile& profile) {
    RecurrenceMemo memo;
    return memo.eval(n, profile.multiplicities);
}

Nat coloured_atmost(std::size_t n, const ColourProfile& profile) {
    // Sub-profiles with more than n cycles contribute zero; clamp the box.
    std::vector<std::size_t> bounds = profile.multiplicities;
    for (auto& b : bounds) b = std::min(b, n);
    std::vector<std::size_t> cur(bounds.size(), 0);
    Nat sum = 0;
    for_each_subprofile(bounds, cur, 0, [&](const std::vector<std::size_t>& js) {
        sum += coloured_count(n, ColourProfile(js));
    });
    return sum;
}

Nat coloured_from_atmost(std::size_t n, const ColourProfile& profile) {
    const auto& ts = profile.multiplicities;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] > 0) support.push_back(i);
    }
    mpz_class sum = 0;
    const std::size_t corners = std::size_t{1} << support.size();
    for (std::size_t mask = 0; mask < corners; ++mask) {
        auto js = ts;
        int lowered = 0;
        for (std::size_t b = 0; b < support.size(); ++b) {
            if (mask >> b & 1U) {
                --js[support[b]];
                ++lowered;
            }
        }
        Nat term = coloured_atmost(n, ColourProfile(std::move(js)));
        if (lowered % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if (sum < 0) throw IdentityViolation("coloured_from_atmost: negative inversion result");
    return sum;
}

Nat distinct_coloured(std::size_t n, std::size_t k) { return factorial(k) * stirling1(n, k); }

Nat distinct_coloured_rec(std::size_t n, std::size_t k) {
    // row-by-row over n, columns 0..k
    std::vector<Nat> row(k + 1, 0);
    row[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<Nat> next(k + 1, 0);
        for (std::size_t j = 1; j <= k; ++j) {
            next[j] = row[j - 1] * static_cast<unsigned long>(j) +
                      row[j] * static_cast<unsigned long>(m - 1);
        }
        row = std::move(next);
    }
    return row[k];
}

Nat distinct_coloured_total(std::size_t n) {
    Nat sum = 0;
    for (std::size_t k = 0; k <= n; ++k) sum += distinct_coloured(n, k);
    return sum;
}

namespace literal {

mpz_class coloured_inclusion_exclusion(std::size_t n, const ColourProfile& profile) {
    std::vector<std::size_t> cur(profile.colours(), 0);
    mpz_class sum = 0;
    for_each_subprofile(profile.multiplicities, cur, 0, [&](const std::vector<std::size_t>& js) {
        const auto nonzero = std::count_if(js.begin(), js.end(), [](std::size_t j) { return j != 0; });
        Nat term = coloured_atmost(n, ColourProfile(js));
        if (nonzero % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    });
    return sum;
}

}  // namespace literal

}  // namespace mixstir
