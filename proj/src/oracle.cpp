#include "mixstir/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace mixstir::oracle {

namespace {

void check_limit(std::size_t n, const Limits& limits, const char* what) {
    if (n > limits.max_n) {
        throw LimitExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds oracle limit " +
                            std::to_string(limits.max_n));
    }
}

// Every element of 1..r in a different cycle.
bool pinned_apart(const CycleDecomposition& d, std::size_t r) {
    if (r == 0) return true;
    std::size_t seen = 0;
    for (const auto& c : d.cycles) {
        const auto pinned = std::count_if(c.begin(), c.end(), [r](std::size_t x) { return x <= r; });
        if (pinned > 1) return false;
        seen += static_cast<std::size_t>(pinned);
    }
    return seen == r;
}

}  // namespace

CycleDecomposition decompose(const std::vector<std::size_t>& one_line) {
    const std::size_t n = one_line.size();
    std::vector<bool> done(n + 1, false);
    CycleDecomposition d;
    for (std::size_t start = 1; start <= n; ++start) {
        if (done[start]) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t x = start; !done[x]; x = one_line[x - 1]) {
            done[x] = true;
            cycle.push_back(x);
        }
        d.cycles.push_back(std::move(cycle));
    }
    return d;
}

void enumerate_permutations(std::size_t n, const std::function<void(const CycleDecomposition&)>& visit,
                            Limits limits) {
    check_limit(n, limits, "enumerate_permutations");
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), std::size_t{1});
    do {
        visit(decompose(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

void enumerate_colourings(std::size_t cycles, const ColourProfile& profile,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (profile.total_cycles() != cycles) return;
    std::vector<std::size_t> quota = profile.multiplicities;
    std::vector<std::size_t> colouring(cycles, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cycles) {
            visit(colouring);
            return;
        }
        for (std::size_t colour = 0; colour < quota.size(); ++colour) {
            if (quota[colour] == 0) continue;
            --quota[colour];
            colouring[c] = colour + 1;
            rec(c + 1);
            ++quota[colour];
        }
    };
    rec(0);
}

Nat count_coloured(std::size_t n, const ColourProfile& profile, const SizeSet& S, std::size_t r,
                   const WeightSequence& labels, Limits limits) {
    check_limit(n, limits, "count_coloured");
    // unused colours cost nothing to enumerate
    const auto used = static_cast<std::size_t>(
        std::count_if(profile.multiplicities.begin(), profile.multiplicities.end(), [](std::size_t t) { return t > 0; }));
    check_limit(used, limits, "count_coloured (colours)");
    const std::size_t wanted = profile.total_cycles();
    Nat total = 0;
    enumerate_permutations(
        n,
        [&](const CycleDecomposition& d) {
            if (d.cycles.size() != wanted) return;
            for (const auto& c : d.cycles) {
                if (!S.contains(c.size())) return;
            }
            if (!pinned_apart(d, r)) return;
            Nat weight = 1;
            for (const auto& c : d.cycles) weight *= labels(c.size());
            if (weight == 0) return;
            unsigned long colourings = 0;
            enumerate_colourings(d.cycles.size(), profile, [&](const std::vector<std::size_t>&) { ++colourings; });
            total += weight * colourings;
        },
        limits);
    return total;
}

void enumerate_set_partitions(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit,
                              Limits limits) {
    check_limit(n, limits, "enumerate_set_partitions");
    std::vector<std::size_t> rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
        if (i == n) {
            visit(rgs);
            return;
        }
        for (std::size_t b = 0; b <= blocks; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

Nat count_mixed_partitions(std::size_t n, std::size_t k, std::size_t t, const WeightSequence& labels_per_size,
                           Limits limits) {
    if (k == 0) throw std::invalid_argument("count_mixed_partitions: k must be >= 1");
    const std::size_t blocks = t + k - 1;
    Nat total = 0;
    enumerate_set_partitions(
        n,
        [&](const std::vector<std::size_t>& rgs) {
            const std::size_t b = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
            if (b != blocks) return;
            std::vector<std::size_t> sizes(b, 0);
            for (auto x : rgs) ++sizes[x];
            Nat decorations = 1;
            for (auto s : sizes) decorations *= labels_per_size(s);
            if (decorations == 0) return;
            // choose the special blocks, then give the rest the labels 2..k in every order
            for (std::size_t mask = 0; mask < (std::size_t{1} << b); ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != t) continue;
                std::vector<std::size_t> ordered;
                for (std::size_t i = 0; i < b; ++i) {
                    if (!(mask >> i & 1U)) ordered.push_back(i);
                }
                do {
                    total += decorations;
                } while (std::next_permutation(ordered.begin(), ordered.end()));
            }
        },
        limits);
    return total;
}

Nat count_set_partitions(std::size_t n, std::size_t k, std::size_t r, Limits limits) {
    check_limit(n, limits, "count_set_partitions");
    if (r > n) return 0;
    Nat total = 0;
    enumerate_set_partitions(
        n,
        [&](const std::vector<std::size_t>& rgs) {
            const std::size_t b = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
            if (b != k) return;
            // restricted growth forces distinct leading blocks to be 0, 1, 2, ...
            for (std::size_t i = 0; i < r && i < n; ++i) {
                if (rgs[i] != i) return;
            }
            ++total;
        },
        limits);
    return total;
}

Nat count_list_partitions(std::size_t n, std::size_t k, std::size_t r, Limits limits) {
    check_limit(n, limits, "count_list_partitions");
    if (r > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    if (k == 0 || k > n) return 0;
    Nat total = 0;
    std::vector<std::size_t> w(n);
    std::iota(w.begin(), w.end(), std::size_t{1});
    do {
        // cut after position i (0-based) when bit i is set; n-1 possible gaps
        for (std::size_t cuts = 0; cuts < (std::size_t{1} << (n - 1)); ++cuts) {
            if (static_cast<std::size_t>(std::popcount(cuts)) != k - 1) continue;
            std::size_t prev_min = 0;
            std::size_t seg_min = w[0];
            std::size_t seg_pinned = w[0] <= r ? 1 : 0;
            bool ok = true;
            for (std::size_t i = 1; i <= n && ok; ++i) {
                const bool boundary = i == n || (cuts >> (i - 1) & 1U);
                if (boundary) {
                    if (seg_min <= prev_min || seg_pinned > 1) ok = false;
                    prev_min = seg_min;
                    if (i < n) {
                        seg_min = w[i];
                        seg_pinned = w[i] <= r ? 1 : 0;
                    }
                } else {
                    seg_min = std::min(seg_min, w[i]);
                    if (w[i] <= r) ++seg_pinned;
                }
            }
            if (ok) ++total;
        }
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
}

}  // namespace mixstir::oracle
