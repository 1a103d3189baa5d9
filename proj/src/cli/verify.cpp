#include "mixstir/bellpoly.hpp"
#include "mixstir/cli.hpp"
#include "mixstir/colourperm.hpp"
#include "mixstir/egfseries.hpp"
#include "mixstir/oracle.hpp"
#include "mixstir/restricted.hpp"
#include "mixstir/rstirling.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace mixstir::cli {

namespace {

using Field = std::pair<const char*, std::size_t>;

std::string at(std::initializer_list<Field> fields, const std::string& extra = {}) {
    std::string s = "(";
    bool first = true;
    for (const auto& [name, v] : fields) {
        if (!first) s += ",";
        first = false;
        s += name;
        s += "=";
        s += std::to_string(v);
    }
    if (!extra.empty()) s += "," + extra;
    return s + ")";
}

/// Accumulates one identity: every call to equal() is one checked tuple.
class Check {
  public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    template <typename L, typename R>
    void equal(const std::string& where, L&& lhs, R&& rhs) {
        ++result_.checked;
        std::string detail;
        try {
            const Nat a = lhs();
            const Nat b = rhs();
            if (a == b) return;
            detail = to_string(a) + " != " + to_string(b);
        } catch (const std::exception& e) {
            detail = std::string("threw: ") + e.what();
        }
        if (result_.failed++ == 0) result_.counterexample = where + ": " + detail;
    }

    IdentityResult result() && { return std::move(result_); }

  private:
    IdentityResult result_;
};

using Sweep = std::function<IdentityResult(std::size_t)>;

// n <= N, k >= 1, t >= 0, t + k - 1 <= n
template <typename F>
void for_mixed(std::size_t N, F&& f) {
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t k = 1; k <= n + 1; ++k) {
            for (std::size_t t = 0; t + k <= n + 1; ++t) f(n, k, t);
        }
    }
}

template <typename F>
void for_profiles(std::size_t n, F&& f) {
    for (std::size_t colours = 1; colours <= 3; ++colours) {
        std::vector<std::size_t> ts(colours, 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
            if (i == colours) {
                f(ColourProfile(ts));
                return;
            }
            for (std::size_t v = 0; v <= left; ++v) {
                ts[i] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, n);
    }
}

std::string profile_text(const ColourProfile& p) {
    std::string s = "profile=(";
    for (std::size_t i = 0; i < p.multiplicities.size(); ++i) {
        if (i > 0) s += " ";
        s += std::to_string(p.multiplicities[i]);
    }
    return s + ")";
}

const std::vector<SizeSet>& size_set_menu() {
    static const std::vector<SizeSet> menu = [] {
        std::vector<SizeSet> m;
        for (const char* s : {"all", "evens", "odds", "<=2", "<=3", ">=2", ">=3", "{1,3}"}) {
            m.push_back(SizeSet::parse(s));
        }
        return m;
    }();
    return menu;
}

std::string set_text(const SizeSet& S) { return "S=" + S.to_string(); }

const std::vector<WeightSequence>& weight_menu() {
    static const std::vector<WeightSequence> menu{WeightSequence::ones(), WeightSequence::fact_shift(),
                                                  WeightSequence::fact(),
                                                  WeightSequence::characteristic_weighted(SizeSet::evens())};
    return menu;
}

// Triangle seeded with a single 1 at (r, r), grown by
// T(m,k) = T(m-1,k-1) + mult(m,k) T(m-1,k).
Nat pinned_triangle(std::size_t n, std::size_t k, std::size_t r,
                    const std::function<std::size_t(std::size_t, std::size_t)>& mult) {
    if (n < r || k < r || k > n) return 0;
    std::vector<Nat> row(n + 1, 0);
    row[r] = 1;
    for (std::size_t m = r + 1; m <= n; ++m) {
        std::vector<Nat> next(n + 1, 0);
        for (std::size_t j = r; j <= m; ++j) {
            if (j > r) next[j] += row[j - 1];
            next[j] += row[j] * static_cast<unsigned long>(mult(m, j));
        }
        row = std::move(next);
    }
    return row[k];
}

Nat stirling2_r(std::size_t n, std::size_t k, std::size_t r) {
    return pinned_triangle(n, k, r, [](std::size_t, std::size_t j) { return j; });
}

Nat lah_r(std::size_t n, std::size_t k, std::size_t r) {
    return pinned_triangle(n, k, r, [](std::size_t m, std::size_t j) { return m - 1 + j; });
}

// Corrected identities

IdentityResult mixed_path(const char* name, std::size_t N, Nat (*path)(std::size_t, std::size_t, std::size_t),
                          std::size_t min_k, std::size_t min_t, std::size_t min_n) {
    Check c(name);
    for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
        if (k < min_k || t < min_t || n < min_n) return;
        c.equal(at({{"n", n}, {"k", k}, {"t", t}}), [&] { return path(n, k, t); },
                [&] { return mixed_closed(n, k, t); });
    });
    return std::move(c).result();
}

template <typename F>
IdentityResult leader_k(const char* name, std::size_t N, F&& sum) {
    Check c(name);
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t t = 0; t + k <= n; ++t) {
                if (t + k == 0) continue;
                c.equal(at({{"n", n}, {"k", k}, {"t", t}}), [&] { return sum(n, k, t); },
                        [&] { return mixed_closed(n, k + 1, t); });
            }
        }
    }
    return std::move(c).result();
}

template <typename F>
IdentityResult leader_t(const char* name, std::size_t N, F&& sum) {
    Check c(name);
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t t = 0; t + k <= n; ++t) {
                c.equal(at({{"n", n}, {"k", k}, {"t", t}}), [&] { return sum(n, k, t); },
                        [&] { return mixed_closed(n, k, t + 1); });
            }
        }
    }
    return std::move(c).result();
}

template <typename F>
IdentityResult profile_sweep(const char* name, std::size_t N, F&& lhs) {
    Check c(name);
    for (std::size_t n = 0; n <= N; ++n) {
        for_profiles(n, [&](const ColourProfile& p) {
            c.equal(at({{"n", n}}, profile_text(p)), [&] { return lhs(n, p); },
                    [&] { return coloured_count(n, p); });
        });
    }
    return std::move(c).result();
}

template <typename F>
IdentityResult restricted_sweep(const char* name, std::size_t N, F&& lhs, std::size_t min_k = 1,
                                std::size_t min_t = 0) {
    Check c(name);
    for (const auto& S : size_set_menu()) {
        for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
            if (k < min_k || t < min_t) return;
            c.equal(at({{"n", n}, {"k", k}, {"t", t}}, set_text(S)), [&] { return lhs(n, k, t, S); },
                    [&] { return mixed_S(n, k, t, S); });
        });
    }
    return std::move(c).result();
}

template <typename F>
IdentityResult rsf_sweep(const char* name, std::size_t N, F&& conv) {
    Check c(name);
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t r = 1; r <= std::min<std::size_t>(3, k); ++r) {
                c.equal(at({{"n", n}, {"k", k}, {"r", r}}), [&] { return conv(n, k, r); },
                        [&] { return stirling1_r(n, k, r); });
            }
        }
    }
    return std::move(c).result();
}

template <typename F>
IdentityResult rmixed_sweep(const char* name, std::size_t N, F&& sum) {
    Check c(name);
    for (std::size_t r = 0; r <= 3; ++r) {
        for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
            c.equal(at({{"n", n}, {"k", k}, {"t", t}, {"r", r}}), [&] { return sum(n, k, t, r); },
                    [&] { return mixed_r_closed(n, k, t, r); });
        });
    }
    return std::move(c).result();
}

template <typename F>
IdentityResult triangle_sweep(const char* name, std::size_t N, F&& lhs, Nat (*rhs)(std::size_t, std::size_t)) {
    Check c(name);
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            c.equal(at({{"n", n}, {"k", k}}), [&] { return lhs(n, k); }, [&] { return rhs(n, k); });
        }
    }
    return std::move(c).result();
}

template <typename F>
IdentityResult bell_r_sweep(const char* name, std::size_t N, const WeightSequence& w, F&& reference) {
    Check c(name);
    for (std::size_t r = 0; r <= 3; ++r) {
        for (std::size_t n = 0; n + r <= N; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                c.equal(at({{"n", n}, {"k", k}, {"r", r}}), [&] { return bell_r_partial(n, k, r, w, w); },
                        [&] { return reference(n + r, k + r, r); });
            }
        }
    }
    return std::move(c).result();
}

IdentityResult corollary(const char* name, std::size_t N,
                         const std::function<void(Check&, std::size_t)>& body) {
    Check c(name);
    for (std::size_t n = 1; n <= N; ++n) body(c, n);
    return std::move(c).result();
}

Nat derangement_expansion(std::size_t n, std::size_t k, std::size_t t) {
    Nat sum = 0;
    for (std::size_t i = 0; i <= t && i <= n; ++i) {
        for (std::size_t j = 0; j + 1 <= k && i + j <= n; ++j) {
            const std::size_t parts[] = {i, j, n - i - j};
            sum += multinomial(n, parts) * falling(k - 1, j) * mixed_derangement(n - i - j, k - j, t - i);
        }
    }
    return sum;
}

const std::vector<std::pair<std::string, Sweep>>& default_registry() {
    static const std::vector<std::pair<std::string, Sweep>> reg{
        {"closed2", [](std::size_t N) { return mixed_path("closed2", N, mixed_conv, 1, 0, 0); }},
        {"recur1", [](std::size_t N) { return mixed_path("recur1", N, mixed_rec_cyclesize, 1, 0, 1); }},
        {"recur2", [](std::size_t N) { return mixed_path("recur2", N, mixed_rec_insert, 1, 0, 0); }},
        {"recur3", [](std::size_t N) { return mixed_path("recur3", N, mixed_rec_marknonspecial, 2, 0, 0); }},
        {"recur4", [](std::size_t N) { return mixed_path("recur4", N, mixed_rec_markspecial, 1, 1, 0); }},
        {"leader-k-corrected",
         [](std::size_t N) {
             return leader_k("leader-k-corrected", N,
                             [](auto n, auto k, auto t) { return mixed_leader_sum_k(n, k, t); });
         }},
        {"leader-t-corrected",
         [](std::size_t N) {
             return leader_t("leader-t-corrected", N,
                             [](auto n, auto k, auto t) { return mixed_leader_sum_t(n, k, t); });
         }},
        {"genfun", [](std::size_t N) { return mixed_path("genfun", N, egf_mixed, 1, 0, 0); }},
        {"genform-mixed",
         [](std::size_t N) {
             Check c("genform-mixed");
             for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
                 c.equal(at({{"n", n}, {"k", k}, {"t", t}}),
                         [&] { return coloured_count(n, ColourProfile::mixed(k, t)); },
                         [&] { return mixed_closed(n, k, t); });
             });
             return std::move(c).result();
         }},
        {"genform-recurrence",
         [](std::size_t N) {
             return profile_sweep("genform-recurrence", N,
                                  [](std::size_t n, const ColourProfile& p) { return coloured_count_rec(n, p); });
         }},
        {"inclusion-exclusion-moebius",
         [](std::size_t N) {
             return profile_sweep("inclusion-exclusion-moebius", N, [](std::size_t n, const ColourProfile& p) {
                 return coloured_from_atmost(n, p);
             });
         }},
        {"OCrec",
         [](std::size_t N) {
             Check c("OCrec");
             for (std::size_t n = 0; n <= N; ++n) {
                 for (std::size_t k = 0; k <= n; ++k) {
                     const auto where = at({{"n", n}, {"k", k}});
                     c.equal(where, [&] { return distinct_coloured_rec(n, k); },
                             [&] { return distinct_coloured(n, k); });
                     if (k >= 1) {
                         c.equal(where, [&] { return distinct_coloured(n, k); },
                                 [&] { return mixed_closed(n, k, 1); });
                     }
                 }
             }
             return std::move(c).result();
         }},
        {"corollary-i",
         [](std::size_t N) {
             return corollary("corollary-i", N, [](Check& c, std::size_t n) {
                 for (std::size_t k = 2; k <= n; ++k) {
                     c.equal(at({{"n", n}, {"k", k}}), [&] { return mixed_closed(n, k, 0); },
                             [&] { return mixed_closed(n, k - 1, 1); });
                 }
             });
         }},
        {"corollary-ii",
         [](std::size_t N) {
             return corollary("corollary-ii", N, [](Check& c, std::size_t n) {
                 for (std::size_t t = 1; t <= n; ++t) {
                     c.equal(at({{"n", n}, {"t", t}}), [&] { return mixed_closed(n, 1, t); },
                             [&] { return stirling1(n, t); });
                 }
             });
         }},
        {"corollary-iii",
         [](std::size_t N) {
             return corollary("corollary-iii", N, [](Check& c, std::size_t n) {
                 c.equal(at({{"n", n}}), [&] { return mixed_closed(n, 1, n - 1); }, [&] { return binomial(n, 2); });
                 c.equal(at({{"n", n}}), [&] { return binomial(n, 2); }, [&] { return stirling1(n, n - 1); });
             });
         }},
        {"corollary-iv",
         [](std::size_t N) {
             return corollary("corollary-iv", N, [](Check& c, std::size_t n) {
                 c.equal(at({{"n", n}}), [&] { return mixed_closed(n, 2, n - 1); }, [&] { return Nat(n); });
             });
         }},
        {"corollary-v",
         [](std::size_t N) {
             return corollary("corollary-v", N, [](Check& c, std::size_t n) {
                 for (std::size_t t = 1; t <= n; ++t) {
                     c.equal(at({{"n", n}, {"t", t}}), [&] { return mixed_closed(n, n - t + 1, t); },
                             [&] { return exact_div(factorial(n), factorial(t), "corollary-v"); });
                 }
             });
         }},
        {"A006252",
         [](std::size_t N) {
             return corollary("A006252", N, [](Check& c, std::size_t n) {
                 c.equal(at({{"n", n}}), [&] { return distinct_coloured_total(n); },
                         [&] { return egf_distinct_total(n); });
             });
         }},
        {"genfunS",
         [](std::size_t N) {
             return restricted_sweep("genfunS", N, [](auto n, auto k, auto t, const SizeSet& S) {
                 return egf_mixed_S(n, k, t, S);
             });
         }},
        {"genfunS-stirling",
         [](std::size_t N) {
             Check c("genfunS-stirling");
             for (const auto& S : size_set_menu()) {
                 for (std::size_t n = 0; n <= N; ++n) {
                     for (std::size_t k = 0; k <= n; ++k) {
                         c.equal(at({{"n", n}, {"k", k}}, set_text(S)), [&] { return egf_stirling1_S(n, k, S); },
                                 [&] { return stirling1_S(n, k, S); });
                     }
                 }
             }
             return std::move(c).result();
         }},
        {"restricted-all",
         [](std::size_t N) {
             Check c("restricted-all");
             for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
                 c.equal(at({{"n", n}, {"k", k}, {"t", t}}), [&] { return mixed_S(n, k, t, SizeSet::all()); },
                         [&] { return mixed_closed(n, k, t); });
             });
             return std::move(c).result();
         }},
        {"restricted-conv",
         [](std::size_t N) {
             return restricted_sweep("restricted-conv", N, [](auto n, auto k, auto t, const SizeSet& S) {
                 return mixed_S_conv(n, k, t, S);
             });
         }},
        {"restricted-marknonspecial",
         [](std::size_t N) {
             return restricted_sweep(
                 "restricted-marknonspecial", N,
                 [](auto n, auto k, auto t, const SizeSet& S) { return mixed_S_marknonspecial(n, k, t, S); }, 2);
         }},
        {"restricted-markspecial",
         [](std::size_t N) {
             return restricted_sweep(
                 "restricted-markspecial", N,
                 [](auto n, auto k, auto t, const SizeSet& S) { return mixed_S_markspecial(n, k, t, S); }, 1, 1);
         }},
        {"restricted-cyclesize",
         [](std::size_t N) {
             return restricted_sweep("restricted-cyclesize", N, [](auto n, auto k, auto t, const SizeSet& S) {
                 return mixed_S_cyclesize(n, k, t, S);
             });
         }},
        {"fixed-points",
         [](std::size_t N) {
             Check c("fixed-points");
             for (const auto& S : size_set_menu()) {
                 if (!S.contains(1)) continue;
                 for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
                     c.equal(at({{"n", n}, {"k", k}, {"t", t}}, set_text(S)),
                             [&] { return extract_fixed_points(n, k, t, S); }, [&] { return mixed_S(n, k, t, S); });
                 });
             }
             return std::move(c).result();
         }},
        {"u-cycles",
         [](std::size_t N) {
             Check c("u-cycles");
             for (const auto& S : size_set_menu()) {
                 for (std::size_t u = 1; u <= 3; ++u) {
                     if (!S.contains(u)) continue;
                     for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
                         c.equal(at({{"n", n}, {"k", k}, {"t", t}, {"u", u}}, set_text(S)),
                                 [&] { return extract_u_cycles(n, k, t, u, S); },
                                 [&] { return mixed_S(n, k, t, S); });
                     });
                 }
             }
             return std::move(c).result();
         }},
        {"derangement-corollary",
         [](std::size_t N) {
             Check c("derangement-corollary");
             for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
                 c.equal(at({{"n", n}, {"k", k}, {"t", t}}), [&] { return derangement_expansion(n, k, t); },
                         [&] { return mixed_closed(n, k, t); });
             });
             return std::move(c).result();
         }},
        {"rsf-corrected",
         [](std::size_t N) {
             return rsf_sweep("rsf-corrected", N, [](auto n, auto k, auto r) { return stirling1_r_conv_front(n, k, r); });
         }},
        {"rsf-symmetric-corrected",
         [](std::size_t N) {
             return rsf_sweep("rsf-symmetric-corrected", N,
                              [](auto n, auto k, auto r) { return stirling1_r_conv_back(n, k, r); });
         }},
        {"rmixed-doublesum",
         [](std::size_t N) {
             return rmixed_sweep("rmixed-doublesum", N,
                                 [](auto n, auto k, auto t, auto r) { return mixed_r_doublesum(n, k, t, r); });
         }},
        {"bell-stirling2",
         [](std::size_t N) {
             return triangle_sweep(
                 "bell-stirling2", N, [](auto n, auto k) { return bell_partial(n, k, WeightSequence::ones()); },
                 stirling2);
         }},
        {"bell-stirling1",
         [](std::size_t N) {
             return triangle_sweep(
                 "bell-stirling1", N, [](auto n, auto k) { return bell_partial(n, k, WeightSequence::fact_shift()); },
                 stirling1);
         }},
        {"bell-lah",
         [](std::size_t N) {
             return triangle_sweep(
                 "bell-lah", N, [](auto n, auto k) { return bell_partial(n, k, WeightSequence::fact()); }, lah);
         }},
        {"bellstar-mixed",
         [](std::size_t N) {
             Check c("bellstar-mixed");
             const auto w = WeightSequence::fact_shift();
             for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
                 c.equal(at({{"n", n}, {"k", k}, {"t", t}}), [&] { return bellstar(n, k, t, w, w); },
                         [&] { return mixed_closed(n, k, t); });
             });
             return std::move(c).result();
         }},
        {"bellstar-S",
         [](std::size_t N) {
             return restricted_sweep("bellstar-S", N, [](auto n, auto k, auto t, const SizeSet& S) {
                 const auto w = WeightSequence::characteristic_weighted(S);
                 return bellstar(n, k, t, w, w);
             });
         }},
        {"bell1",
         [](std::size_t N) {
             Check c("bell1");
             for (const auto& w : weight_menu()) {
                 for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
                     c.equal(at({{"n", n}, {"k", k}, {"t", t}}, "a=" + w.to_string()),
                             [&] { return bellstar_composition(n, k, t, w); },
                             [&] { return bellstar(n, k, t, w, w); });
                 });
             }
             return std::move(c).result();
         }},
        {"bell3",
         [](std::size_t N) {
             Check c("bell3");
             for (const auto& w : weight_menu()) {
                 for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
                     c.equal(at({{"n", n}, {"k", k}, {"t", t}}, "a=" + w.to_string()),
                             [&] { return egf_bellstar(n, k, t, w); }, [&] { return bellstar(n, k, t, w, w); });
                 });
             }
             return std::move(c).result();
         }},
        {"bell-r-zero",
         [](std::size_t N) {
             Check c("bell-r-zero");
             for (const auto& w : weight_menu()) {
                 for (std::size_t n = 0; n <= N; ++n) {
                     for (std::size_t k = 0; k <= n; ++k) {
                         c.equal(at({{"n", n}, {"k", k}}, "x=" + w.to_string()),
                                 [&] { return bell_r_partial(n, k, 0, w, w); }, [&] { return bell_partial(n, k, w); });
                     }
                 }
             }
             return std::move(c).result();
         }},
        {"bell-r-stirling2",
         [](std::size_t N) { return bell_r_sweep("bell-r-stirling2", N, WeightSequence::ones(), stirling2_r); }},
        {"bell-r-stirling1",
         [](std::size_t N) {
             return bell_r_sweep("bell-r-stirling1", N, WeightSequence::fact_shift(),
                                 [](auto n, auto k, auto r) { return stirling1_r(n, k, r); });
         }},
        {"bell-r-lah", [](std::size_t N) { return bell_r_sweep("bell-r-lah", N, WeightSequence::fact(), lah_r); }},
    };
    return reg;
}

const std::vector<std::pair<std::string, Sweep>>& literal_registry() {
    static const std::vector<std::pair<std::string, Sweep>> reg{
        {"paper-literal-rsf",
         [](std::size_t N) {
             return rsf_sweep("paper-literal-rsf", N,
                              [](auto n, auto k, auto r) { return literal::stirling1_r_conv_front(n, k, r); });
         }},
        {"paper-literal-rsf-symmetric",
         [](std::size_t N) {
             return rsf_sweep("paper-literal-rsf-symmetric", N,
                              [](auto n, auto k, auto r) { return literal::stirling1_r_conv_back(n, k, r); });
         }},
        {"paper-literal-leader-k",
         [](std::size_t N) {
             return leader_k("paper-literal-leader-k", N,
                             [](auto n, auto k, auto t) { return literal::mixed_leader_sum_k(n, k, t); });
         }},
        {"paper-literal-leader-t",
         [](std::size_t N) {
             return leader_t("paper-literal-leader-t", N,
                             [](auto n, auto k, auto t) { return literal::mixed_leader_sum_t(n, k, t); });
         }},
        {"paper-literal-inclusion-exclusion",
         [](std::size_t N) {
             return profile_sweep("paper-literal-inclusion-exclusion", N, [](std::size_t n, const ColourProfile& p) {
                 return literal::coloured_inclusion_exclusion(n, p);
             });
         }},
        {"paper-literal-rmixed-doublesum",
         [](std::size_t N) {
             return rmixed_sweep("paper-literal-rmixed-doublesum", N, [](auto n, auto k, auto t, auto r) {
                 return literal::mixed_r_doublesum(n, k, t, r);
             });
         }},
    };
    return reg;
}

std::vector<IdentityResult> run_parallel(const std::vector<Sweep>& sweeps, std::size_t n_max) {
    std::vector<std::future<IdentityResult>> pending;
    pending.reserve(sweeps.size());
    for (const auto& s : sweeps) pending.push_back(std::async(std::launch::async, s, n_max));
    std::vector<IdentityResult> out;
    out.reserve(pending.size());
    for (auto& f : pending) out.push_back(f.get());
    return out;
}

// Oracle families

oracle::Limits limits_for(std::size_t limit) { return oracle::Limits{limit}; }

std::vector<IdentityResult> oracle_classic(std::size_t N, std::size_t limit) {
    const auto lim = limits_for(limit);
    Check c1("oracle-stirling1"), c2("oracle-stirling2"), cl("oracle-lah");
    for (std::size_t n = 0; n <= N; ++n) {
        std::vector<Nat> hist(n + 1, 0);
        oracle::enumerate_permutations(n, [&](const oracle::CycleDecomposition& d) { ++hist[d.cycles.size()]; }, lim);
        for (std::size_t k = 0; k <= n; ++k) {
            const auto where = at({{"n", n}, {"k", k}});
            c1.equal(where, [&] { return hist[k]; }, [&] { return stirling1(n, k); });
            c2.equal(where, [&] { return oracle::count_set_partitions(n, k, 0, lim); },
                     [&] { return stirling2(n, k); });
            cl.equal(where, [&] { return oracle::count_list_partitions(n, k, 0, lim); }, [&] { return lah(n, k); });
        }
    }
    return {std::move(c1).result(), std::move(c2).result(), std::move(cl).result()};
}

std::vector<IdentityResult> oracle_general(std::size_t N, std::size_t limit) {
    const auto lim = limits_for(limit);
    Check conv("oracle-genform"), rec("oracle-genform-recurrence"), moebius("oracle-inclusion-exclusion-moebius");
    for (std::size_t n = 0; n <= N; ++n) {
        for_profiles(n, [&](const ColourProfile& p) {
            const Nat truth = oracle::count_coloured(n, p, SizeSet::all(), 0, WeightSequence::ones(), lim);
            const auto where = at({{"n", n}}, profile_text(p));
            conv.equal(where, [&] { return coloured_count(n, p); }, [&] { return truth; });
            rec.equal(where, [&] { return coloured_count_rec(n, p); }, [&] { return truth; });
            moebius.equal(where, [&] { return coloured_from_atmost(n, p); }, [&] { return truth; });
        });
    }
    return {std::move(conv).result(), std::move(rec).result(), std::move(moebius).result()};
}

std::vector<IdentityResult> oracle_mixed(std::size_t N, std::size_t limit) {
    const auto lim = limits_for(limit);
    std::vector<std::pair<std::string, Nat (*)(std::size_t, std::size_t, std::size_t)>> paths{
        {"closed1", mixed_closed}, {"closed2", mixed_conv},         {"recur1", mixed_rec_cyclesize},
        {"recur2", mixed_rec_insert}, {"recur3", mixed_rec_marknonspecial}, {"recur4", mixed_rec_markspecial},
        {"genfun", egf_mixed}};
    std::vector<Check> checks;
    for (const auto& [name, _] : paths) checks.emplace_back("oracle-" + name);
    Check lk("oracle-leader-k-corrected"), lt("oracle-leader-t-corrected");
    for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
        const Nat truth = oracle::count_coloured(n, ColourProfile::mixed(k, t), SizeSet::all(), 0,
                                                 WeightSequence::ones(), lim);
        const auto where = at({{"n", n}, {"k", k}, {"t", t}});
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const auto& name = paths[i].first;
            if (name == "recur1" && n == 0) continue;
            if (name == "recur3" && k < 2) continue;
            if (name == "recur4" && t < 1) continue;
            checks[i].equal(where, [&] { return paths[i].second(n, k, t); }, [&] { return truth; });
        }
        if (n >= 1 && k >= 2) {
            lk.equal(where, [&] { return mixed_leader_sum_k(n, k - 1, t); }, [&] { return truth; });
        }
        if (n >= 1 && t >= 1) {
            lt.equal(where, [&] { return mixed_leader_sum_t(n, k, t - 1); }, [&] { return truth; });
        }
    });
    std::vector<IdentityResult> out;
    for (auto& c : checks) out.push_back(std::move(c).result());
    out.push_back(std::move(lk).result());
    out.push_back(std::move(lt).result());
    return out;
}

std::vector<IdentityResult> oracle_restricted(std::size_t N, std::size_t limit) {
    const auto lim = limits_for(limit);
    Check mixed("oracle-restricted-mixed"), stir("oracle-restricted-stirling1");
    for (const auto& S : size_set_menu()) {
        for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
            mixed.equal(at({{"n", n}, {"k", k}, {"t", t}}, set_text(S)), [&] { return mixed_S(n, k, t, S); },
                        [&] {
                            return oracle::count_coloured(n, ColourProfile::mixed(k, t), S, 0,
                                                          WeightSequence::ones(), lim);
                        });
        });
        for (std::size_t n = 0; n <= N; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                stir.equal(at({{"n", n}, {"k", k}}, set_text(S)), [&] { return stirling1_S(n, k, S); },
                           [&] { return oracle::count_coloured(n, {k}, S, 0, WeightSequence::ones(), lim); });
            }
        }
    }
    return {std::move(mixed).result(), std::move(stir).result()};
}

std::vector<IdentityResult> oracle_rmixed(std::size_t N, std::size_t limit) {
    const auto lim = limits_for(limit);
    Check ref("oracle-rstirling"), front("oracle-rsf-corrected"), back("oracle-rsf-symmetric-corrected"),
        closed("oracle-rmixed-closed"), dsum("oracle-rmixed-doublesum");
    for (std::size_t r = 0; r <= 3; ++r) {
        for (std::size_t n = 0; n <= N; ++n) {
            for (std::size_t k = std::max<std::size_t>(r, 1); k <= n; ++k) {
                const Nat truth = oracle::count_coloured(n, {k}, SizeSet::all(), r, WeightSequence::ones(), lim);
                const auto where = at({{"n", n}, {"k", k}, {"r", r}});
                ref.equal(where, [&] { return stirling1_r(n, k, r); }, [&] { return truth; });
                front.equal(where, [&] { return stirling1_r_conv_front(n, k, r); }, [&] { return truth; });
                back.equal(where, [&] { return stirling1_r_conv_back(n, k, r); }, [&] { return truth; });
            }
        }
        for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
            const Nat truth =
                oracle::count_coloured(n, ColourProfile::mixed(k, t), SizeSet::all(), r, WeightSequence::ones(), lim);
            const auto where = at({{"n", n}, {"k", k}, {"t", t}, {"r", r}});
            closed.equal(where, [&] { return mixed_r_closed(n, k, t, r); }, [&] { return truth; });
            dsum.equal(where, [&] { return mixed_r_doublesum(n, k, t, r); }, [&] { return truth; });
        });
    }
    return {std::move(ref).result(), std::move(front).result(), std::move(back).result(),
            std::move(closed).result(), std::move(dsum).result()};
}

std::vector<IdentityResult> oracle_bellstar(std::size_t N, std::size_t limit) {
    const auto lim = limits_for(limit);
    Check partitions("oracle-bellstar-partitions"), bridge("oracle-bellstar-coloured-cycles"),
        rbell("oracle-bell-r");
    for (const auto& w : {WeightSequence::ones(), WeightSequence::fact_shift(), WeightSequence::fact()}) {
        for_mixed(N, [&](std::size_t n, std::size_t k, std::size_t t) {
            partitions.equal(at({{"n", n}, {"k", k}, {"t", t}}, "labels=" + w.to_string()),
                             [&] { return bellstar(n, k, t, w, w); },
                             [&] { return oracle::count_mixed_partitions(n, k, t, w, lim); });
        });
    }
    // blocks of size i become i-cycles carrying one of a_i labels
    const std::size_t bridge_n = std::min<std::size_t>(N, 6);
    for (const char* a_text : {"1,2,1,2,1,2", "2,1,2,1,2,1", "2,2,2,2,2,2", "1,1,2,2,1,1"}) {
        const auto a = WeightSequence::parse(a_text);
        std::vector<Nat> xs;
        for (std::size_t i = 1; i <= 6; ++i) xs.push_back(factorial(i - 1) * a(i));
        const auto x = WeightSequence::explicit_values(xs);
        for_mixed(bridge_n, [&](std::size_t n, std::size_t k, std::size_t t) {
            bridge.equal(at({{"n", n}, {"k", k}, {"t", t}}, std::string("a=") + a_text),
                         [&] { return bellstar(n, k, t, x, x); },
                         [&] { return oracle::count_coloured(n, ColourProfile::mixed(k, t), SizeSet::all(), 0, a, lim); });
        });
    }
    for (std::size_t r = 0; r <= 3; ++r) {
        for (std::size_t n = 0; n + r <= N; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                const auto where = at({{"n", n}, {"k", k}, {"r", r}});
                const auto ones = WeightSequence::ones(), shift = WeightSequence::fact_shift(),
                           fact = WeightSequence::fact();
                rbell.equal(where + " ones", [&] { return bell_r_partial(n, k, r, ones, ones); },
                            [&] { return oracle::count_set_partitions(n + r, k + r, r, lim); });
                rbell.equal(where + " factshift", [&] { return bell_r_partial(n, k, r, shift, shift); },
                            [&] {
                                return oracle::count_coloured(n + r, {k + r}, SizeSet::all(), r,
                                                              WeightSequence::ones(), lim);
                            });
                rbell.equal(where + " fact", [&] { return bell_r_partial(n, k, r, fact, fact); },
                            [&] { return oracle::count_list_partitions(n + r, k + r, r, lim); });
            }
        }
    }
    return {std::move(partitions).result(), std::move(bridge).result(), std::move(rbell).result()};
}

using FamilyFn = std::vector<IdentityResult> (*)(std::size_t, std::size_t);

const std::vector<std::pair<std::string, FamilyFn>>& family_registry() {
    static const std::vector<std::pair<std::string, FamilyFn>> reg{
        {"classic", oracle_classic}, {"general", oracle_general}, {"mixed", oracle_mixed},
        {"restricted", oracle_restricted}, {"rmixed", oracle_rmixed}, {"bellstar", oracle_bellstar},
    };
    return reg;
}

}  // namespace

std::vector<std::string> default_identities() {
    std::vector<std::string> out;
    for (const auto& [name, _] : default_registry()) out.push_back(name);
    return out;
}

std::vector<std::string> literal_identities() {
    std::vector<std::string> out;
    for (const auto& [name, _] : literal_registry()) out.push_back(name);
    return out;
}

std::vector<IdentityResult> verify_identities(std::size_t n_max, const std::vector<std::string>& include) {
    std::set<std::string> extra;
    for (const auto& name : include) {
        if (name == "paper-literal-all") {
            for (const auto& [lit, _] : literal_registry()) extra.insert(lit);
            continue;
        }
        const auto& lits = literal_registry();
        if (std::none_of(lits.begin(), lits.end(), [&](const auto& e) { return e.first == name; })) {
            throw std::invalid_argument("unknown identity '" + name + "'");
        }
        extra.insert(name);
    }
    std::vector<Sweep> sweeps;
    for (const auto& [_, fn] : default_registry()) sweeps.push_back(fn);
    for (const auto& [name, fn] : literal_registry()) {
        if (extra.count(name) > 0) sweeps.push_back(fn);
    }
    return run_parallel(sweeps, n_max);
}

std::vector<std::string> oracle_families() {
    std::vector<std::string> out;
    for (const auto& [name, _] : family_registry()) out.push_back(name);
    return out;
}

std::vector<IdentityResult> oracle_check(std::size_t n_max, const std::string& family, std::size_t limit) {
    if (n_max > limit) {
        throw oracle::LimitExceeded("nmax = " + std::to_string(n_max) + " exceeds oracle limit " +
                                    std::to_string(limit));
    }
    std::vector<FamilyFn> selected;
    for (const auto& [name, fn] : family_registry()) {
        if (family == "all" || family == name) selected.push_back(fn);
    }
    if (selected.empty()) throw std::invalid_argument("unknown oracle family '" + family + "'");

    std::vector<std::future<std::vector<IdentityResult>>> pending;
    for (auto fn : selected) pending.push_back(std::async(std::launch::async, fn, n_max, limit));
    std::vector<IdentityResult> out;
    for (auto& f : pending) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace mixstir::cli
