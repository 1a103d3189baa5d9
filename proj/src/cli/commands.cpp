#include "mixstir/bellpoly.hpp"
#include "mixstir/cli.hpp"
#include "mixstir/egfseries.hpp"
#include "mixstir/oracle.hpp"
#include "mixstir/restricted.hpp"
#include "mixstir/rstirling.hpp"
#include "mixstir/sizeset.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace mixstir::cli {

namespace {

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

SizeSet parse_set(const std::string& text) {
    try {
        return SizeSet::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--S: ") + e.what());
    }
}

WeightSequence parse_weights(const std::string& text) {
    try {
        return WeightSequence::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--weights: ") + e.what());
    }
}

void exclusive(bool a, bool b, const char* what) {
    if (a && b) throw UsageError(std::string(what) + " cannot be combined");
}

bool all_passed(const std::vector<IdentityResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed(); });
}

}  // namespace

std::size_t oracle_limit_from_env() {
    const char* raw = std::getenv("MIXSTIR_ORACLE_LIMIT");
    if (raw == nullptr || *raw == '\0') return oracle::kDefaultLimit;
    const std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 4) {
        throw UsageError("MIXSTIR_ORACLE_LIMIT must be a small nonnegative integer, got '" + text + "'");
    }
    return std::stoul(text);
}

int cmd_value(const QuerySpec& q, std::ostream& out) {
    const std::size_t n = require(q.n, "--n");
    const std::size_t k = require(q.k, "--k");
    const std::size_t t = require(q.t, "--t");
    exclusive(q.S.has_value(), q.r.has_value(), "--S and --r");
    exclusive(q.weights.has_value(), q.S.has_value() || q.r.has_value(), "--weights and --S/--r");

    Nat v;
    if (q.weights) {
        const auto w = parse_weights(*q.weights);
        v = bellstar(n, k, t, w, w);
    } else if (q.S) {
        v = mixed_S(n, k, t, parse_set(*q.S));
    } else if (q.r) {
        v = mixed_r_closed(n, k, t, *q.r);
    } else {
        v = mixed_closed(n, k, t);
    }
    out << to_string(v) << "\n";
    return kExitPass;
}

int cmd_table(const QuerySpec& q, std::ostream& out) {
    const std::size_t t = require(q.t, "--t");
    const std::size_t n_max = require(q.n_max, "--nmax");
    exclusive(q.S.has_value(), q.r.has_value(), "--S and --r");
    if (n_max > kDefaultTableLimit) {
        throw ResourceLimit("table: nmax = " + std::to_string(n_max) + " exceeds limit " +
                            std::to_string(kDefaultTableLimit));
    }

    std::vector<TableEntry> entries;
    if (q.S || q.r) {
        const std::optional<SizeSet> S = q.S ? std::optional(parse_set(*q.S)) : std::nullopt;
        for (std::size_t n = t; n <= n_max; ++n) {
            for (std::size_t k = 1; k + t <= n + 1; ++k) {
                entries.push_back({n, k, S ? mixed_S(n, k, t, *S) : mixed_r_closed(n, k, t, *q.r)});
            }
        }
    } else {
        entries = mixed_table(t, n_max);
    }
    out << render_table(entries, q.format);
    return kExitPass;
}

int cmd_verify(const QuerySpec& q, std::ostream& out) {
    const std::size_t n_max = require(q.n_max, "--nmax");
    if (n_max > kMaxVerifyN) {
        throw ResourceLimit("verify: nmax = " + std::to_string(n_max) + " exceeds limit " +
                            std::to_string(kMaxVerifyN));
    }
    std::vector<IdentityResult> results;
    try {
        results = verify_identities(n_max, q.include);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--include: ") + e.what());
    }
    out << render_report(results, q.format);
    return all_passed(results) ? kExitPass : kExitIdentityFailure;
}

int cmd_series(const QuerySpec& q, std::ostream& out) {
    const std::size_t k = require(q.k, "--k");
    const std::size_t t = require(q.t, "--t");
    const std::size_t order = require(q.order, "--order");
    exclusive(q.S.has_value(), q.weights.has_value(), "--S and --weights");
    if (order > kMaxSeriesOrder) {
        throw ResourceLimit("series: order = " + std::to_string(order) + " exceeds limit " +
                            std::to_string(kMaxSeriesOrder));
    }

    TruncatedSeries base = q.S         ? cyc_restricted(parse_set(*q.S), order)
                           : q.weights ? egf_of(parse_weights(*q.weights), order)
                                       : log_one_over_one_minus_x(order);
    const TruncatedSeries s = mixed_egf(base, k, t);
    std::vector<SeriesRow> rows;
    for (std::size_t n = 0; n <= order; ++n) rows.push_back({n, s[n], egf_extract(s, n)});
    out << render_series(rows, q.format);
    return kExitPass;
}

int cmd_oracle_check(const QuerySpec& q, std::ostream& out) {
    const std::size_t n_max = require(q.n_max, "--nmax");
    const auto families = oracle_families();
    if (q.family != "all" && std::find(families.begin(), families.end(), q.family) == families.end()) {
        throw UsageError("--family: unknown family '" + q.family + "'");
    }
    const auto results = oracle_check(n_max, q.family, oracle_limit_from_env());
    out << render_report(results, q.format);
    return all_passed(results) ? kExitPass : kExitIdentityFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const auto q = parse_args(args, out);
        if (!q) return kExitPass;
        switch (q->command) {
            case Command::Value: return cmd_value(*q, out);
            case Command::Table: return cmd_table(*q, out);
            case Command::Verify: return cmd_verify(*q, out);
            case Command::Series: return cmd_series(*q, out);
            case Command::OracleCheck: return cmd_oracle_check(*q, out);
        }
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimit& e) {
        err << "error: resource-limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const oracle::LimitExceeded& e) {
        err << "error: resource-limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const IdentityViolation& e) {
        err << "error: identity-violation: " << e.what() << "\n";
        return kExitIdentityFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid-argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: invalid-argument: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mixstir::cli
