#pragma once

#include "mixstir/exactmath.hpp"
#include "mixstir/mixedcore.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mixstir::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitIdentityFailure = 1,
    kExitUsage = 2,
    kExitResourceLimit = 3,
};

enum class Format { Plain, Csv, Json };

enum class Command { Value, Table, Verify, Series, OracleCheck };

/// One parsed command line.
struct QuerySpec {
    Command command = Command::Value;
    std::optional<std::size_t> n, k, t, r;
    std::optional<std::string> S;
    std::optional<std::string> weights;
    Format format = Format::Plain;
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> order;
    std::vector<std::string> include;
    std::string family = "all";
};

/// Thrown for malformed or incomplete command lines (exit code 2).
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a request exceeds a configured bound (exit code 3).
class ResourceLimit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Largest --nmax accepted by verify and --order accepted by series.
inline constexpr std::size_t kMaxVerifyN = 30;
inline constexpr std::size_t kMaxSeriesOrder = kDefaultTableLimit;

/// Parses argv-style arguments (without the program name). Returns nullopt
/// after printing help to `out`.
std::optional<QuerySpec> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Runs a full command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_value(const QuerySpec& q, std::ostream& out);
int cmd_table(const QuerySpec& q, std::ostream& out);
int cmd_verify(const QuerySpec& q, std::ostream& out);
int cmd_series(const QuerySpec& q, std::ostream& out);
int cmd_oracle_check(const QuerySpec& q, std::ostream& out);

/// Oracle size limit: MIXSTIR_ORACLE_LIMIT when set, otherwise the default.
std::size_t oracle_limit_from_env();

// Output formats.

/// Plain mode lays the triangle out like a printed table: rows n, columns
/// k = 1..k_max, left-aligned, blank cells for zeros and out-of-range cells.
std::string render_table(const std::vector<TableEntry>& entries, Format format);
std::vector<TableEntry> parse_table_csv(std::string_view text);
std::vector<TableEntry> parse_table_json(std::string_view text);

struct SeriesRow {
    std::size_t n = 0;
    Rat coefficient;
    Rat egf_value;

    friend bool operator==(const SeriesRow&, const SeriesRow&) = default;
};

std::string render_series(const std::vector<SeriesRow>& rows, Format format);
std::vector<SeriesRow> parse_series_csv(std::string_view text);
std::vector<SeriesRow> parse_series_json(std::string_view text);

// Identity sweeps.

struct IdentityResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string counterexample;  // first failing tuple, empty when none

    bool passed() const { return failed == 0; }
};

/// Identities checked by default (names follow the formula they exercise).
std::vector<std::string> default_identities();
/// Opt-in identities that evaluate the formulas exactly as printed.
std::vector<std::string> literal_identities();

std::vector<IdentityResult> verify_identities(std::size_t n_max, const std::vector<std::string>& include);

/// Families understood by oracle-check.
std::vector<std::string> oracle_families();

std::vector<IdentityResult> oracle_check(std::size_t n_max, const std::string& family, std::size_t limit);

std::string render_report(const std::vector<IdentityResult>& results, Format format);

}  // namespace mixstir::cli
