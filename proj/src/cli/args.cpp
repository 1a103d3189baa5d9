#include "mixstir/cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>

namespace mixstir::cli {

namespace {

const std::map<std::string, Format> kFormats{
    {"plain", Format::Plain},
    {"csv", Format::Csv},
    {"json", Format::Json},
};

struct Raw {
    std::size_t n = 0, k = 0, t = 0, r = 0, n_max = 0, order = 0;
    std::string S, weights, format, family = "all";
    std::vector<std::string> include;
};

}  // namespace

std::optional<QuerySpec> parse_args(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Mixed Stirling numbers of the first kind: values, tables, EGF dumps and identity sweeps",
                 "mixstir"};
    app.require_subcommand(1);
    Raw raw;

    auto add_index = [&raw](CLI::App* sub) {
        sub->add_option("--n", raw.n, "ground set size");
        sub->add_option("--k", raw.k, "number of colours (>= 1)");
        sub->add_option("--t", raw.t, "cycles in the special colour");
    };
    auto add_format = [&raw](CLI::App* sub) {
        sub->add_option("--format", raw.format, "plain, csv or json")
            ->check(CLI::IsMember({"plain", "csv", "json"}));
    };

    auto* value = app.add_subcommand("value", "print one count via the reference path");
    add_index(value);
    value->add_option("--r", raw.r, "pin 1..r into distinct cycles");
    value->add_option("--S", raw.S, "allowed cycle lengths, e.g. evens, <=3, {1,3}");
    value->add_option("--weights", raw.weights, "evaluate B* with this weight sequence");

    auto* table = app.add_subcommand("table", "print the [n][k/t] triangle for fixed t");
    table->add_option("--t", raw.t, "cycles in the special colour");
    table->add_option("--nmax", raw.n_max, "largest n");
    table->add_option("--r", raw.r, "pin 1..r into distinct cycles");
    table->add_option("--S", raw.S, "allowed cycle lengths");
    add_format(table);

    auto* verify = app.add_subcommand("verify", "sweep every identity up to --nmax");
    verify->add_option("--nmax", raw.n_max, "largest n");
    verify->add_option("--include", raw.include, "opt-in identities (paper-literal-*)")->delimiter(',');
    add_format(verify);

    auto* series = app.add_subcommand("series", "dump the exponential generating function prefix");
    series->add_option("--k", raw.k, "number of colours (>= 1)");
    series->add_option("--t", raw.t, "cycles in the special colour");
    series->add_option("--order", raw.order, "truncation order");
    series->add_option("--S", raw.S, "allowed cycle lengths");
    series->add_option("--weights", raw.weights, "block weights a_m instead of cycles");
    add_format(series);

    auto* oracle = app.add_subcommand("oracle-check", "compare formulas against brute-force enumeration");
    oracle->add_option("--nmax", raw.n_max, "largest n");
    oracle->add_option("--family", raw.family, "all, classic, general, mixed, restricted, rmixed or bellstar");
    add_format(oracle);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    QuerySpec q;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "value") q.command = Command::Value;
    else if (name == "table") q.command = Command::Table;
    else if (name == "verify") q.command = Command::Verify;
    else if (name == "series") q.command = Command::Series;
    else q.command = Command::OracleCheck;

    auto opt = [sub](const char* flag) {
        const CLI::Option* o = sub->get_option_no_throw(flag);
        return o != nullptr && o->count() > 0;
    };
    if (opt("--n")) q.n = raw.n;
    if (opt("--k")) q.k = raw.k;
    if (opt("--t")) q.t = raw.t;
    if (opt("--r")) q.r = raw.r;
    if (opt("--S")) q.S = raw.S;
    if (opt("--weights")) q.weights = raw.weights;
    if (opt("--nmax")) q.n_max = raw.n_max;
    if (opt("--order")) q.order = raw.order;
    if (opt("--family")) q.family = raw.family;
    q.include = raw.include;
    if (opt("--format")) {
        q.format = kFormats.at(raw.format);
    } else if (q.command == Command::Series) {
        q.format = Format::Json;
    }
    return q;
}

}  // namespace mixstir::cli
