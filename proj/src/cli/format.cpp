#include "mixstir/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mixstir::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto pos = text.find('\n', start);
        if (pos == std::string_view::npos) pos = text.size();
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::size_t parse_size(const std::string& s) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an index: " + s);
    return static_cast<std::size_t>(v);
}

Nat parse_nat(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not a natural number: " + s);
    }
    return Nat(s);
}

Rat parse_rat(const std::string& s) {
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) {
        throw std::invalid_argument("not a rational: " + s);
    }
    Rat q(s);
    q.canonicalize();
    return q;
}

// Pads to `width` on the right; the caller trims the line end.
void cell(std::string& line, const std::string& text, std::size_t width) {
    line += text;
    line.append(width - text.size() + 2, ' ');
}

void trim_right(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

std::string render_table_plain(const std::vector<TableEntry>& entries) {
    std::map<std::size_t, std::map<std::size_t, std::string>> grid;
    std::size_t k_max = 0;
    for (const auto& e : entries) {
        grid[e.n];
        if (e.value != 0) grid[e.n][e.k] = to_string(e.value);
        k_max = std::max(k_max, e.k);
    }
    std::vector<std::size_t> width(k_max + 1, 0);
    width[0] = 3;  // "n/k"
    for (const auto& [n, row] : grid) {
        width[0] = std::max(width[0], std::to_string(n).size());
        for (const auto& [k, v] : row) width[k] = std::max(width[k], v.size());
    }
    for (std::size_t k = 1; k <= k_max; ++k) width[k] = std::max(width[k], std::to_string(k).size());

    std::string out;
    std::string line;
    cell(line, "n/k", width[0]);
    for (std::size_t k = 1; k <= k_max; ++k) cell(line, std::to_string(k), width[k]);
    trim_right(line);
    out += line + "\n";
    for (const auto& [n, row] : grid) {
        line.clear();
        cell(line, std::to_string(n), width[0]);
        for (std::size_t k = 1; k <= k_max; ++k) {
            const auto it = row.find(k);
            cell(line, it == row.end() ? std::string() : it->second, width[k]);
        }
        trim_right(line);
        out += line + "\n";
    }
    return out;
}

}  // namespace

std::string render_table(const std::vector<TableEntry>& entries, Format format) {
    switch (format) {
        case Format::Plain:
            return render_table_plain(entries);
        case Format::Csv: {
            std::string out = "n,k,value\n";
            for (const auto& e : entries) {
                out += std::to_string(e.n) + "," + std::to_string(e.k) + "," + to_string(e.value) + "\n";
            }
            return out;
        }
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& e : entries) {
                arr.push_back({{"n", e.n}, {"k", e.k}, {"value", to_string(e.value)}});
            }
            return arr.dump(2) + "\n";
        }
    }
    throw std::logic_error("render_table: unknown format");
}

std::vector<TableEntry> parse_table_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines.front() != "n,k,value") throw std::invalid_argument("table csv: missing header");
    std::vector<TableEntry> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != 3) throw std::invalid_argument("table csv: bad row " + std::string(lines[i]));
        out.push_back({parse_size(f[0]), parse_size(f[1]), parse_nat(f[2])});
    }
    return out;
}

std::vector<TableEntry> parse_table_json(std::string_view text) {
    const auto doc = ordered_json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("table json: expected an array");
    std::vector<TableEntry> out;
    for (const auto& row : doc) {
        out.push_back({row.at("n").get<std::size_t>(), row.at("k").get<std::size_t>(),
                       parse_nat(row.at("value").get<std::string>())});
    }
    return out;
}

std::string render_series(const std::vector<SeriesRow>& rows, Format format) {
    switch (format) {
        case Format::Plain: {
            std::string out;
            for (const auto& r : rows) {
                out += std::to_string(r.n) + "  " + to_string(r.coefficient) + "  " + to_string(r.egf_value) + "\n";
            }
            return out;
        }
        case Format::Csv: {
            std::string out = "n,numerator,denominator,egf_value\n";
            for (const auto& r : rows) {
                out += std::to_string(r.n) + "," + r.coefficient.get_num().get_str() + "," +
                       r.coefficient.get_den().get_str() + "," + to_string(r.egf_value) + "\n";
            }
            return out;
        }
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                arr.push_back({{"n", r.n},
                               {"numerator", r.coefficient.get_num().get_str()},
                               {"denominator", r.coefficient.get_den().get_str()},
                               {"egf_value", to_string(r.egf_value)}});
            }
            return arr.dump(2) + "\n";
        }
    }
    throw std::logic_error("render_series: unknown format");
}

std::vector<SeriesRow> parse_series_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines.front() != "n,numerator,denominator,egf_value") {
        throw std::invalid_argument("series csv: missing header");
    }
    std::vector<SeriesRow> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        if (f.size() != 4) throw std::invalid_argument("series csv: bad row " + std::string(lines[i]));
        out.push_back({parse_size(f[0]), parse_rat(f[1] + "/" + f[2]), parse_rat(f[3])});
    }
    return out;
}

std::vector<SeriesRow> parse_series_json(std::string_view text) {
    const auto doc = ordered_json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("series json: expected an array");
    std::vector<SeriesRow> out;
    for (const auto& row : doc) {
        out.push_back({row.at("n").get<std::size_t>(),
                       parse_rat(row.at("numerator").get<std::string>() + "/" +
                                 row.at("denominator").get<std::string>()),
                       parse_rat(row.at("egf_value").get<std::string>())});
    }
    return out;
}

std::string render_report(const std::vector<IdentityResult>& results, Format format) {
    switch (format) {
        case Format::Plain: {
            std::ostringstream out;
            std::size_t failed = 0;
            for (const auto& r : results) {
                out << (r.passed() ? "PASS " : "FAIL ") << r.name << " checked=" << r.checked;
                if (!r.passed()) {
                    ++failed;
                    out << " failed=" << r.failed << " counterexample=" << r.counterexample;
                }
                out << "\n";
            }
            out << results.size() - failed << "/" << results.size() << " identities hold\n";
            return out.str();
        }
        case Format::Csv: {
            std::string out = "name,checked,failed,counterexample\n";
            for (const auto& r : results) {
                // counterexamples contain commas
                out += r.name + "," + std::to_string(r.checked) + "," + std::to_string(r.failed) + ",\"" +
                       r.counterexample + "\"\n";
            }
            return out;
        }
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : results) {
                ordered_json row{{"name", r.name},
                                 {"passed", r.passed()},
                                 {"checked", r.checked},
                                 {"failed", r.failed}};
                row["counterexample"] = r.counterexample.empty() ? ordered_json(nullptr) : ordered_json(r.counterexample);
                arr.push_back(std::move(row));
            }
            return arr.dump(2) + "\n";
        }
    }
    throw std::logic_error("render_report: unknown format");
}

}  // namespace mixstir::cli
