#include <doctest.h>

#include "mixstir/cli.hpp"

#include <cstdlib>
#include <sstream>

using namespace mixstir;
using namespace mixstir::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("value") {
    CHECK(call({"value", "--n", "4", "--k", "2", "--t", "2"}).out == "18\n");
    CHECK(call({"value", "--n", "5", "--k", "1", "--t", "2"}).out == "50\n");
    CHECK(call({"value", "--n", "3", "--k", "2", "--t", "1", "--S", "evens"}).out == "0\n");
    CHECK(call({"value", "--n", "3", "--k", "2", "--t", "1", "--r", "2"}).out == "4\n");
    CHECK(call({"value", "--n", "4", "--k", "2", "--t", "2", "--weights", "factshift"}).out == "18\n");

    const auto bad = call({"value", "--n", "3", "--k", "0", "--t", "1"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.out.empty());
    CHECK(bad.err.rfind("error: ", 0) == 0);
    CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);

    CHECK(call({"value", "--n", "3", "--k", "1"}).code == kExitUsage);
    CHECK(call({"value", "--n", "3", "--k", "1", "--t", "1", "--S", "evens", "--r", "1"}).code == kExitUsage);
    CHECK(call({"value", "--n", "3", "--k", "1", "--t", "1", "--S", "primes"}).code == kExitUsage);
    CHECK(call({"value", "--n", "x", "--k", "1", "--t", "1"}).code == kExitUsage);
    CHECK(call({"bogus"}).code == kExitUsage);
    CHECK(call({}).code == kExitUsage);
}

TEST_CASE("help exits cleanly") {
    const auto h = call({"--help"});
    CHECK(h.code == kExitPass);
    CHECK(h.out.find("oracle-check") != std::string::npos);
}

TEST_CASE("table formats") {
    const auto plain = call({"table", "--t", "2", "--nmax", "6", "--format", "plain"});
    CHECK(plain.code == 0);
    CHECK(plain.out ==
          "n/k  1    2    3     4    5\n"
          "2    1\n"
          "3    3    3\n"
          "4    11   18   12\n"
          "5    50   105  120   60\n"
          "6    274  675  1020  900  360\n");

    const auto csv = call({"table", "--t", "3", "--nmax", "7", "--format", "csv"});
    CHECK(csv.out.rfind("n,k,value\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 16);
    CHECK(csv.out.find("7,3,3500\n") != std::string::npos);

    const auto json = call({"table", "--t", "1", "--nmax", "4", "--format", "json"});
    const auto entries = parse_table_json(json.out);
    CHECK(entries.size() == 10);
    for (const auto& e : entries) CHECK(e.value == factorial(e.k) * stirling1(e.n, e.k));

    CHECK(call({"table", "--t", "2", "--nmax", "6", "--S", "odds", "--format", "csv"}).code == 0);
    CHECK(call({"table", "--t", "2"}).code == kExitUsage);
    CHECK(call({"table", "--t", "2", "--nmax", "6", "--format", "xml"}).code == kExitUsage);
    CHECK(call({"table", "--t", "2", "--nmax", "100000"}).code == kExitResourceLimit);
}

TEST_CASE("table round trip") {
    for (const char* t : {"0", "1", "2", "3"}) {
        const auto csv = call({"table", "--t", t, "--nmax", "12", "--format", "csv"}).out;
        CHECK(render_table(parse_table_csv(csv), Format::Csv) == csv);
        const auto json = call({"table", "--t", t, "--nmax", "12", "--format", "json"}).out;
        CHECK(render_table(parse_table_json(json), Format::Json) == json);
        CHECK(parse_table_csv(csv) == parse_table_json(json));
    }
    CHECK_THROWS(parse_table_csv("n,k\n1,1\n"));
    CHECK_THROWS(parse_table_csv("n,k,value\n1,1,-3\n"));
}

TEST_CASE("series") {
    const auto r = call({"series", "--k", "2", "--t", "2", "--order", "6"});
    CHECK(r.code == 0);
    const auto rows = parse_series_json(r.out);
    REQUIRE(rows.size() == 7);
    const long col2[] = {0, 0, 0, 3, 18, 105, 675};
    for (std::size_t n = 0; n <= 6; ++n) CHECK(rows[n].egf_value == col2[n]);

    const auto single = parse_series_json(call({"series", "--k", "1", "--t", "1", "--order", "5"}).out);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(single[n].egf_value == factorial(n - 1));

    const auto evens =
        parse_series_csv(call({"series", "--k", "2", "--t", "1", "--S", "evens", "--order", "6", "--format", "csv"}).out);
    CHECK(evens[4].egf_value == 6);
    for (const auto& row : evens) CHECK(row.egf_value.get_den() == 1);

    const auto csv = call({"series", "--k", "3", "--t", "2", "--weights", "fact", "--order", "9", "--format", "csv"}).out;
    CHECK(render_series(parse_series_csv(csv), Format::Csv) == csv);
    const auto json = call({"series", "--k", "3", "--t", "2", "--order", "9"}).out;
    CHECK(render_series(parse_series_json(json), Format::Json) == json);

    CHECK(call({"series", "--k", "2", "--t", "1"}).code == kExitUsage);
    CHECK(call({"series", "--k", "2", "--t", "1", "--order", "4", "--S", "evens", "--weights", "ones"}).code ==
          kExitUsage);
}

TEST_CASE("verify") {
    const auto ok = call({"verify", "--nmax", "6"});
    CHECK(ok.code == kExitPass);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const auto vacuous = call({"verify", "--nmax", "0"});
    CHECK(vacuous.code == kExitPass);

    const auto lit = call({"verify", "--nmax", "5", "--include", "paper-literal-rsf", "--format", "json"});
    CHECK(lit.code == kExitIdentityFailure);
    CHECK(lit.out.find("\"name\": \"paper-literal-rsf\"") != std::string::npos);
    CHECK(lit.out.find("\"name\": \"rsf-corrected\"") != std::string::npos);

    CHECK(call({"verify", "--nmax", "4", "--include", "nonsense"}).code == kExitUsage);
    CHECK(call({"verify", "--nmax", "400"}).code == kExitResourceLimit);
}

TEST_CASE("oracle-check") {
    CHECK(call({"oracle-check", "--nmax", "5", "--family", "rmixed"}).code == kExitPass);
    CHECK(call({"oracle-check", "--nmax", "30"}).code == kExitResourceLimit);
    CHECK(call({"oracle-check", "--nmax", "4", "--family", "nope"}).code == kExitUsage);
}

TEST_CASE("determinism") {
    const std::vector<std::string> args{"verify", "--nmax", "6", "--include", "paper-literal-all", "--format", "csv"};
    const auto first = call(args);
    for (int i = 0; i < 3; ++i) {
        const auto again = call(args);
        CHECK(again.out == first.out);
        CHECK(again.code == first.code);
    }
}
