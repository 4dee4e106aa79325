#include <doctest.h>

#include <random>

#include "mvoyce/table.hpp"

TEST_CASE("format names") {
    CHECK(mvoyce::parse_output_format("csv") == mvoyce::OutputFormat::csv);
    CHECK(mvoyce::to_string(mvoyce::OutputFormat::tsv) == "tsv");
    CHECK_THROWS_AS(mvoyce::parse_output_format("xml"), std::invalid_argument);
}

TEST_CASE("shortest round-trip doubles") {
    CHECK(mvoyce::format_double(0.1) == "0.1");
    CHECK(mvoyce::format_double(1.0) == "1");
    CHECK(mvoyce::format_double(1e-300) == "1e-300");
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng);
        REQUIRE(std::stod(mvoyce::format_double(x)) == x);
    }
}

TEST_CASE("delimited rendering") {
    mvoyce::Table t{{"n", "value", "flag", "exact"}, {}};
    t.rows.push_back({std::int64_t{3}, 0.5, true, std::string("46/21")});
    t.rows.push_back({std::int64_t{4}, mvoyce::Cell{}, false, std::string("a,b")});
    CHECK(mvoyce::render_delimited(t, ',') == "n,value,flag,exact\n3,0.5,true,46/21\n4,,false,\"a,b\"\n");
    CHECK(mvoyce::render_delimited(t, '\t') == "n\tvalue\tflag\texact\n3\t0.5\ttrue\t46/21\n4\t\tfalse\ta,b\n");
}

TEST_CASE("json rows keep exact values as strings") {
    mvoyce::Table t{{"n", "big", "list"}, {}};
    t.rows.push_back({std::int64_t{1}, std::string("61218182743304701891431482520"),
                      std::vector<std::string>{"0", "1"}});
    const auto j = mvoyce::rows_to_json(t);
    CHECK(j[0]["n"] == 1);
    CHECK(j[0]["big"] == "61218182743304701891431482520");
    CHECK(j[0]["list"][1] == "1");
}

TEST_CASE("significant-digit displays") {
    CHECK(mvoyce::round_significant(0.375, 2) == "3.8e-01");
    CHECK(mvoyce::round_significant(1.19225, 2) == "1.2e+00");
    CHECK(mvoyce::round_significant(0.0996715, 2) == "1.0e-01");
    CHECK(mvoyce::round_significant(9.96, 2) == "1.0e+01");
    CHECK(mvoyce::guarded_two_digit(0.375) == "3.7e-01");
    CHECK(mvoyce::guarded_two_digit(1.19225) == "1.1e+00");
    CHECK(mvoyce::guarded_two_digit(0.169873) == "1.7e-01");
    CHECK(mvoyce::guarded_two_digit(0.0309611) == "3.1e-02");
    CHECK(mvoyce::guarded_two_digit(0.0996715) == "9.9e-02");
    CHECK(mvoyce::guarded_two_digit(0.9996) == "1.0e+00");
    CHECK(mvoyce::guarded_two_digit(0.0) == "0");
}
