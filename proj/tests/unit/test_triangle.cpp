#include <doctest.h>

#include <vector>

#include "mvoyce/triangle.hpp"
#include "oracles.hpp"

using mvoyce::CoeffRow;
using mvoyce::ExactInt;
using mvoyce::ExactRatio;

namespace {

std::vector<long> as_longs(const CoeffRow& row) {
    std::vector<long> out;
    for (const auto& c : row.coeffs) out.push_back(c.raw().get_si());
    return out;
}

// Coefficients for n = 1..8 as printed (k = 1..n), with k = 0 prepended.
const std::vector<std::vector<long>> kTable1 = {
    {0, 1},
    {0, 2, 1},
    {0, 3, 4, 1},
    {0, 4, 10, 6, 1},
    {0, 5, 20, 21, 8, 1},
    {0, 6, 35, 56, 36, 10, 1},
    {0, 7, 56, 126, 120, 55, 12, 1},
    {0, 8, 84, 252, 330, 220, 78, 14, 1},
};

}  // namespace

TEST_CASE("closed form reproduces the small rows") {
    CHECK(as_longs(mvoyce::row_closed_form(5)) == std::vector<long>{0, 5, 20, 21, 8, 1});
    CHECK(as_longs(mvoyce::row_closed_form(1)) == std::vector<long>{0, 1});
    CHECK(mvoyce::row_closed_form(8)[4] == ExactInt(330));
    for (std::uint32_t n = 1; n <= 8; ++n) {
        CHECK(as_longs(mvoyce::row_closed_form(n)) == kTable1[n - 1]);
    }
}

TEST_CASE("three-term recurrence") {
    CHECK(as_longs(mvoyce::row_three_term(2)) == std::vector<long>{0, 2, 1});
    CHECK(as_longs(mvoyce::row_three_term(3)) == std::vector<long>{0, 3, 4, 1});
    CHECK(as_longs(mvoyce::row_three_term(7)) == std::vector<long>{0, 7, 56, 126, 120, 55, 12, 1});
    CHECK(as_longs(mvoyce::row_three_term(1)) == std::vector<long>{0, 1});
    const auto rows = mvoyce::rows_three_term(8);
    REQUIRE(rows.size() == 8);
    for (std::uint32_t n = 1; n <= 8; ++n) {
        CHECK(rows[n - 1].n == n);
        CHECK(as_longs(rows[n - 1]) == kTable1[n - 1]);
    }
}

TEST_CASE("hereditary recurrence with g(k) = k") {
    const auto row = mvoyce::row_hereditary(4, mvoyce::arithmetic::identity);
    const auto ints = mvoyce::to_integer_row(row);
    REQUIRE(ints.has_value());
    CHECK(as_longs(*ints) == std::vector<long>{0, 4, 10, 6, 1});
    CHECK(mvoyce::row_hereditary(0, mvoyce::arithmetic::identity).coeffs == std::vector<ExactRatio>{ExactRatio(1)});
}

TEST_CASE("all three routes agree for n <= 200") {
    const auto recurrence = mvoyce::rows_three_term(200);
    for (std::uint32_t n = 1; n <= 200; ++n) {
        const CoeffRow closed = mvoyce::row_closed_form(n);
        REQUIRE(closed == recurrence[n - 1]);
        REQUIRE(closed == mvoyce::row_three_term(n));
    }
    const auto hereditary = mvoyce::rows_hereditary(200, mvoyce::arithmetic::identity);
    for (std::uint32_t n = 1; n <= 200; ++n) {
        const auto as_int = mvoyce::to_integer_row(hereditary[n]);
        REQUIRE(as_int.has_value());
        REQUIRE(*as_int == recurrence[n - 1]);
    }
}

TEST_CASE("g = 1 gives C(n-1, k-1)") {
    const auto row = mvoyce::row_hereditary(5, mvoyce::arithmetic::one);
    CHECK(row.coeffs[3] == ExactRatio(6));
    const auto pascal = oracle::pascal(50);
    for (std::uint32_t n = 1; n <= 50; ++n) {
        const auto r = mvoyce::row_hereditary(n, mvoyce::arithmetic::one);
        REQUIRE(r.coeffs[0] == ExactRatio(0));
        for (std::uint32_t k = 1; k <= n; ++k) {
            REQUIRE(r.coeffs[k] == ExactRatio(ExactInt(pascal[n - 1][k - 1])));
        }
    }
}

TEST_CASE("g = 1/k! gives k! S(n,k) / n!") {
    const auto s4 = oracle::stirling2_by_enumeration(4);
    CHECK(s4 == std::vector<std::uint64_t>{0, 1, 7, 6, 1});
    const auto row4 = mvoyce::row_hereditary(4, mvoyce::arithmetic::inverse_factorial);
    // 4! c = 2! S(4,2) = 14
    CHECK(row4.coeffs[2] == ExactRatio(ExactInt(7), ExactInt(12)));
    CHECK(row4.coeffs[2] * ExactRatio(24) == ExactRatio(14));

    for (std::uint32_t n = 1; n <= 12; ++n) {
        const auto stirling = oracle::stirling2_by_enumeration(n);
        const auto row = mvoyce::row_hereditary(n, mvoyce::arithmetic::inverse_factorial);
        const ExactRatio nfact(ExactInt(oracle::factorial(n)));
        for (std::uint32_t k = 0; k <= n; ++k) {
            const ExactInt expected = ExactInt(oracle::factorial(k)) * ExactInt(stirling[k]);
            REQUIRE(nfact * row.coeffs[k] == ExactRatio(expected));
        }
    }
}

TEST_CASE("non-integral rows are reported") {
    const auto row = mvoyce::row_hereditary(3, mvoyce::arithmetic::inverse_factorial);
    CHECK_FALSE(mvoyce::to_integer_row(row).has_value());
}

TEST_CASE("reciprocal row is the reversed row without an index shift") {
    CHECK(mvoyce::reciprocal_row(4)[0] == ExactInt(1));
    CHECK(mvoyce::reciprocal_row(4)[2] == ExactInt(10));
    CHECK(mvoyce::reciprocal_row(5)[2] == ExactInt(21));
    for (std::uint32_t n = 1; n <= 300; ++n) {
        const CoeffRow forward = mvoyce::row_closed_form(n);
        const CoeffRow reversed = mvoyce::reciprocal_row(n);
        REQUIRE(reversed.coeffs.size() == n + 1);
        for (std::uint32_t k = 0; k <= n; ++k) {
            REQUIRE(reversed[k] == forward[n - k]);
        }
    }
}

TEST_CASE("row shape invariants for n <= 500") {
    const auto rows = mvoyce::rows_three_term(500);
    for (const CoeffRow& row : rows) {
        REQUIRE(row.coeffs.size() == row.n + 1);
        REQUIRE(row[0] == ExactInt(0));
        REQUIRE(row[row.n] == ExactInt(1));
        REQUIRE(row[1] == ExactInt(row.n));
        REQUIRE(mvoyce::is_log_concave(row));
        REQUIRE(mvoyce::is_unimodal(row));
    }
}

TEST_CASE("shape predicates reject bad rows") {
    CHECK_FALSE(mvoyce::is_unimodal(CoeffRow{4, {0, 3, 1, 2, 1}}));
    CHECK_FALSE(mvoyce::is_log_concave(CoeffRow{4, {0, 3, 1, 2, 1}}));
    CHECK(mvoyce::is_unimodal(CoeffRow{3, {0, 1, 1, 1}}));
    CHECK(mvoyce::row_closed_form(3).at(-1) == ExactInt(0));
    CHECK(mvoyce::row_closed_form(3).at(4) == ExactInt(0));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(mvoyce::row_closed_form(0), std::invalid_argument);
    CHECK_THROWS_AS(mvoyce::row_three_term(0), std::invalid_argument);
    CHECK_THROWS_AS(mvoyce::reciprocal_row(0), std::invalid_argument);
}
