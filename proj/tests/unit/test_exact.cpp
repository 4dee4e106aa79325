#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "mvoyce/errors.hpp"
#include "mvoyce/exact.hpp"
#include "oracles.hpp"

using mvoyce::ExactInt;
using mvoyce::ExactRatio;

TEST_CASE("fib small values") {
    CHECK(mvoyce::fib(0) == ExactInt(0));
    CHECK(mvoyce::fib(1) == ExactInt(1));
    CHECK(mvoyce::fib(8) == ExactInt(21));
    CHECK(mvoyce::fib(20) == ExactInt(oracle::fib_iterative(20)));
    CHECK(oracle::fib_iterative(20) == 6765);
}

TEST_CASE("fib matches the plain recurrence up to 2000") {
    mpz_class a = 0, b = 1;
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        REQUIRE(mvoyce::fib(n).raw() == a);
        mpz_class next = a + b;
        a = b;
        b = next;
    }
}

TEST_CASE("fib_pair returns consecutive terms and fib(n+2) = fib(n+1) + fib(n)") {
    for (std::uint64_t n : {0ull, 1ull, 2ull, 63ull, 64ull, 1000ull, 12345ull}) {
        auto [f, g] = mvoyce::fib_pair(n);
        CHECK(mvoyce::fib(n + 2) == f + g);
    }
}

TEST_CASE("fib at n = 10^6 is feasible") {
    const ExactInt f = mvoyce::fib(1000000);
    // bit length computed independently with Python big integers
    CHECK(f.bit_length() == 694241);
}

TEST_CASE("binom values and out-of-range") {
    CHECK(mvoyce::binom(7, 4) == ExactInt(35));
    CHECK(mvoyce::binom(7, 3) == ExactInt(35));
    CHECK(mvoyce::binom(5, 0) == ExactInt(1));
    CHECK(mvoyce::binom(5, 5) == ExactInt(1));
    CHECK(mvoyce::binom(5, -1) == ExactInt(0));
    CHECK(mvoyce::binom(5, 6) == ExactInt(0));
    CHECK(mvoyce::binom(0, 0) == ExactInt(1));
    CHECK(mvoyce::binom(1, -1) == ExactInt(0));
    CHECK(mvoyce::binom(103, 63) == ExactInt::from_string("61218182743304701891431482520"));
    CHECK(mvoyce::binom(104, 65) == mvoyce::binom(103, 63));
}

TEST_CASE("binom agrees with Pascal's triangle for n <= 300") {
    const auto rows = oracle::pascal(300);
    for (std::uint32_t n = 0; n <= 300; ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            REQUIRE(mvoyce::binom(n, k).raw() == rows[n][static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("Cassini-type identity F_2n^2 + F_2n F_2n+1 - F_2n+1^2 = -1") {
    CHECK(mvoyce::fib_identity_check(0));
    CHECK(mvoyce::fib_identity_check(2));
    CHECK(mvoyce::fib_identity_check(100));
    for (std::uint64_t n = 0; n <= 1000; ++n) {
        REQUIRE(mvoyce::fib_identity_check(n));
    }
}

TEST_CASE("ExactInt parsing, sign and conversion") {
    CHECK(ExactInt::from_string("-42") == ExactInt(-42));
    CHECK(ExactInt::from_string("+7") == ExactInt(7));
    CHECK_THROWS_AS(ExactInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(ExactInt::from_string("12a"), std::invalid_argument);
    CHECK_THROWS_AS(ExactInt::from_string("-"), std::invalid_argument);
    CHECK(ExactInt(0).sign() == 0);
    CHECK(ExactInt(-3).sign() == -1);
    CHECK(ExactInt(-3).to_string() == "-3");
    CHECK(ExactInt(std::uint64_t{18446744073709551615ull}).to_u64() == 18446744073709551615ull);
    CHECK_THROWS_AS(ExactInt(-1).to_u64(), std::out_of_range);
    CHECK(mvoyce::isqrt(ExactInt(24)) == ExactInt(4));
    CHECK(mvoyce::isqrt(ExactInt(25)) == ExactInt(5));
    CHECK(mvoyce::mod(ExactInt(-3), ExactInt(5)) == ExactInt(2));
    CHECK_THROWS_AS(mvoyce::divide_exact(ExactInt(7), ExactInt(5)), mvoyce::VerificationFailure);
}

TEST_CASE("ExactRatio is canonical") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    std::uniform_int_distribution<long> scale(-50000, 50000);
    for (int i = 0; i < 2000; ++i) {
        const ExactInt p(num(rng));
        const ExactInt q(den(rng));
        long c = scale(rng);
        if (c == 0) c = 1;
        const ExactRatio a(p, q);
        const ExactRatio b(ExactInt(c) * p, ExactInt(c) * q);
        REQUIRE(a == b);
        REQUIRE(a.to_string() == b.to_string());
        REQUIRE(b.denominator().sign() > 0);
    }
    CHECK(ExactRatio(ExactInt(2), ExactInt(-4)).to_string() == "-1/2");
    CHECK(ExactRatio(ExactInt(0), ExactInt(-4)).to_string() == "0");
    CHECK(ExactRatio(ExactInt(6), ExactInt(3)).is_integer());
    CHECK_THROWS_AS(ExactRatio(ExactInt(1), ExactInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(ExactRatio(1) / ExactRatio(0), std::domain_error);
}

TEST_CASE("scaled float conversion") {
    CHECK(ExactRatio(ExactInt(1), ExactInt(3)).to_double() == 1.0 / 3.0);
    CHECK(ExactRatio(ExactInt(-2), ExactInt(7)).to_double() == -2.0 / 7.0);
    CHECK(ExactRatio(ExactInt(46), ExactInt(21)).to_double() == 46.0 / 21.0);
    CHECK(ExactInt(0).to_double() == 0.0);

    // Both operands far outside the double range.
    const ExactInt f2n = mvoyce::fib(2000);
    const ExactInt f2n1 = mvoyce::fib(2001);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(ExactRatio(f2n1, f2n).to_double() == doctest::Approx(golden).epsilon(1e-15));
    CHECK(std::isinf(mvoyce::fib(10000).to_double()));

    // Correct rounding on random 64-bit quotients checked in long double.
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t a = rng() >> 11;
        const std::uint64_t b = (rng() >> 11) | 1u;
        const double expected = static_cast<double>(static_cast<long double>(a) / static_cast<long double>(b));
        const double got = mvoyce::quotient_to_double(ExactInt(a), ExactInt(b));
        REQUIRE(std::abs(got - expected) <= std::abs(expected) * std::numeric_limits<double>::epsilon());
    }
}

TEST_CASE("pure functions are safe to call concurrently") {
    std::vector<std::thread> workers;
    std::vector<int> ok(8, 0);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([t, &ok] {
            const std::uint64_t n = 500 + 37 * static_cast<std::uint64_t>(t);
            ok[t] = mvoyce::fib(n).raw() == oracle::fib_iterative(n) && mvoyce::fib_identity_check(n);
        });
    }
    for (auto& w : workers) w.join();
    for (int v : ok) CHECK(v == 1);
}
