// Exact integer and rational arithmetic, plus the Fibonacci and binomial
// primitives the rest of the library is built on.
#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace mvoyce {

/// Arbitrary-precision signed integer. Arithmetic never overflows or rounds.
class ExactInt {
public:
    ExactInt() = default;

    template <std::integral T>
    ExactInt(T value) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>) {
            value_ = static_cast<long>(value);
        } else {
            value_ = static_cast<unsigned long>(value);
        }
    }

    explicit ExactInt(mpz_class value) : value_(std::move(value)) {}

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static ExactInt from_string(std::string_view text);

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    std::size_t bit_length() const;

    std::string to_string() const { return value_.get_str(10); }
    double to_double() const;
    bool fits_u64() const;
    std::uint64_t to_u64() const;

    const mpz_class& raw() const { return value_; }

    ExactInt& operator+=(const ExactInt& rhs) { value_ += rhs.value_; return *this; }
    ExactInt& operator-=(const ExactInt& rhs) { value_ -= rhs.value_; return *this; }
    ExactInt& operator*=(const ExactInt& rhs) { value_ *= rhs.value_; return *this; }

    friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
    friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
    friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }
    friend ExactInt operator-(const ExactInt& x) { return ExactInt(mpz_class(-x.value_)); }

    friend bool operator==(const ExactInt& lhs, const ExactInt& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInt& lhs, const ExactInt& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    mpz_class value_;
};

ExactInt abs(const ExactInt& x);

/// Floor of the square root; x must be non-negative.
ExactInt isqrt(const ExactInt& x);

bool divisible(const ExactInt& numerator, const ExactInt& divisor);

/// Quotient of a division known to be exact. Throws VerificationFailure when
/// the divisor does not divide the numerator.
ExactInt divide_exact(const ExactInt& numerator, const ExactInt& divisor);

/// Remainder in [0, |modulus|).
ExactInt mod(const ExactInt& x, const ExactInt& modulus);

/// Rational number, always in lowest terms with a positive denominator.
class ExactRatio {
public:
    ExactRatio() = default;

    template <std::integral T>
    ExactRatio(T value) : ExactRatio(ExactInt(value)) {}  // NOLINT(google-explicit-constructor)

    ExactRatio(const ExactInt& value);  // NOLINT(google-explicit-constructor)

    /// Throws std::invalid_argument when the denominator is zero.
    ExactRatio(const ExactInt& numerator, const ExactInt& denominator);

    ExactInt numerator() const;
    ExactInt denominator() const;
    int sign() const { return sgn(value_); }
    bool is_integer() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Correctly scaled conversion: the quotient is formed with at least 60
    /// significant bits before rounding, so huge numerators and denominators
    /// (F_2n beyond the double range) convert without overflow.
    double to_double() const;

    const mpq_class& raw() const { return value_; }

    ExactRatio& operator+=(const ExactRatio& rhs) { value_ += rhs.value_; return *this; }
    ExactRatio& operator-=(const ExactRatio& rhs) { value_ -= rhs.value_; return *this; }
    ExactRatio& operator*=(const ExactRatio& rhs) { value_ *= rhs.value_; return *this; }
    ExactRatio& operator/=(const ExactRatio& rhs);

    friend ExactRatio operator+(ExactRatio lhs, const ExactRatio& rhs) { return lhs += rhs; }
    friend ExactRatio operator-(ExactRatio lhs, const ExactRatio& rhs) { return lhs -= rhs; }
    friend ExactRatio operator*(ExactRatio lhs, const ExactRatio& rhs) { return lhs *= rhs; }
    friend ExactRatio operator/(ExactRatio lhs, const ExactRatio& rhs) { return lhs /= rhs; }
    friend ExactRatio operator-(const ExactRatio& x);

    friend bool operator==(const ExactRatio& lhs, const ExactRatio& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRatio& lhs, const ExactRatio& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    explicit ExactRatio(mpq_class value) : value_(std::move(value)) {}
    mpq_class value_;
};

ExactRatio abs(const ExactRatio& x);

/// Round-to-nearest quotient numerator/denominator as a double.
double quotient_to_double(const ExactInt& numerator, const ExactInt& denominator);

/// F_n with F_0 = 0, F_1 = 1, by fast doubling.
ExactInt fib(std::uint64_t n);

/// (F_n, F_{n+1}).
std::pair<ExactInt, ExactInt> fib_pair(std::uint64_t n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
ExactInt binom(std::uint64_t n, std::int64_t k);

/// F_2n^2 + F_2n F_2n+1 - F_2n+1^2 == -1, evaluated exactly.
bool fib_identity_check(std::uint64_t n);

}  // namespace mvoyce
