#include "mvoyce/exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mvoyce/errors.hpp"

namespace mvoyce {

ExactInt ExactInt::from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
        throw std::invalid_argument("malformed integer literal: " + s);
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("malformed integer literal: " + s);
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return ExactInt(mpz_class(s, 10));
}

std::size_t ExactInt::bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

double ExactInt::to_double() const {
    return quotient_to_double(*this, ExactInt(1));
}

bool ExactInt::fits_u64() const {
    return sign() >= 0 && bit_length() <= 64;
}

std::uint64_t ExactInt::to_u64() const {
    if (!fits_u64()) {
        throw std::out_of_range("integer does not fit in 64 bits: " + to_string());
    }
    std::uint64_t result = 0;
    mpz_export(&result, nullptr, -1, sizeof(result), 0, 0, value_.get_mpz_t());
    return result;
}

ExactInt abs(const ExactInt& x) {
    return x.sign() < 0 ? -x : x;
}

ExactInt isqrt(const ExactInt& x) {
    if (x.sign() < 0) {
        throw std::domain_error("isqrt of a negative integer");
    }
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), x.raw().get_mpz_t());
    return ExactInt(std::move(root));
}

bool divisible(const ExactInt& numerator, const ExactInt& divisor) {
    return mpz_divisible_p(numerator.raw().get_mpz_t(), divisor.raw().get_mpz_t()) != 0;
}

ExactInt divide_exact(const ExactInt& numerator, const ExactInt& divisor) {
    if (divisor.is_zero() || !divisible(numerator, divisor)) {
        throw VerificationFailure(numerator.to_string() + " is not divisible by " + divisor.to_string());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), numerator.raw().get_mpz_t(), divisor.raw().get_mpz_t());
    return ExactInt(std::move(q));
}

ExactInt mod(const ExactInt& x, const ExactInt& modulus) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.raw().get_mpz_t(), modulus.raw().get_mpz_t());
    return ExactInt(std::move(r));
}

double quotient_to_double(const ExactInt& numerator, const ExactInt& denominator) {
    if (denominator.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (numerator.is_zero()) {
        return 0.0;
    }
    const bool negative = (numerator.sign() < 0) != (denominator.sign() < 0);
    const mpz_class num = ::abs(numerator.raw());
    const mpz_class den = ::abs(denominator.raw());

    // Scale so the integer quotient has 62 or 63 bits; the remainder folds
    // into a sticky bit so the final uint64 -> double step rounds correctly.
    const long num_bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    const long shift = 62 - (num_bits - den_bits);

    mpz_class scaled_num = num;
    mpz_class scaled_den = den;
    if (shift > 0) {
        mpz_mul_2exp(scaled_num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else if (shift < 0) {
        mpz_mul_2exp(scaled_den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    mpz_class q;
    mpz_class r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());

    std::uint64_t bits = 0;
    mpz_export(&bits, nullptr, -1, sizeof(bits), 0, 0, q.get_mpz_t());
    if (sgn(r) != 0) {
        bits |= 1u;
    }
    if (shift > std::numeric_limits<int>::max() || shift < std::numeric_limits<int>::min()) {
        return negative ? (shift > 0 ? -0.0 : -HUGE_VAL) : (shift > 0 ? 0.0 : HUGE_VAL);
    }
    const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
    return negative ? -magnitude : magnitude;
}

ExactRatio::ExactRatio(const ExactInt& value) : value_(value.raw()) {}

ExactRatio::ExactRatio(const ExactInt& numerator, const ExactInt& denominator) {
    if (denominator.is_zero()) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(numerator.raw(), denominator.raw());
    value_.canonicalize();
}

ExactInt ExactRatio::numerator() const { return ExactInt(mpz_class(value_.get_num())); }

ExactInt ExactRatio::denominator() const { return ExactInt(mpz_class(value_.get_den())); }

bool ExactRatio::is_integer() const { return value_.get_den() == 1; }

std::string ExactRatio::to_string() const { return value_.get_str(10); }

double ExactRatio::to_double() const { return quotient_to_double(numerator(), denominator()); }

ExactRatio& ExactRatio::operator/=(const ExactRatio& rhs) {
    if (rhs.sign() == 0) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

ExactRatio operator-(const ExactRatio& x) { return ExactRatio(mpq_class(-x.value_)); }

ExactRatio abs(const ExactRatio& x) { return x.sign() < 0 ? -x : x; }

std::pair<ExactInt, ExactInt> fib_pair(std::uint64_t n) {
    // F(2k) = F(k) (2 F(k+1) - F(k)),  F(2k+1) = F(k)^2 + F(k+1)^2
    mpz_class a = 0;  // F(k)
    mpz_class b = 1;  // F(k+1)
    mpz_class t;
    for (int bit = 63; bit >= 0; --bit) {
        t = 2 * b - a;
        mpz_class even = a * t;
        mpz_class odd = a * a + b * b;
        if ((n >> bit) & 1u) {
            a = std::move(odd);
            b = even + a;
        } else {
            a = std::move(even);
            b = std::move(odd);
        }
    }
    return {ExactInt(std::move(a)), ExactInt(std::move(b))};
}

ExactInt fib(std::uint64_t n) { return fib_pair(n).first; }

ExactInt binom(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) {
        return ExactInt(0);
    }
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    if (kk > n - kk) {
        kk = n - kk;
    }
    // r_i = C(n-kk+i, i) is an integer at every step.
    mpz_class r = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) {
        mpz_mul_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n - kk + i));
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return ExactInt(std::move(r));
}

bool fib_identity_check(std::uint64_t n) {
    auto [f2n, f2n1] = fib_pair(2 * n);
    return f2n * f2n + f2n * f2n1 - f2n1 * f2n1 == ExactInt(-1);
}

}  // namespace mvoyce
