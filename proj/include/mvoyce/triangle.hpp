// The coefficient triangle A(n,k) of Q_n(x) = x * sum_{k=1..n} k Q_{n-k}(x).
//
// Three independent generators are provided (binomial closed form,
// three-term recurrence, hereditary recurrence for an arbitrary arithmetic
// function g) so that each can serve as an oracle for the others.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mvoyce/exact.hpp"

namespace mvoyce {

/// One row of the triangle: coefficients of Q_n indexed k = 0..n.
/// coeffs[0] is carried explicitly (zero for n >= 1).
struct CoeffRow {
    std::uint32_t n = 0;
    std::vector<ExactInt> coeffs;

    const ExactInt& operator[](std::size_t k) const { return coeffs[k]; }
    /// A(n,k), or zero outside 0..n.
    ExactInt at(std::int64_t k) const;
    friend bool operator==(const CoeffRow&, const CoeffRow&) = default;
};

/// Row of p_n(x) for a general arithmetic function g.
struct RationalRow {
    std::uint32_t n = 0;
    std::vector<ExactRatio> coeffs;
    friend bool operator==(const RationalRow&, const RationalRow&) = default;
};

using ArithmeticFunction = std::function<ExactRatio(std::uint64_t)>;

/// A(n,k) = C(n+k-1, 2k-1). Requires n >= 1.
CoeffRow row_closed_form(std::uint32_t n);

/// Q_{m+2} = (2+x) Q_{m+1} - Q_m from Q_1 = x, Q_2 = x^2 + 2x. Requires n >= 1.
CoeffRow row_three_term(std::uint32_t n);

/// Rows 1..max_n from one pass of the three-term recurrence; element i holds row i+1.
std::vector<CoeffRow> rows_three_term(std::uint32_t max_n);

/// p_0 = 1, p_n(x) = x * sum_{k=1..n} g(k) p_{n-k}(x), in exact rationals.
RationalRow row_hereditary(std::uint32_t n, const ArithmeticFunction& g);

/// Rows 0..max_n of the hereditary recurrence; element i holds row i.
std::vector<RationalRow> rows_hereditary(std::uint32_t max_n, const ArithmeticFunction& g);

/// The row as integers, or nullopt if some coefficient is not integral.
std::optional<CoeffRow> to_integer_row(const RationalRow& row);

/// Coefficients C(2n-k-1, k), k = 0..n, of the reciprocal polynomial.
/// Entry k equals A(n, n-k). Requires n >= 1.
CoeffRow reciprocal_row(std::uint32_t n);

/// coeffs[k]^2 >= coeffs[k-1] coeffs[k+1] for 1 <= k <= n-1.
bool is_log_concave(const CoeffRow& row);

/// Nondecreasing then nonincreasing over k = 1..n.
bool is_unimodal(const CoeffRow& row);

namespace arithmetic {
ExactRatio identity(std::uint64_t k);
ExactRatio one(std::uint64_t k);
ExactRatio inverse_factorial(std::uint64_t k);
}  // namespace arithmetic

}  // namespace mvoyce
