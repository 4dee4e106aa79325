// Row sums, derivative sums and the first two moments of the distribution
// P(X_n = k) = A(n,k) / Q_n(1), all in exact arithmetic.
#pragma once

#include <cstdint>
#include <utility>

#include "mvoyce/exact.hpp"

namespace mvoyce {

struct MomentSummary {
    std::uint32_t n = 0;
    ExactInt u;  ///< Q_n(1) = F_2n
    ExactInt v;  ///< Q_n'(1)
    ExactInt w;  ///< Q_n''(1)
    ExactRatio mu;
    ExactRatio sigma2;
};

/// sum_k A(n,k), summed over the closed-form row and checked against F_2n.
ExactInt row_sum(std::uint32_t n);

/// Q_n'(1) = (2n F_2n+1 + 2 F_2n - n F_2n) / 5.
ExactInt deriv1_closed(std::uint32_t n);

/// Q_n''(1) = ((5n^2 - n - 8) F_2n + 2n F_2n+1) / 25.
ExactInt deriv2_closed(std::uint32_t n);

/// Mean and variance from the Fibonacci closed forms, checked against
/// v/u and w/u - (v/u)^2 + v/u. Requires n >= 1.
MomentSummary moment_summary(std::uint32_t n);

/// (mu_n / n, sigma_n^2 / n).
std::pair<ExactRatio, ExactRatio> kepler_gap(std::uint32_t n);

}  // namespace mvoyce
