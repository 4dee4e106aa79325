#include "mvoyce/moments.hpp"

#include <stdexcept>
#include <string>

#include "mvoyce/errors.hpp"
#include "mvoyce/triangle.hpp"

namespace mvoyce {

ExactInt row_sum(std::uint32_t n) {
    const CoeffRow row = row_closed_form(n);
    ExactInt total;
    for (const auto& c : row.coeffs) {
        total += c;
    }
    if (total != fib(2 * std::uint64_t{n})) {
        throw VerificationFailure("row sum of row " + std::to_string(n) + " differs from F_2n");
    }
    return total;
}

ExactInt deriv1_closed(std::uint32_t n) {
    const auto [f2n, f2n1] = fib_pair(2 * std::uint64_t{n});
    const ExactInt nn(n);
    return divide_exact(ExactInt(2) * nn * f2n1 + ExactInt(2) * f2n - nn * f2n, ExactInt(5));
}

ExactInt deriv2_closed(std::uint32_t n) {
    const auto [f2n, f2n1] = fib_pair(2 * std::uint64_t{n});
    const ExactInt nn(n);
    const ExactInt poly = ExactInt(5) * nn * nn - nn - ExactInt(8);
    return divide_exact(poly * f2n + ExactInt(2) * nn * f2n1, ExactInt(25));
}

MomentSummary moment_summary(std::uint32_t n) {
    if (n < 1) {
        throw std::invalid_argument("moment_summary: n must be >= 1");
    }
    const auto [f2n, f2n1] = fib_pair(2 * std::uint64_t{n});
    MomentSummary s;
    s.n = n;
    s.u = f2n;
    s.v = deriv1_closed(n);
    s.w = deriv2_closed(n);

    const ExactRatio ratio(f2n1, f2n);
    const ExactRatio half(1, 2);
    const ExactRatio nr(n);
    const ExactRatio inv_n(ExactInt(1), ExactInt(n));
    s.mu = ExactRatio(ExactInt(2), ExactInt(5)) * (ratio - half + inv_n) * nr;
    s.sigma2 = ExactRatio(ExactInt(4), ExactInt(25)) *
               (ratio - half - ExactRatio(ExactInt(n), f2n * f2n) - ExactRatio(ExactInt(1), ExactInt(2) * ExactInt(n))) *
               nr;

    const ExactRatio mean(s.v, s.u);
    const ExactRatio variance = ExactRatio(s.w, s.u) - mean * mean + mean;
    if (mean != s.mu || variance != s.sigma2) {
        throw VerificationFailure("closed-form moments of row " + std::to_string(n) +
                                  " disagree with the derivative sums");
    }
    return s;
}

std::pair<ExactRatio, ExactRatio> kepler_gap(std::uint32_t n) {
    const MomentSummary s = moment_summary(n);
    const ExactRatio nr(n);
    return {s.mu / nr, s.sigma2 / nr};
}

}  // namespace mvoyce
