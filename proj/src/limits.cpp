#include "mvoyce/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mvoyce/errors.hpp"
#include "mvoyce/exact.hpp"
#include "mvoyce/moments.hpp"
#include "mvoyce/triangle.hpp"

namespace mvoyce {

namespace {

void require_two(std::uint32_t n, const char* what) {
    if (n < 2) {
        throw std::invalid_argument(std::string(what) + ": n must be >= 2 (got " + std::to_string(n) +
                                    "); the row distribution is degenerate");
    }
}

}  // namespace

double normal_cdf(double x) {
    return std::clamp(0.5 * std::erfc(-x / std::numbers::sqrt2), 0.0, 1.0);
}

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

RowDistribution row_distribution(std::uint32_t n) {
    const CoeffRow row = row_closed_form(n);
    const MomentSummary moments = moment_summary(n);

    RowDistribution dist;
    dist.n = n;
    dist.mu = moments.mu.to_double();
    dist.sigma = std::sqrt(moments.sigma2.to_double());
    dist.pmf.reserve(row.coeffs.size());
    dist.cdf.reserve(row.coeffs.size());
    ExactInt partial;
    for (const auto& c : row.coeffs) {
        partial += c;
        dist.pmf.push_back(quotient_to_double(c, moments.u));
        dist.cdf.push_back(quotient_to_double(partial, moments.u));
    }
    return dist;
}

HarperModel harper_model(std::uint32_t n) {
    require_two(n, "harper_model");
    HarperModel model;
    model.n = n;
    model.roots.reserve(n);
    for (std::uint32_t j = 1; j < n; ++j) {
        model.roots.push_back(2.0 - 2.0 * std::cos(static_cast<double>(j) * std::numbers::pi / n));
    }
    model.roots.push_back(0.0);

    // Each factor is q + p x with p = 1/(1+r), q = r/(1+r).
    std::vector<double> poly{1.0};
    poly.reserve(n + 1);
    for (double r : model.roots) {
        const double p = 1.0 / (1.0 + r);
        const double q = r / (1.0 + r);
        model.success_probs.push_back(p);
        poly.push_back(0.0);
        for (std::size_t k = poly.size() - 1; k > 0; --k) {
            poly[k] = q * poly[k] + p * poly[k - 1];
        }
        poly[0] *= q;
    }
    model.distribution = std::move(poly);

    const RowDistribution exact = row_distribution(n);
    for (std::size_t k = 0; k <= n; ++k) {
        model.max_error = std::max(model.max_error, std::abs(model.distribution[k] - exact.pmf[k]));
    }
    if (!(model.max_error <= kHarperTolerance)) {
        throw VerificationFailure("Harper reconstruction of row " + std::to_string(n) + " is off by " +
                                  std::to_string(model.max_error));
    }
    return model;
}

BernoulliMoments bernoulli_moments(double root) {
    const double s = 1.0 + root;
    return {1.0 / s, root / (s * s), root * (1.0 + root * root) / (s * s * s * s)};
}

bool third_moment_bound_check(std::uint32_t n) {
    require_two(n, "third_moment_bound_check");
    for (std::uint32_t j = 1; j <= n; ++j) {
        const double r = (j == n) ? 0.0 : 2.0 - 2.0 * std::cos(static_cast<double>(j) * std::numbers::pi / n);
        const BernoulliMoments m = bernoulli_moments(r);
        if (m.abs_third > m.variance + 1e-12) {
            return false;
        }
    }
    return true;
}

double local_limit_error(const RowDistribution& dist, const Grid& grid) {
    if (!(grid.lo < grid.hi) || grid.steps < 2) {
        throw std::invalid_argument("local_limit_error: need lo < hi and steps >= 2");
    }
    const auto last = static_cast<std::int64_t>(dist.pmf.size()) - 1;
    double sup = 0.0;
    for (std::uint32_t i = 0; i < grid.steps; ++i) {
        const double x = grid.lo + (grid.hi - grid.lo) * static_cast<double>(i) / (grid.steps - 1);
        const double position = std::floor(dist.mu + x * dist.sigma);
        double mass = 0.0;
        if (position >= 0.0 && position <= static_cast<double>(last)) {
            mass = dist.pmf[static_cast<std::size_t>(position)];
        }
        sup = std::max(sup, std::abs(dist.sigma * mass - normal_pdf(x)));
    }
    return sup;
}

double local_limit_error(std::uint32_t n, double x_lo, double x_hi, std::uint32_t steps) {
    require_two(n, "local_limit_error");
    return local_limit_error(row_distribution(n), Grid{x_lo, x_hi, steps});
}

CltReport kolmogorov_distance(const RowDistribution& dist, const Grid& local_grid) {
    require_two(dist.n, "kolmogorov_distance");
    CltReport report;
    report.n = dist.n;
    report.mu = dist.mu;
    report.sigma = dist.sigma;
    report.be_bound = kBerryEsseenConstant / dist.sigma;

    // Between jumps the empirical CDF is flat and Phi is monotone, so the
    // supremum is attained at a jump, approached from the left or the right.
    double below = 0.0;
    for (std::size_t k = 0; k < dist.cdf.size(); ++k) {
        const double phi = normal_cdf((static_cast<double>(k) - dist.mu) / dist.sigma);
        report.kolmogorov = std::max({report.kolmogorov, std::abs(dist.cdf[k] - phi), std::abs(below - phi)});
        below = dist.cdf[k];
    }
    report.local_sup_error = local_limit_error(dist, local_grid);

    if (report.kolmogorov > report.be_bound) {
        throw VerificationFailure("row " + std::to_string(dist.n) + ": Kolmogorov distance " +
                                  std::to_string(report.kolmogorov) + " exceeds the Berry-Esseen bound " +
                                  std::to_string(report.be_bound));
    }
    return report;
}

CltReport kolmogorov_distance(std::uint32_t n, const Grid& local_grid) {
    require_two(n, "kolmogorov_distance");
    return kolmogorov_distance(row_distribution(n), local_grid);
}

LocalLimitRow table2_row(std::uint32_t n) {
    require_two(n, "table2_row");
    // floor(n / sqrt 5) = isqrt(floor(n^2 / 5))
    const std::uint64_t nn = n;
    const std::uint64_t m = isqrt(ExactInt(nn * nn / 5)).to_u64();
    const ExactInt central = binom(nn + m - 1, 2 * static_cast<std::int64_t>(m) - 1);

    LocalLimitRow row;
    row.n = n;
    row.ratio = quotient_to_double(central, fib(2 * nn));
    const double root_n = std::sqrt(static_cast<double>(n));
    const double scale = 2.0 * std::sqrt(std::numbers::pi) * root_n / std::pow(5.0, 0.75);
    row.scaled_error = std::abs(scale * row.ratio - 1.0) * root_n;
    return row;
}

std::vector<std::uint32_t> table2_reference_ns() {
    std::vector<std::uint32_t> ns;
    for (std::uint32_t n = 2; n <= 10; ++n) {
        ns.push_back(n);
    }
    for (std::uint32_t n = 20; n <= 100; n += 10) {
        ns.push_back(n);
    }
    for (std::uint32_t n = 200; n <= 1000; n += 100) {
        ns.push_back(n);
    }
    return ns;
}

double dominant_pole(double s) {
    // Reciprocal of the larger root 1 + e^s/2 + sqrt(e^{2s}/4 + e^s); the two
    // roots of t^2 - (2 + e^s) t + 1 multiply to 1. Avoids the cancellation
    // in 1 + e^s/2 - sqrt(...).
    const double x = std::exp(s);
    return 1.0 / (1.0 + 0.5 * x + std::sqrt(0.25 * x * x + x));
}

namespace {

SingularityConstants finish(double r0, double r1, double r2) {
    SingularityConstants c{r0, r1, r2, 0.0, 0.0};
    c.a = -r1 / r0;
    c.b2 = c.a * c.a - r2 / r0;
    return c;
}

}  // namespace

SingularityConstants singularity_constants() {
    const double sqrt5 = std::sqrt(5.0);
    const SingularityConstants c =
        finish((3.0 - sqrt5) / 2.0, 0.5 - 3.0 / (2.0 * sqrt5), 0.5 - 11.0 / (10.0 * sqrt5));
    if (std::abs(c.a - 1.0 / sqrt5) > 1e-12 || std::abs(c.b2 - 2.0 / (5.0 * sqrt5)) > 1e-12 || !(c.b2 > 0.0)) {
        throw VerificationFailure("singularity constants disagree with a = 1/sqrt5, b^2 = 2/(5 sqrt5)");
    }
    return c;
}

SingularityConstants singularity_constants_numeric(double h) {
    if (!(h >= 1e-6 && h <= 1e-2)) {
        throw std::invalid_argument("singularity_constants_numeric: step must lie in [1e-6, 1e-2]");
    }
    const double r0 = dominant_pole(0.0);
    const double rp = dominant_pole(h);
    const double rm = dominant_pole(-h);
    return finish(r0, (rp - rm) / (2.0 * h), (rp - 2.0 * r0 + rm) / (h * h));
}

}  // namespace mvoyce
