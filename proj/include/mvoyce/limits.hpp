// Asymptotic checks for the distribution P(X_n = k) = A(n,k) / F_2n:
// Harper's Bernoulli factorization, the Kolmogorov distance to the normal
// law versus the Berry-Esseen bound, local-limit errors, and the dominant
// singularity constants of the bivariate generating function.
//
// Everything here is 64-bit floating point. Inputs that need exactness
// (row entries, partial sums, F_2n) are computed upstream in exact
// arithmetic and converted once.
#pragma once

#include <cstdint>
#include <vector>

namespace mvoyce {

inline constexpr double kBerryEsseenConstant = 0.7975;

double normal_cdf(double x);
double normal_pdf(double x);

/// Normalized row n as floats: pmf[k] = A(n,k)/F_2n, cdf[k] = sum_{i<=k} pmf[i]
/// (partial sums taken exactly before conversion), plus mu_n and sigma_n.
struct RowDistribution {
    std::uint32_t n = 0;
    double mu = 0.0;
    double sigma = 0.0;
    std::vector<double> pmf;
    std::vector<double> cdf;
};

RowDistribution row_distribution(std::uint32_t n);

struct HarperModel {
    std::uint32_t n = 0;
    /// r_j = 2 - 2cos(j pi / n) for j = 1..n-1, then the zero root.
    std::vector<double> roots;
    /// 1 / (1 + r_j)
    std::vector<double> success_probs;
    /// Coefficients of prod_j (x + r_j)/(1 + r_j), k = 0..n.
    std::vector<double> distribution;
    /// max_k |distribution[k] - A(n,k)/F_2n|
    double max_error = 0.0;
};

inline constexpr double kHarperTolerance = 1e-9;

/// Requires n >= 2. Throws VerificationFailure if the reconstruction misses
/// the exact distribution by more than kHarperTolerance.
HarperModel harper_model(std::uint32_t n);

struct BernoulliMoments {
    double mean = 0.0;
    double variance = 0.0;
    double abs_third = 0.0;  ///< E|X - EX|^3
};

/// Moments of the Bernoulli factor with root r: P(X=1) = 1/(1+r).
BernoulliMoments bernoulli_moments(double root);

/// Every factor of row n has E|X - EX|^3 <= Var X (tolerance 1e-12).
bool third_moment_bound_check(std::uint32_t n);

struct Grid {
    double lo = -3.0;
    double hi = 3.0;
    std::uint32_t steps = 601;
};

struct CltReport {
    std::uint32_t n = 0;
    double kolmogorov = 0.0;
    double be_bound = 0.0;
    double mu = 0.0;
    double sigma = 0.0;
    double local_sup_error = 0.0;
};

/// Kolmogorov distance between the row distribution and N(mu_n, sigma_n^2),
/// evaluated at the jump points. Requires n >= 2; throws VerificationFailure
/// if the distance exceeds 0.7975 / sigma_n.
CltReport kolmogorov_distance(std::uint32_t n, const Grid& local_grid = {});
CltReport kolmogorov_distance(const RowDistribution& dist, const Grid& local_grid = {});

/// sup over the grid of |sigma_n A*(n, floor(mu_n + x sigma_n)) - phi(x)|.
double local_limit_error(std::uint32_t n, double x_lo, double x_hi, std::uint32_t steps);
double local_limit_error(const RowDistribution& dist, const Grid& grid);

struct LocalLimitRow {
    std::uint32_t n = 0;
    double ratio = 0.0;
    double scaled_error = 0.0;
};

/// With m = floor(n / sqrt 5): ratio = C(n+m-1, 2m-1) / F_2n and
/// scaled_error = |2 sqrt(pi n) / 5^(3/4) * ratio - 1| * sqrt(n).
LocalLimitRow table2_row(std::uint32_t n);

/// The n values of the published local-limit table.
std::vector<std::uint32_t> table2_reference_ns();

struct SingularityConstants {
    double r0 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double a = 0.0;
    double b2 = 0.0;
};

/// The pole of 1/(1 - e^s G(t)) closest to the origin,
/// r(s) = 1 + e^s/2 - sqrt(e^{2s}/4 + e^s).
double dominant_pole(double s);

/// r(0), r'(0), r''(0) from their closed forms; a = -r'/r, b^2 = a^2 - r''/r.
SingularityConstants singularity_constants();

/// Same constants with r'(0) and r''(0) from central differences at step h,
/// 1e-6 <= h <= 1e-2.
SingularityConstants singularity_constants_numeric(double h);

}  // namespace mvoyce
