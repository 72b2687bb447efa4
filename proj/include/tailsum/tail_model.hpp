#ifndef TAILSUM_TAIL_MODEL_HPP
#define TAILSUM_TAIL_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tailsum/rng.hpp"

namespace tailsum {

// Tail description: the right tail density is (omega*xi)^{-1} (x/omega)^{-1/xi-1}
// times a factor within x^{-delta/xi} of one beyond x0. kappa is an optional
// tail shift used by the shifted-Pareto refinement.
struct TailParams {
    double xi = 0.0;     // tail shape, 1/3 <= xi < 1
    double omega = 1.0;  // tail scale, > 0
    double delta = 1.0;  // Pareto-neighborhood exponent, > 0 (NaN = unset)
    double x0 = 1.0;     // tail-onset threshold, > 0
    double kappa = 0.0;  // tail shift

    void validate() const;  // throws std::invalid_argument
};

enum class Family { CenteredPareto, StudentT, FrechetCentered, Custom };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Conditional moments of F truncated at t: mu = E[X | X<=t],
// sigma_sq = Var[X | X<=t], abs3 = E[|X-mu|^3 | X<=t].
// sigma_sq / abs3 are +inf when the corresponding integral diverges
// (two-sided heavy tails with xi >= 1/2 resp. xi >= 1/3 on the left).
struct TruncatedMoments {
    double mu = 0.0;
    double sigma_sq = 0.0;
    double abs3 = 0.0;
};

struct DistributionSummary {
    double sigma0_sq = 0.0;       // unconditional variance; +inf when xi >= 1/2
    bool finite_variance = false;
};

// A concrete mean-zero sampleable family with known tail parameters.
class DistributionSpec {
public:
    static DistributionSpec centered_pareto(double xi, double omega = 1.0);
    static DistributionSpec student_t(double nu);
    static DistributionSpec frechet_centered(double alpha);
    // Custom: parameters only; cdf/sampling are unavailable.
    static DistributionSpec custom(TailParams params);

    Family family() const { return family_; }
    const TailParams& params() const { return params_; }
    TailParams& params() { return params_; }
    // Family-specific shape: nu for student-t, alpha for Frechet.
    double shape() const { return shape_; }
    // Offset subtracted from the raw family to center the mean
    // (omega/(1-xi) for Pareto, Gamma(1-1/alpha) for Frechet, 0 for t).
    double center() const { return center_; }

private:
    DistributionSpec() = default;
    Family family_ = Family::Custom;
    TailParams params_{};
    double shape_ = 0.0;
    double center_ = 0.0;
};

void to_json(nlohmann::json& j, const DistributionSpec& spec);
DistributionSpec spec_from_json(const nlohmann::json& j);

double support_lower(const DistributionSpec& spec);
double pdf(const DistributionSpec& spec, double x);
double cdf(const DistributionSpec& spec, double x);
double quantile(const DistributionSpec& spec, double p);

DistributionSummary summary(const DistributionSpec& spec);

std::vector<double> sample_iid(const DistributionSpec& spec, std::int64_t count,
                               RngStream& stream);

// Truncated conditional moments at t; closed form for centered-pareto,
// adaptive quadrature otherwise. Requires F(t) > 0.
TruncatedMoments truncated_moments(const DistributionSpec& spec, double t);

// Variance of X conditional on lo <= X <= hi (Remark-3 style double truncation).
double doubly_truncated_variance(const DistributionSpec& spec, double lo, double hi);

// Closed-form tail approximation -omega^{1/xi} x^{1-1/xi} / ((1-xi)(1-(x/omega)^{-1/xi}))
// to the truncated mean, valid for x >= x0.
double mu_tail_approx(const TailParams& params, double x);

// sigma0_sq - omega^{1/xi} x^{2-1/xi} / (1-2 xi); finite-variance regime only.
// Not clamped: callers apply the positive part.
double sigma_sq_tail_approx(const TailParams& params, double sigma0_sq, double x);

// (omega^2/xi) * integral_y^x t^{1-1/xi} dt; antisymmetric in (x, y).
double variance_increment(const TailParams& params, double x, double y);

// Family default for the neighborhood exponent delta.
double default_delta(const DistributionSpec& spec);

// Cap used for "arbitrarily large" delta (exact Pareto under the shifted
// treatment); delta-terms beyond this are numerically irrelevant at desk scale.
inline constexpr double kShiftedParetoDeltaCap = 10.0;

// Memoized truncated variance on a log-spaced grid with monotone cubic
// (Fritsch-Carlson) interpolation; falls back to direct evaluation outside
// the grid. Interpolation error budget 1e-6 absolute.
class CachedVariance {
public:
    CachedVariance(const DistributionSpec& spec, double t_min, double t_max,
                   int grid_size = 4096);
    double operator()(double t) const;

private:
    DistributionSpec spec_;
    std::vector<double> log_t_, val_, slope_;
    double lo_, hi_;
};

}  // namespace tailsum

#endif
