#ifndef TAILSUM_ERROR_RATES_HPP
#define TAILSUM_ERROR_RATES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tailsum {

// Optimal-rate description for one (xi, delta): k* grows like n^{alpha*} and
// the bound decays like n^{beta*}.
struct RateSpec {
    double alpha_star = 0.0;
    double beta_star = 0.0;
    std::int64_t k_star = 0;
    std::string regime;  // which rate-formula piece applied
};

// Upper bound R(k, n, xi, delta) on the Kolmogorov error of the refined
// approximation; the two xi-regimes differ in their first term.
double rate_bound(std::int64_t k, std::int64_t n, double xi, double delta);

double alpha_star(double xi, double delta);
double beta_star(double xi, double delta);
std::string rate_regime(double xi, double delta);

// Error-rate exponent of the first-order limit: 1 - 1/(2 xi) (normal) for
// xi < 1/2, max(1 - 2 xi, -delta) (stable) for xi > 1/2. xi = 1/2 converges
// at a logarithmic rate and carries no finite exponent.
double benchmark_exponent(double xi, double delta);
bool benchmark_is_logarithmic(double xi);

// max(1, round(multiplier * n^{alpha*})) capped at n-1; 0 when the refined rate
// loses to the normal benchmark (use the plain normal approximation instead).
std::int64_t k_star(std::int64_t n, double xi, double delta, double multiplier = 1.0);

// Exact integer minimizer of R over k in [1, n-1] (R is convex in log k).
struct RateMinimum {
    std::int64_t k = 1;
    double value = 0.0;
};
RateMinimum min_rate_over_k(std::int64_t n, double xi, double delta);

struct RateCurveRow {
    double xi = 0.0;
    double alpha_star = 0.0;
    double beta_star = 0.0;
    double benchmark = 0.0;  // NaN when the benchmark is logarithmic
    std::string regime;
};

std::vector<RateCurveRow> rate_curves(const std::vector<double>& xi_grid, double delta);

}  // namespace tailsum

#endif
