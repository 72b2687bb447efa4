#include "tailsum/error_rates.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tailsum/math_util.hpp"

namespace tailsum {

namespace {

void check_domain(double xi, double delta) {
    if (!(xi > 1.0 / 3.0 - 1e-12 && xi < 1.0))
        throw std::domain_error("rate formulas require xi in (1/3, 1)");
    if (!(delta > 0.0)) throw std::domain_error("rate formulas require delta > 0");
}

}  // namespace

double rate_bound(std::int64_t k, std::int64_t n, double xi, double delta) {
    check_domain(xi, delta);
    if (k < 1 || k >= n) throw std::domain_error("rate_bound: requires 1 <= k < n");
    const double kd = static_cast<double>(k), nd = static_cast<double>(n);
    const double shared = pow_pos(kd / nd, delta) * std::sqrt(kd) + kd / nd;
    if (xi < 0.5)
        return pow_pos(nd, -0.5) * pow_pos(nd / kd, 3.0 * xi - 1.0) + shared;
    return pow_pos(kd, -xi) + shared;
}

double alpha_star(double xi, double delta) {
    check_domain(xi, delta);
    if (xi < 0.5) {
        const double a = (6.0 * xi - 1.0) / (6.0 * xi);
        const double b = (6.0 * xi + 2.0 * delta - 3.0) / (6.0 * xi + 2.0 * delta - 1.0);
        return std::max(std::min(a, b), 0.0);
    }
    return std::min(2.0 * delta / (1.0 + 2.0 * (delta + xi)), 1.0 / (1.0 + xi));
}

double beta_star(double xi, double delta) {
    check_domain(xi, delta);
    if (xi < 0.5) {
        if (delta <= 3.0 * (0.5 - xi)) return -delta;
        if (delta <= 0.5 + 3.0 * xi)
            return -(3.0 + 2.0 * delta - 6.0 * xi) / (12.0 * xi + 4.0 * delta - 2.0);
        return -1.0 / (6.0 * xi);
    }
    return -xi * alpha_star(xi, delta);
}

std::string rate_regime(double xi, double delta) {
    check_domain(xi, delta);
    if (xi < 0.5) {
        if (delta <= 3.0 * (0.5 - xi)) return "subnormal-delta-small";
        if (delta <= 0.5 + 3.0 * xi) return "subnormal-delta-mid";
        return "subnormal-delta-large";
    }
    return "stable-regime";
}

double benchmark_exponent(double xi, double delta) {
    check_domain(xi, delta);
    if (xi < 0.5) return 1.0 - 1.0 / (2.0 * xi);
    if (xi > 0.5) return std::max(1.0 - 2.0 * xi, -delta);
    return std::numeric_limits<double>::quiet_NaN();  // logarithmic rate at xi = 1/2
}

bool benchmark_is_logarithmic(double xi) { return xi == 0.5; }

std::int64_t k_star(std::int64_t n, double xi, double delta, double multiplier) {
    check_domain(xi, delta);
    if (n < 2) throw std::domain_error("k_star: n must be >= 2");
    if (!(multiplier > 0.0)) throw std::domain_error("k_star: multiplier must be positive");
    if (xi < 0.5 && beta_star(xi, delta) > benchmark_exponent(xi, delta))
        return 0;  // refined rate loses to the plain normal approximation
    const double raw = multiplier * pow_pos(static_cast<double>(n), alpha_star(xi, delta));
    const auto k = static_cast<std::int64_t>(std::llround(raw));
    return std::min<std::int64_t>(std::max<std::int64_t>(k, 1), n - 1);
}

RateMinimum min_rate_over_k(std::int64_t n, double xi, double delta) {
    check_domain(xi, delta);
    if (n < 2) throw std::domain_error("min_rate_over_k: n must be >= 2");
    // R(e^u) is a positive sum of exponentials in u = log k, hence strictly
    // convex; ternary search over the integers is exact.
    std::int64_t lo = 1, hi = n - 1;
    while (hi - lo > 2) {
        const std::int64_t m1 = lo + (hi - lo) / 3;
        const std::int64_t m2 = hi - (hi - lo) / 3;
        if (rate_bound(m1, n, xi, delta) <= rate_bound(m2, n, xi, delta))
            hi = m2;
        else
            lo = m1;
    }
    RateMinimum best{lo, rate_bound(lo, n, xi, delta)};
    for (std::int64_t k = lo + 1; k <= hi; ++k) {
        const double r = rate_bound(k, n, xi, delta);
        if (r < best.value) best = {k, r};
    }
    return best;
}

std::vector<RateCurveRow> rate_curves(const std::vector<double>& xi_grid, double delta) {
    std::vector<RateCurveRow> rows;
    rows.reserve(xi_grid.size());
    for (double xi : xi_grid) {
        RateCurveRow row;
        row.xi = xi;
        row.alpha_star = alpha_star(xi, delta);
        row.beta_star = beta_star(xi, delta);
        row.benchmark = benchmark_exponent(xi, delta);
        row.regime = rate_regime(xi, delta);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace tailsum
