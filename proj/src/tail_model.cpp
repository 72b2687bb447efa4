#include "tailsum/tail_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <nlohmann/json.hpp>

#include "tailsum/errors.hpp"
#include "tailsum/math_util.hpp"

namespace tailsum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kQuadTol = 1e-12;

template <class F>
double quad_finite(F&& f, double a, double b) {
    static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    if (a == b) return 0.0;
    return integrator.integrate(std::forward<F>(f), a, b, kQuadTol);
}

template <class F>
double quad_upper(F&& f, double a) {
    static thread_local boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate([&](double u) { return f(a + u); }, kQuadTol);
}

boost::math::students_t_distribution<double> t_dist(double nu) {
    return boost::math::students_t_distribution<double>(nu);
}

// Partial raw moment of the Pareto(shape a, scale omega) density on [l, h]:
// integral_l^h u^j a omega^a u^{-a-1} du, with the log branch at j == a.
double pareto_partial_moment(double a, double omega, int j, double l, double h) {
    const double p = static_cast<double>(j) - a;
    const double lead = a * pow_pos(omega, a);
    if (std::abs(p) < 1e-12) return lead * std::log(h / l);
    return lead * (pow_pos(h, p) - pow_pos(l, p)) / p;
}

// log of the student-t density, stable for arbitrarily large |x|.
double log_student_pdf(double nu, double x) {
    const double log_c = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                         0.5 * std::log(nu * boost::math::constants::pi<double>());
    const double ax = std::abs(x);
    const double l2 = ax > 1e8 ? 2.0 * std::log(ax) - std::log(nu) + std::log1p(nu / (ax * ax))
                               : std::log1p(ax * ax / nu);
    return log_c - 0.5 * (nu + 1.0) * l2;
}

// Upper-tail moment integral_t^infty x^j dF for the student-t, t > 0,
// via the substitution u = x^{-nu} that flattens the algebraic tail. The
// integrand is assembled in log space: near u = 0 the x = u^{-1/nu} factor
// overflows double range long before the product stops being integrable.
double student_tail_moment(double nu, double t, int j) {
    const double xi = 1.0 / nu;
    const double b = pow_pos(t, -nu);
    const double log_c = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                         0.5 * std::log(nu * boost::math::constants::pi<double>());
    auto g = [&](double u) {
        if (u <= 0.0) return 0.0;  // integrable endpoint singularity
        const double log_x = -xi * std::log(u);
        const double log_pdf =
            log_x > 690.0
                ? log_c - 0.5 * (nu + 1.0) * (2.0 * log_x - std::log(nu))
                : log_student_pdf(nu, std::exp(log_x));
        return std::exp(std::log(xi) + (-j * xi - xi - 1.0) * std::log(u) + log_pdf);
    };
    return quad_finite(g, 0.0, b);
}

// integral_t^infty x^j dF for the student-t, any finite t.
double student_upper_moment(double nu, double t, int j) {
    const double split = 1.0;
    auto dist = t_dist(nu);
    if (t >= split) return student_tail_moment(nu, t, j);
    auto f = [&](double x) {
        return pow_pos(std::abs(x), static_cast<double>(j)) *
               (j % 2 == 1 && x < 0 ? -1.0 : 1.0) * boost::math::pdf(dist, x);
    };
    return quad_finite(f, t, split) + student_tail_moment(nu, split, j);
}

// For the centered Frechet the substitution u = (x + m)^{-alpha} turns every
// moment integral into a finite-or-exponentially-damped integral in u:
// integral_t^infty (x)^j dF = integral_0^{(t+m)^{-alpha}} (u^{-1/alpha}-m)^j e^{-u} du.
double frechet_upper_moment(double alpha, double m, double t, int j) {
    const double ulim = pow_pos(t + m, -alpha);
    auto g = [&](double u) {
        const double x = pow_pos(u, -1.0 / alpha) - m;
        double xj = 1.0;
        for (int i = 0; i < j; ++i) xj *= x;
        return xj * std::exp(-u);
    };
    return quad_finite(g, 0.0, ulim);
}

double frechet_lower_moment(double alpha, double m, double t, int j) {
    const double ulim = pow_pos(t + m, -alpha);
    auto g = [&](double u) {
        const double x = pow_pos(u, -1.0 / alpha) - m;
        double xj = 1.0;
        for (int i = 0; i < j; ++i) xj *= x;
        return xj * std::exp(-u);
    };
    return quad_upper(g, ulim);
}

// Scan |h(x)| = |f(x) omega xi (x/omega)^{1/xi+1} - 1| on a geometric grid and
// return the smallest grid point beyond which it stays below 1/2.
double scan_x0(const DistributionSpec& spec) {
    const TailParams& p = spec.params();
    const double lo = std::max(0.5, support_lower(spec) + 0.01);
    const double hi = 1e9;
    const int npts = 600;
    double x0 = lo;
    const double step = std::log(hi / lo) / (npts - 1);
    for (int i = npts - 1; i >= 0; --i) {
        const double x = lo * std::exp(i * step);
        const double ref =
            std::exp(-std::log(p.omega * p.xi) - (1.0 / p.xi + 1.0) * std::log(x / p.omega));
        const double h = pdf(spec, x) / ref - 1.0;
        if (std::abs(h) > 0.5) {
            x0 = lo * std::exp(std::min(i + 1, npts - 1) * step);
            break;
        }
    }
    return x0;
}

}  // namespace

void TailParams::validate() const {
    if (!(xi >= 1.0 / 3.0 && xi < 1.0))
        throw std::invalid_argument("TailParams: xi must lie in [1/3, 1)");
    if (!(omega > 0.0)) throw std::invalid_argument("TailParams: omega must be positive");
    if (!(x0 > 0.0)) throw std::invalid_argument("TailParams: x0 must be positive");
    if (!std::isnan(delta) && !(delta > 0.0))
        throw std::invalid_argument("TailParams: delta must be positive");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::CenteredPareto: return "centered-pareto";
        case Family::StudentT: return "student-t";
        case Family::FrechetCentered: return "frechet-centered";
        case Family::Custom: return "custom";
    }
    return "custom";
}

Family family_from_name(const std::string& name) {
    if (name == "centered-pareto") return Family::CenteredPareto;
    if (name == "student-t") return Family::StudentT;
    if (name == "frechet-centered") return Family::FrechetCentered;
    if (name == "custom") return Family::Custom;
    throw std::invalid_argument("unknown family: " + name);
}

DistributionSpec DistributionSpec::centered_pareto(double xi, double omega) {
    if (!(xi >= 1.0 / 3.0 && xi < 1.0))
        throw std::invalid_argument("centered_pareto: xi must lie in [1/3, 1)");
    if (!(omega > 0.0)) throw std::invalid_argument("centered_pareto: omega must be positive");
    DistributionSpec s;
    s.family_ = Family::CenteredPareto;
    s.center_ = omega / (1.0 - xi);
    s.params_.xi = xi;
    s.params_.omega = omega;
    s.params_.delta = xi;  // mean-centering limits the Pareto neighborhood to delta <= xi
    s.params_.kappa = 0.0;
    // |h(x)| = 1 - (1 + m/x)^{-1/xi-1} <= 1/2 from x0 on, in closed form.
    s.params_.x0 = s.center_ / (pow_pos(2.0, xi / (1.0 + xi)) - 1.0);
    return s;
}

DistributionSpec DistributionSpec::student_t(double nu) {
    if (!(nu > 1.0 && nu <= 3.0))
        throw std::invalid_argument("student_t: nu must lie in (1, 3]");
    DistributionSpec s;
    s.family_ = Family::StudentT;
    s.shape_ = nu;
    s.center_ = 0.0;
    s.params_.xi = 1.0 / nu;
    // Match 1 - F(x) ~ omega^{nu} x^{-nu}: omega = (A/nu)^{1/nu} with A the
    // density's tail coefficient.
    const double log_c = std::lgamma((nu + 1.0) / 2.0) - std::lgamma(nu / 2.0) -
                         0.5 * std::log(nu * M_PI);
    const double log_a = log_c + 0.5 * (nu + 1.0) * std::log(nu);
    s.params_.omega = std::exp((log_a - std::log(nu)) / nu);
    s.params_.delta = 2.0 / nu;
    s.params_.x0 = 1.0;
    s.params_.x0 = scan_x0(s);
    return s;
}

DistributionSpec DistributionSpec::frechet_centered(double alpha) {
    if (!(alpha > 1.0 && alpha < 3.0 + 1e-12))
        throw std::invalid_argument("frechet_centered: alpha must lie in (1, 3]");
    DistributionSpec s;
    s.family_ = Family::FrechetCentered;
    s.shape_ = alpha;
    s.center_ = std::tgamma(1.0 - 1.0 / alpha);
    s.params_.xi = 1.0 / alpha;
    s.params_.omega = 1.0;
    s.params_.delta = 1.0;
    s.params_.x0 = 1.0;
    s.params_.x0 = scan_x0(s);
    return s;
}

DistributionSpec DistributionSpec::custom(TailParams params) {
    params.validate();
    DistributionSpec s;
    s.family_ = Family::Custom;
    s.params_ = params;
    return s;
}

void to_json(nlohmann::json& j, const DistributionSpec& spec) {
    j = nlohmann::json{{"family", family_name(spec.family())},
                       {"xi", spec.params().xi},
                       {"omega", spec.params().omega},
                       {"delta", spec.params().delta},
                       {"x0", spec.params().x0},
                       {"kappa", spec.params().kappa},
                       {"extra", nlohmann::json::object()}};
    if (spec.family() == Family::StudentT) j["extra"]["nu"] = spec.shape();
    if (spec.family() == Family::FrechetCentered) j["extra"]["alpha"] = spec.shape();
}

DistributionSpec spec_from_json(const nlohmann::json& j) {
    const Family fam = family_from_name(j.at("family").get<std::string>());
    DistributionSpec s = [&] {
        switch (fam) {
            case Family::CenteredPareto:
                return DistributionSpec::centered_pareto(j.at("xi").get<double>(),
                                                         j.value("omega", 1.0));
            case Family::StudentT:
                return DistributionSpec::student_t(j.at("extra").at("nu").get<double>());
            case Family::FrechetCentered:
                return DistributionSpec::frechet_centered(
                    j.at("extra").at("alpha").get<double>());
            case Family::Custom: {
                TailParams p;
                p.xi = j.at("xi").get<double>();
                p.omega = j.at("omega").get<double>();
                p.delta = j.value("delta", std::numeric_limits<double>::quiet_NaN());
                p.x0 = j.value("x0", 1.0);
                return DistributionSpec::custom(p);
            }
        }
        throw std::invalid_argument("bad family");
    }();
    if (j.contains("delta") && !j.at("delta").is_null()) s.params().delta = j.at("delta");
    if (j.contains("x0") && !j.at("x0").is_null()) s.params().x0 = j.at("x0");
    if (j.contains("kappa") && !j.at("kappa").is_null()) s.params().kappa = j.at("kappa");
    return s;
}

double support_lower(const DistributionSpec& spec) {
    switch (spec.family()) {
        case Family::CenteredPareto: return spec.params().omega - spec.center();
        case Family::StudentT: return -kInf;
        case Family::FrechetCentered: return -spec.center();
        case Family::Custom: break;
    }
    throw unsupported_variant("custom specs are parameters-only");
}

double pdf(const DistributionSpec& spec, double x) {
    const TailParams& p = spec.params();
    switch (spec.family()) {
        case Family::CenteredPareto: {
            const double w = x + spec.center();
            if (w < p.omega) return 0.0;
            const double a = 1.0 / p.xi;
            return a / p.omega * pow_pos(w / p.omega, -a - 1.0);
        }
        case Family::StudentT:
            return boost::math::pdf(t_dist(spec.shape()), x);
        case Family::FrechetCentered: {
            const double w = x + spec.center();
            if (w <= 0.0) return 0.0;
            const double alpha = spec.shape();
            return alpha * pow_pos(w, -alpha - 1.0) * std::exp(-pow_pos(w, -alpha));
        }
        case Family::Custom: break;
    }
    throw unsupported_variant("custom specs are parameters-only");
}

double cdf(const DistributionSpec& spec, double x) {
    const TailParams& p = spec.params();
    switch (spec.family()) {
        case Family::CenteredPareto: {
            const double w = x + spec.center();
            if (w <= p.omega) return 0.0;
            return 1.0 - pow_pos(w / p.omega, -1.0 / p.xi);
        }
        case Family::StudentT:
            return boost::math::cdf(t_dist(spec.shape()), x);
        case Family::FrechetCentered: {
            const double w = x + spec.center();
            if (w <= 0.0) return 0.0;
            return std::exp(-pow_pos(w, -spec.shape()));
        }
        case Family::Custom: break;
    }
    throw unsupported_variant("custom specs are parameters-only");
}

double quantile(const DistributionSpec& spec, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("quantile: p must lie in (0,1)");
    switch (spec.family()) {
        case Family::CenteredPareto:
            return spec.params().omega * pow_pos(1.0 - p, -spec.params().xi) - spec.center();
        case Family::StudentT:
            return boost::math::quantile(t_dist(spec.shape()), p);
        case Family::FrechetCentered:
            return pow_pos(-std::log(p), -1.0 / spec.shape()) - spec.center();
        case Family::Custom: break;
    }
    throw unsupported_variant("custom specs are parameters-only");
}

DistributionSummary summary(const DistributionSpec& spec) {
    DistributionSummary s;
    const double xi = spec.params().xi;
    switch (spec.family()) {
        case Family::CenteredPareto: {
            const double omega = spec.params().omega;
            if (xi < 0.5)
                s.sigma0_sq = xi * xi * omega * omega /
                              ((1.0 - xi) * (1.0 - xi) * (1.0 - 2.0 * xi));
            else
                s.sigma0_sq = kInf;
            break;
        }
        case Family::StudentT: {
            const double nu = spec.shape();
            s.sigma0_sq = nu > 2.0 ? nu / (nu - 2.0) : kInf;
            break;
        }
        case Family::FrechetCentered: {
            const double alpha = spec.shape();
            s.sigma0_sq = alpha > 2.0
                              ? std::tgamma(1.0 - 2.0 / alpha) - spec.center() * spec.center()
                              : kInf;
            break;
        }
        case Family::Custom:
            throw unsupported_variant("custom specs are parameters-only");
    }
    s.finite_variance = std::isfinite(s.sigma0_sq);
    return s;
}

std::vector<double> sample_iid(const DistributionSpec& spec, std::int64_t count,
                               RngStream& stream) {
    if (count < 1) throw std::domain_error("sample_iid: count must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (auto& v : out) v = quantile(spec, stream.uniform());
    return out;
}

TruncatedMoments truncated_moments(const DistributionSpec& spec, double t) {
    TruncatedMoments m;
    switch (spec.family()) {
        case Family::CenteredPareto: {
            const TailParams& p = spec.params();
            const double a = 1.0 / p.xi;
            const double shift = spec.center();
            const double tp = t + shift;
            if (tp <= p.omega) throw std::domain_error("truncated_moments: F(t) = 0");
            const double F = 1.0 - pow_pos(tp / p.omega, -a);
            const double e1 = pareto_partial_moment(a, p.omega, 1, p.omega, tp) / F;
            const double e2 = pareto_partial_moment(a, p.omega, 2, p.omega, tp) / F;
            m.mu = e1 - shift;
            m.sigma_sq = e2 - e1 * e1;
            const double c = e1;
            auto M = [&](int j, double l, double h) {
                return pareto_partial_moment(a, p.omega, j, l, h);
            };
            const double low = c * c * c * M(0, p.omega, c) - 3.0 * c * c * M(1, p.omega, c) +
                               3.0 * c * M(2, p.omega, c) - M(3, p.omega, c);
            const double high = M(3, c, tp) - 3.0 * c * M(2, c, tp) +
                                3.0 * c * c * M(1, c, tp) - c * c * c * M(0, c, tp);
            m.abs3 = (low + high) / F;
            return m;
        }
        case Family::StudentT: {
            const double nu = spec.shape();
            const double F = cdf(spec, t);
            if (!(F > 0.0)) throw std::domain_error("truncated_moments: F(t) = 0");
            const double T1 = student_upper_moment(nu, t, 1);
            m.mu = -T1 / F;
            if (nu > 2.0) {
                const double s0 = nu / (nu - 2.0);
                const double T2 = student_upper_moment(nu, t, 2);
                m.sigma_sq = (s0 - T2) / F - m.mu * m.mu;
            } else {
                m.sigma_sq = kInf;  // heavy left tail: second moment diverges
            }
            m.abs3 = kInf;  // |x|^3 not integrable on the left for nu <= 3
            return m;
        }
        case Family::FrechetCentered: {
            const double alpha = spec.shape();
            const double shift = spec.center();
            if (t + shift <= 0.0) throw std::domain_error("truncated_moments: F(t) = 0");
            const double F = cdf(spec, t);
            const double T1 = frechet_upper_moment(alpha, shift, t, 1);
            m.mu = -T1 / F;
            if (alpha > 2.0) {
                const double s0 = summary(spec).sigma0_sq;
                const double T2 = frechet_upper_moment(alpha, shift, t, 2);
                m.sigma_sq = (s0 - T2) / F - m.mu * m.mu;
            } else {
                m.sigma_sq = frechet_lower_moment(alpha, shift, t, 2) / F - m.mu * m.mu;
            }
            // Third absolute central moment, split at the conditional mean.
            const double c = m.mu;
            const double ulim = pow_pos(t + shift, -alpha);
            const double ustar = pow_pos(c + shift, -alpha);
            auto g3 = [&](double u) {
                const double d = pow_pos(u, -1.0 / alpha) - shift - c;
                return std::abs(d * d * d) * std::exp(-u);
            };
            m.abs3 = (quad_finite(g3, ulim, ustar) + quad_upper(g3, ustar)) / F;
            return m;
        }
        case Family::Custom:
            throw unsupported_variant("custom specs are parameters-only");
    }
    throw unsupported_variant("bad family");
}

double doubly_truncated_variance(const DistributionSpec& spec, double lo, double hi) {
    if (!(lo < hi)) throw std::domain_error("doubly_truncated_variance: lo must be < hi");
    const double P = cdf(spec, hi) - cdf(spec, lo);
    if (!(P > 0.0)) throw std::domain_error("doubly_truncated_variance: empty window");
    const double e1 = quad_finite([&](double x) { return x * pdf(spec, x); }, lo, hi) / P;
    const double e2 =
        quad_finite([&](double x) { return x * x * pdf(spec, x); }, lo, hi) / P;
    return e2 - e1 * e1;
}

double mu_tail_approx(const TailParams& params, double x) {
    if (x < params.x0)
        throw std::domain_error("mu_tail_approx: x below the tail-onset threshold x0");
    if (!(x > params.omega)) throw std::domain_error("mu_tail_approx: x must exceed omega");
    const double xi = params.xi;
    const double num = pow_pos(params.omega, 1.0 / xi) * pow_pos(x, 1.0 - 1.0 / xi);
    const double den = (1.0 - xi) * (1.0 - pow_pos(x / params.omega, -1.0 / xi));
    return -num / den;
}

double sigma_sq_tail_approx(const TailParams& params, double sigma0_sq, double x) {
    if (!(params.xi < 0.5))
        throw unsupported_variant("sigma_sq_tail_approx requires xi < 1/2");
    if (x < params.x0)
        throw std::domain_error("sigma_sq_tail_approx: x below the tail-onset threshold x0");
    const double xi = params.xi;
    return sigma0_sq -
           pow_pos(params.omega, 1.0 / xi) * pow_pos(x, 2.0 - 1.0 / xi) / (1.0 - 2.0 * xi);
}

double variance_increment(const TailParams& params, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::domain_error("variance_increment: x and y must be positive");
    const double xi = params.xi;
    const double w2 = params.omega * params.omega;
    const double p = 2.0 - 1.0 / xi;
    if (std::abs(p) < 1e-12) return 2.0 * w2 * std::log(x / y);
    return (w2 / xi) * (pow_pos(x, p) - pow_pos(y, p)) / p;
}

double default_delta(const DistributionSpec& spec) {
    switch (spec.family()) {
        case Family::StudentT: return 2.0 * spec.params().xi;
        case Family::FrechetCentered: return 1.0;
        case Family::CenteredPareto:
            // Shifted treatment recovers an exact Pareto tail, where delta is
            // unbounded; cap it so rate formulas stay finite.
            return spec.params().kappa != 0.0 ? kShiftedParetoDeltaCap : spec.params().xi;
        case Family::Custom:
            if (std::isnan(spec.params().delta) || !(spec.params().delta > 0.0))
                throw std::invalid_argument("default_delta: custom family needs delta");
            return spec.params().delta;
    }
    throw std::invalid_argument("bad family");
}

CachedVariance::CachedVariance(const DistributionSpec& spec, double t_min, double t_max,
                               int grid_size)
    : spec_(spec), lo_(t_min), hi_(t_max) {
    if (!(t_min > 0.0 && t_max > t_min) || grid_size < 4)
        throw std::invalid_argument("CachedVariance: bad grid");
    log_t_.resize(grid_size);
    val_.resize(grid_size);
    const double l0 = std::log(t_min), l1 = std::log(t_max);
    for (int i = 0; i < grid_size; ++i) {
        log_t_[i] = l0 + (l1 - l0) * i / (grid_size - 1);
        val_[i] = truncated_moments(spec_, std::exp(log_t_[i])).sigma_sq;
    }
    // Fritsch-Carlson monotone cubic slopes.
    const int n = grid_size;
    std::vector<double> d(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        d[i] = (val_[i + 1] - val_[i]) / (log_t_[i + 1] - log_t_[i]);
    slope_.resize(n);
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (int i = 1; i + 1 < n; ++i)
        slope_[i] = (d[i - 1] * d[i] > 0.0) ? 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i]) : 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            slope_[i] = slope_[i + 1] = 0.0;
        } else {
            const double a = slope_[i] / d[i], b = slope_[i + 1] / d[i];
            const double s = a * a + b * b;
            if (s > 9.0) {
                const double tau = 3.0 / std::sqrt(s);
                slope_[i] = tau * a * d[i];
                slope_[i + 1] = tau * b * d[i];
            }
        }
    }
}

double CachedVariance::operator()(double t) const {
    if (!(t >= lo_ && t <= hi_)) return truncated_moments(spec_, t).sigma_sq;
    const double lt = std::log(t);
    const auto it = std::upper_bound(log_t_.begin(), log_t_.end(), lt);
    const int i = std::clamp(static_cast<int>(it - log_t_.begin()) - 1, 0,
                             static_cast<int>(log_t_.size()) - 2);
    const double h = log_t_[i + 1] - log_t_[i];
    const double s = (lt - log_t_[i]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    return h00 * val_[i] + h10 * h * slope_[i] + h01 * val_[i + 1] + h11 * h * slope_[i + 1];
}

}  // namespace tailsum
