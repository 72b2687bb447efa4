// Independent reference implementations used only by the test suite.
// Everything here is computed from density formulas with a hand-rolled
// adaptive Simpson rule -- deliberately sharing no code with the library's
// closed forms or tanh-sinh quadrature.
#ifndef TAILSUM_TESTS_ORACLE_HPP
#define TAILSUM_TESTS_ORACLE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double m,
                      double b, double fa, double fm, double fb, double whole,
                      double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0) return left + right;
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, m, b, fa, fm, fb, whole, tol, 52);
}

// ---- centered Pareto: X = Y - omega/(1-xi), Y ~ Pareto(1/xi, omega) ----

struct ParetoOracle {
    double xi, omega;
    double shape() const { return 1.0 / xi; }
    double center() const { return omega / (1.0 - xi); }
    double cdf(double x) const {
        const double y = x + center();
        if (y <= omega) return 0.0;
        return 1.0 - std::pow(y / omega, -shape());
    }
    // E[X^j | X <= t] via integration in the raw-Pareto variable.
    double cond_moment(int j, double t) const {
        const double a = shape(), c = center();
        const double T = t + c;
        if (T <= omega) throw std::domain_error("oracle: below support");
        const double F = cdf(t);
        auto f = [&](double y) {
            double p = 1.0;
            for (int i = 0; i < j; ++i) p *= (y - c);
            return p * a * std::pow(omega, a) * std::pow(y, -a - 1.0);
        };
        return integrate(f, omega, T) / F;
    }
};

// ---- student-t(nu), mean zero ----

struct StudentOracle {
    double nu;
    double log_norm() const {
        return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
               0.5 * std::log(nu * std::acos(-1.0));
    }
    double pdf(double x) const {
        return std::exp(log_norm() - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
    }
    // integral_L^infty s^j pdf(s) ds, L > 0, via u = s^{-nu} followed by
    // u = w^{nu/(nu-j)} which removes the endpoint singularity.
    double tail_moment(int j, double L) const {
        if (j >= nu) throw std::domain_error("oracle: tail moment diverges");
        const double p = nu / (nu - j);
        const double ulim = std::pow(L, -nu);
        const double wmax = std::pow(ulim, 1.0 / p);
        auto g = [&](double w) {
            if (w <= 0.0) return 0.0;
            const double u = std::pow(w, p);
            const double s = std::pow(u, -1.0 / nu);
            double sj = 1.0;
            for (int i = 0; i < j; ++i) sj *= s;
            return sj * pdf(s) * (1.0 / nu) * std::pow(u, -1.0 / nu - 1.0) * p *
                   std::pow(w, p - 1.0);
        };
        return integrate(g, 0.0, wmax);
    }
    // integral_{-infty}^t x^j pdf dx
    double lower_moment(int j, double t) const {
        const double L = 8.0;
        const double sign = (j % 2 == 1) ? -1.0 : 1.0;
        double total = sign * tail_moment(j, L);  // (-inf, -L]
        auto f = [&](double x) {
            double p = 1.0;
            for (int i = 0; i < j; ++i) p *= x;
            return p * pdf(x);
        };
        if (t <= -L) {
            // subtract the part of the tail above t: integral_{-inf}^{t}
            return sign * tail_moment(j, -t);
        }
        total += integrate(f, -L, std::min(t, L));
        if (t > L) total += tail_moment(j, L) - tail_moment(j, t);
        return total;
    }
    double cdf(double t) const { return lower_moment(0, t); }
    double cond_moment(int j, double t) const {
        const double F = cdf(t);
        if (!(F > 0.0)) throw std::domain_error("oracle: F(t) = 0");
        return lower_moment(j, t) / F;
    }
};

// ---- centered Frechet(alpha): X = Y - Gamma(1 - 1/alpha), Y ~ Frechet ----

struct FrechetOracle {
    double alpha;
    double center() const { return std::tgamma(1.0 - 1.0 / alpha); }
    double cdf(double x) const {
        const double y = x + center();
        if (y <= 0.0) return 0.0;
        return std::exp(-std::pow(y, -alpha));
    }
    // E[X^j 1{X <= t}] = integral_{u=(t+m)^{-alpha}}^{infty} (u^{-1/a}-m)^j e^{-u} du
    double lower_moment(int j, double t) const {
        const double m = center();
        const double T = t + m;
        if (T <= 0.0) throw std::domain_error("oracle: below support");
        const double ulo = std::pow(T, -alpha);
        auto g = [&](double u) {
            const double x = std::pow(u, -1.0 / alpha) - m;
            double p = 1.0;
            for (int i = 0; i < j; ++i) p *= x;
            return p * std::exp(-u);
        };
        return integrate(g, ulo, ulo + 120.0);
    }
    double cond_moment(int j, double t) const {
        const double F = cdf(t);
        if (!(F > 0.0)) throw std::domain_error("oracle: F(t) = 0");
        return lower_moment(j, t) / F;
    }
};

struct CondMoments {
    double mu, sigma_sq;
};

template <class O>
CondMoments cond_mu_sigma(const O& o, double t) {
    const double m1 = o.cond_moment(1, t);
    const double m2 = o.cond_moment(2, t);
    return {m1, m2 - m1 * m1};
}

}  // namespace oracle

#endif
