#include "tailsum/refined_approx.hpp"

#include <cmath>
#include <stdexcept>

#include "tailsum/errors.hpp"
#include "tailsum/math_util.hpp"
#include "tailsum/parallel.hpp"

namespace tailsum {

namespace {

void require_ladder(const ApproxConfig& cfg, const GammaLadder& ladder) {
    if (ladder.k() != cfg.k)
        throw std::domain_error("draw: ladder length does not match config k");
}

void require_k(const ApproxConfig& cfg) {
    if (cfg.k < 1 || cfg.k >= cfg.n)
        throw std::domain_error("draw: requires 1 <= k < n");
}

// n^xi omega sum Gamma_i^{-xi}  and  -n^xi (omega/(1-xi)) Gamma_k^{1-xi}.
double evt_terms(std::int64_t n, const TailParams& p, const GammaLadder& ladder) {
    const double nxi = pow_pos(static_cast<double>(n), p.xi);
    double sum = 0.0;
    for (double g : ladder.gammas) sum += pow_pos(g, -p.xi);
    return nxi * p.omega * (sum - pow_pos(ladder.last(), 1.0 - p.xi) / (1.0 - p.xi));
}

Draw assemble(std::int64_t n, double evt, double var_arg, bool clamp_candidate, double z) {
    Draw d;
    double v = var_arg;
    if (clamp_candidate && v < 0.0) {
        v = 0.0;
        d.clamped = true;
    }
    d.value = evt + std::sqrt(static_cast<double>(n)) * std::sqrt(v) * z;
    return d;
}

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::FiniteVariance: return "finite-variance";
        case Variant::Unified: return "unified";
        case Variant::SimplifiedSigmaTau: return "simplified-sigma-tau";
        case Variant::SimplifiedNoIntegral: return "simplified-no-integral";
        case Variant::Shifted: return "shifted";
        case Variant::TwoSided: return "two-sided";
        case Variant::NormalBaseline: return "normal-baseline";
        case Variant::StableBaseline: return "stable-baseline";
    }
    return "unified";
}

Variant variant_from_name(const std::string& name) {
    // Accept a "refined-" prefix on the refined forms.
    const std::string stripped =
        name.rfind("refined-", 0) == 0 ? name.substr(8) : name;
    for (Variant v :
         {Variant::FiniteVariance, Variant::Unified, Variant::SimplifiedSigmaTau,
          Variant::SimplifiedNoIntegral, Variant::Shifted, Variant::TwoSided,
          Variant::NormalBaseline, Variant::StableBaseline})
        if (variant_name(v) == stripped) return v;
    throw std::invalid_argument("unknown variant: " + name);
}

double scaling_a_n(double n, double xi) {
    if (n < 2.0) throw std::domain_error("scaling_a_n: n must be >= 2");
    if (xi == 0.5) return 1.0 / std::sqrt(n * std::log(n));
    return pow_pos(n, -std::max(xi, 0.5));
}

double truncation_index(std::int64_t n, int k, double xi) {
    return pow_pos(static_cast<double>(n) / k, xi);
}

Draw draw_finite_variance(const ApproxConfig& cfg, const TailParams& params,
                          double sigma0_sq, const GammaLadder& ladder, double z) {
    if (!(params.xi < 0.5))
        throw unsupported_variant("finite-variance form requires xi < 1/2");
    require_k(cfg);
    require_ladder(cfg, ladder);
    const double evt = evt_terms(cfg.n, params, ladder);
    const double ratio = ladder.last() / static_cast<double>(cfg.n);
    const double var_arg = sigma0_sq - params.omega * params.omega /
                                           (1.0 - 2.0 * params.xi) *
                                           pow_pos(ratio, 1.0 - 2.0 * params.xi);
    return assemble(cfg.n, evt, var_arg, true, z);
}

Draw draw_unified(const ApproxConfig& cfg, const TailParams& params, double sigma_sq_at_un,
                  const GammaLadder& ladder, double z) {
    return draw_shifted(cfg, TailParams{params.xi, params.omega, params.delta, params.x0, 0.0},
                        ShiftedSigma::TailIntegral, {}, sigma_sq_at_un, ladder, z);
}

Draw draw_simplified_sigma_tau(const ApproxConfig& cfg, const TailParams& params,
                               const std::function<double(double)>& sigma_sq_at,
                               const GammaLadder& ladder, double z) {
    require_k(cfg);
    require_ladder(cfg, ladder);
    const double evt = evt_terms(cfg.n, params, ladder);
    const double tau =
        params.omega * pow_pos(static_cast<double>(cfg.n) / ladder.last(), params.xi);
    return assemble(cfg.n, evt, sigma_sq_at(tau), true, z);
}

Draw draw_simplified_no_integral(const ApproxConfig& cfg, const TailParams& params,
                                 double sigma_sq_at_un, const GammaLadder& ladder,
                                 double z) {
    require_k(cfg);
    require_ladder(cfg, ladder);
    const double evt = evt_terms(cfg.n, params, ladder);
    return assemble(cfg.n, evt, sigma_sq_at_un, true, z);
}

Draw draw_shifted(const ApproxConfig& cfg, const TailParams& params, ShiftedSigma mode,
                  const std::function<double(double)>& sigma_sq_at, double sigma_sq_at_un,
                  const GammaLadder& ladder, double z) {
    require_k(cfg);
    require_ladder(cfg, ladder);
    double evt = evt_terms(cfg.n, params, ladder);
    if (params.kappa != 0.0) evt += params.kappa * (cfg.k - ladder.last());
    const double x = pow_pos(static_cast<double>(cfg.n) / ladder.last(), params.xi);
    if (mode == ShiftedSigma::Exact) {
        const double var = sigma_sq_at(params.omega * x + params.kappa);
        return assemble(cfg.n, evt, var, true, z);
    }
    const double u_n = truncation_index(cfg.n, cfg.k, params.xi);
    const double var_arg = sigma_sq_at_un + variance_increment(params, x, u_n);
    return assemble(cfg.n, evt, var_arg, true, z);
}

Draw draw_two_sided(const TwoSidedConfig& cfg, std::int64_t n, double sigma_sq_base,
                    const GammaLadder& right_ladder, const GammaLadder& left_ladder,
                    double z) {
    if (right_ladder.k() != cfg.k_right || left_ladder.k() != cfg.k_left)
        throw std::domain_error("draw_two_sided: ladder lengths do not match config");
    const TailParams& r = cfg.right;
    const TailParams& l = cfg.left;
    const double right_block = evt_terms(n, r, right_ladder);
    const double left_block = evt_terms(n, l, left_ladder);
    double var_arg = sigma_sq_base;
    // Integral corrections anchored at v_n, u_n; dropped for xi > 1/2.
    if (r.xi <= 0.5) {
        const double y = pow_pos(static_cast<double>(n) / right_ladder.last(), r.xi);
        var_arg += variance_increment(r, y, truncation_index(n, cfg.k_right, r.xi));
    }
    if (l.xi <= 0.5) {
        const double x = pow_pos(static_cast<double>(n) / left_ladder.last(), l.xi);
        var_arg += variance_increment(l, x, truncation_index(n, cfg.k_left, l.xi));
    }
    return assemble(n, right_block - left_block, var_arg, true, z);
}

Draw draw_normal_baseline(std::int64_t n, double sigma0_sq, double z) {
    if (!(sigma0_sq > 0.0) || !std::isfinite(sigma0_sq))
        throw unsupported_variant("normal baseline requires a finite positive sigma0_sq");
    return {std::sqrt(static_cast<double>(n)) * std::sqrt(sigma0_sq) * z, false};
}

Draw draw_stable_baseline(std::int64_t n, const TailParams& params, int truncation,
                          RngStream& stream) {
    if (!(params.xi > 0.5))
        throw unsupported_variant("stable baseline requires xi > 1/2");
    const double s = stable_limit_sample(params.xi, params.omega, truncation, stream);
    return {pow_pos(static_cast<double>(n), params.xi) * s, false};
}

SampleResult sample_approx(const ApproxConfig& cfg, const ApproxInputs& in,
                           std::int64_t reps, std::uint64_t seed, std::uint64_t task,
                           int workers) {
    if (reps < 1) throw std::domain_error("sample_approx: reps must be >= 1");
    // Validate variant/parameter combinations up front so a bad config fails
    // before any sampling.
    switch (cfg.variant) {
        case Variant::FiniteVariance:
            if (!(in.params.xi < 0.5))
                throw unsupported_variant("finite-variance form requires xi < 1/2");
            require_k(cfg);
            break;
        case Variant::StableBaseline:
            if (!(in.params.xi > 0.5))
                throw unsupported_variant("stable baseline requires xi > 1/2");
            break;
        case Variant::NormalBaseline:
            if (!(in.sigma0_sq > 0.0) || !std::isfinite(in.sigma0_sq))
                throw unsupported_variant("normal baseline requires finite sigma0_sq");
            break;
        case Variant::TwoSided:
            if (!in.two_sided) throw std::invalid_argument("two-sided config missing");
            break;
        default:
            require_k(cfg);
            break;
    }

    double scale = 1.0;
    if (cfg.comparison_scale) {
        double xi = in.params.xi;
        if (cfg.variant == Variant::TwoSided)
            xi = std::max(in.two_sided->right.xi, in.two_sided->left.xi);
        scale = scaling_a_n(static_cast<double>(cfg.n), xi);
    }

    SampleResult result;
    result.values.resize(static_cast<std::size_t>(reps));
    std::vector<std::int64_t> clamps(static_cast<std::size_t>(std::max(workers, 1)), 0);

    parallel_for_chunks(reps, workers, [&](int w, std::int64_t lo, std::int64_t hi) {
        for (std::int64_t r = lo; r < hi; ++r) {
            RngStream rs(seed, task, static_cast<std::uint64_t>(r));
            Draw d;
            switch (cfg.variant) {
                case Variant::FiniteVariance: {
                    GammaLadder ladder = sample_ladder(cfg.k, rs);
                    d = draw_finite_variance(cfg, in.params, in.sigma0_sq, ladder,
                                             draw_normal(rs));
                    break;
                }
                case Variant::Unified: {
                    GammaLadder ladder = sample_ladder(cfg.k, rs);
                    d = draw_unified(cfg, in.params, in.sigma_sq_at_un, ladder,
                                     draw_normal(rs));
                    break;
                }
                case Variant::SimplifiedSigmaTau: {
                    GammaLadder ladder = sample_ladder(cfg.k, rs);
                    d = draw_simplified_sigma_tau(cfg, in.params, in.sigma_sq_at, ladder,
                                                  draw_normal(rs));
                    break;
                }
                case Variant::SimplifiedNoIntegral: {
                    GammaLadder ladder = sample_ladder(cfg.k, rs);
                    d = draw_simplified_no_integral(cfg, in.params, in.sigma_sq_at_un,
                                                    ladder, draw_normal(rs));
                    break;
                }
                case Variant::Shifted: {
                    GammaLadder ladder = sample_ladder(cfg.k, rs);
                    d = draw_shifted(cfg, in.params, in.shifted_mode, in.sigma_sq_at,
                                     in.sigma_sq_at_un, ladder, draw_normal(rs));
                    break;
                }
                case Variant::TwoSided: {
                    GammaLadder right = sample_ladder(in.two_sided->k_right, rs);
                    GammaLadder left = sample_ladder(in.two_sided->k_left, rs);
                    d = draw_two_sided(*in.two_sided, cfg.n, in.two_sided_sigma_base, right,
                                       left, draw_normal(rs));
                    break;
                }
                case Variant::NormalBaseline:
                    d = draw_normal_baseline(cfg.n, in.sigma0_sq, draw_normal(rs));
                    break;
                case Variant::StableBaseline:
                    d = draw_stable_baseline(cfg.n, in.params, in.stable_truncation, rs);
                    break;
            }
            result.values[static_cast<std::size_t>(r)] = scale * d.value;
            if (d.clamped) ++clamps[static_cast<std::size_t>(w)];
        }
    });
    for (std::int64_t c : clamps) result.clamp_count += c;
    return result;
}

}  // namespace tailsum
