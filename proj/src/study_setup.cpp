#include "tailsum/study_setup.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "tailsum/error_rates.hpp"
#include "tailsum/errors.hpp"
#include "tailsum/math_util.hpp"

namespace tailsum {

namespace {

// Truncated-variance accessor: closed form for centered-pareto, a log-grid
// cache around the typical threshold range otherwise (direct evaluation
// outside the grid).
std::function<double(double)> variance_accessor(const DistributionSpec& spec) {
    if (spec.family() == Family::StudentT && spec.shape() <= 2.0)
        throw unsupported_variant(
            "one-sided truncated variance diverges for student-t with nu <= 2; "
            "use variant two-sided or stable-baseline");
    if (spec.family() == Family::CenteredPareto)
        return [spec](double t) { return truncated_moments(spec, t).sigma_sq; };
    const double lo = std::max(0.25, support_lower(spec) + 0.05);
    const double hi = spec.params().omega * 1e8;
    auto cache = std::make_shared<CachedVariance>(spec, lo, hi, 2048);
    return [cache](double t) { return (*cache)(t); };
}

DistributionSpec with_shift(const DistributionSpec& spec) {
    DistributionSpec s = spec;
    if (s.params().kappa == 0.0 && s.family() == Family::CenteredPareto)
        s.params().kappa = -s.params().omega / (1.0 - s.params().xi);
    return s;
}

}  // namespace

double effective_delta(const DistributionSpec& spec, Variant v,
                       const StudySetupOptions& opt) {
    if (!std::isnan(opt.delta)) return opt.delta;
    if (v == Variant::Shifted) return default_delta(with_shift(spec));
    return default_delta(spec);
}

StudyVariant make_study_variant(const DistributionSpec& spec, Variant v,
                                const StudySetupOptions& opt) {
    StudyVariant sv;
    sv.variant = v;
    sv.label = variant_name(v);

    const DistributionSpec eff_spec = v == Variant::Shifted ? with_shift(spec) : spec;
    const double delta = effective_delta(spec, v, opt);
    const double xi = eff_spec.params().xi;

    if (v == Variant::NormalBaseline || v == Variant::StableBaseline) {
        sv.k_for_n = [](std::int64_t) { return 1; };
    } else if (opt.fixed_k > 0) {
        const int k = opt.fixed_k;
        sv.k_for_n = [k](std::int64_t) { return k; };
    } else {
        const double mult = opt.k_multiplier;
        sv.k_for_n = [xi, delta, mult](std::int64_t n) {
            const std::int64_t k = k_star(n, xi, delta, mult);
            if (k == 0)
                throw std::invalid_argument(
                    "k* = 0: the refined form loses to the normal baseline here; "
                    "use variant normal-baseline");
            return static_cast<int>(k);
        };
    }

    switch (v) {
        case Variant::FiniteVariance:
        case Variant::NormalBaseline: {
            const DistributionSummary sum = summary(spec);
            if (!sum.finite_variance)
                throw unsupported_variant(variant_name(v) + " requires finite variance");
            const TailParams params = spec.params();
            const double s0 = sum.sigma0_sq;
            sv.inputs_for = [params, s0](std::int64_t, int) {
                ApproxInputs in;
                in.params = params;
                in.sigma0_sq = s0;
                return in;
            };
            break;
        }
        case Variant::Unified:
        case Variant::SimplifiedNoIntegral: {
            auto acc = variance_accessor(spec);
            const TailParams params = spec.params();
            sv.inputs_for = [params, acc](std::int64_t n, int k) {
                ApproxInputs in;
                in.params = params;
                in.sigma_sq_at_un =
                    acc(params.omega * truncation_index(n, k, params.xi));
                return in;
            };
            break;
        }
        case Variant::SimplifiedSigmaTau: {
            auto acc = variance_accessor(spec);
            const TailParams params = spec.params();
            sv.inputs_for = [params, acc](std::int64_t, int) {
                ApproxInputs in;
                in.params = params;
                in.sigma_sq_at = acc;
                return in;
            };
            break;
        }
        case Variant::Shifted: {
            auto acc = variance_accessor(spec);
            const TailParams params = eff_spec.params();
            const ShiftedSigma mode = opt.shifted_mode;
            sv.inputs_for = [params, acc, mode](std::int64_t n, int k) {
                ApproxInputs in;
                in.params = params;
                in.shifted_mode = mode;
                in.sigma_sq_at = acc;
                if (mode == ShiftedSigma::TailIntegral)
                    in.sigma_sq_at_un =
                        acc(params.omega * truncation_index(n, k, params.xi));
                return in;
            };
            break;
        }
        case Variant::TwoSided: {
            if (spec.family() != Family::StudentT)
                throw unsupported_variant(
                    "two-sided form requires a family with two Pareto-like tails");
            const DistributionSpec s = spec;
            sv.inputs_for = [s](std::int64_t n, int k) {
                ApproxInputs in;
                in.params = s.params();
                TwoSidedConfig ts;
                ts.right = s.params();
                ts.left = s.params();  // symmetric tails
                ts.k_right = ts.k_left = k;
                const double u_n = truncation_index(n, k, ts.right.xi);
                const double v_n = truncation_index(n, k, ts.left.xi);
                in.two_sided_sigma_base = doubly_truncated_variance(
                    s, -ts.left.omega * v_n, ts.right.omega * u_n);
                in.two_sided = ts;
                return in;
            };
            break;
        }
        case Variant::StableBaseline: {
            if (!(spec.params().xi > 0.5))
                throw unsupported_variant("stable baseline requires xi > 1/2");
            const TailParams params = spec.params();
            const int trunc = opt.stable_truncation;
            sv.inputs_for = [params, trunc](std::int64_t, int) {
                ApproxInputs in;
                in.params = params;
                in.stable_truncation = trunc;
                return in;
            };
            break;
        }
    }
    return sv;
}

}  // namespace tailsum
