#ifndef TAILSUM_REFINED_APPROX_HPP
#define TAILSUM_REFINED_APPROX_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tailsum/gamma_ladder.hpp"
#include "tailsum/rng.hpp"
#include "tailsum/tail_model.hpp"

namespace tailsum {

enum class Variant {
    FiniteVariance,       // sigma0^2-based form, xi < 1/2
    Unified,              // truncated-variance form, any 1/3 < xi < 1
    SimplifiedSigmaTau,   // variance term replaced by sigma^2 at the random threshold
    SimplifiedNoIntegral, // variance term frozen at sigma^2(omega u_n)
    Shifted,              // shifted-Pareto form with the kappa(k - Gamma_k) correction
    TwoSided,             // both tails approximately Pareto
    NormalBaseline,
    StableBaseline,
};

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct ApproxConfig {
    std::int64_t n = 0;
    int k = 1;                     // upper order statistics retained; unused by baselines
    Variant variant = Variant::Unified;
    bool comparison_scale = true;  // multiply draws by a_n
};

// Comparison scale a_n: (n log n)^{-1/2} at xi = 1/2, n^{-max(xi,1/2)} otherwise.
double scaling_a_n(double n, double xi);

// u_n = (n/k)^xi, the deterministic truncation index of the unified form.
double truncation_index(std::int64_t n, int k, double xi);

struct Draw {
    double value = 0.0;
    bool clamped = false;  // positive-part clamp on the variance argument fired
};

// How the shifted form sources its conditional standard deviation.
enum class ShiftedSigma {
    Exact,         // sigma^2(omega (n/Gamma_k)^xi + kappa) from an accessor
    TailIntegral,  // (sigma^2(omega u_n) + (omega^2/xi) integral)_+ further approximation
};

Draw draw_finite_variance(const ApproxConfig& cfg, const TailParams& params,
                          double sigma0_sq, const GammaLadder& ladder, double z);

Draw draw_unified(const ApproxConfig& cfg, const TailParams& params, double sigma_sq_at_un,
                  const GammaLadder& ladder, double z);

Draw draw_simplified_sigma_tau(const ApproxConfig& cfg, const TailParams& params,
                               const std::function<double(double)>& sigma_sq_at,
                               const GammaLadder& ladder, double z);

Draw draw_simplified_no_integral(const ApproxConfig& cfg, const TailParams& params,
                                 double sigma_sq_at_un, const GammaLadder& ladder, double z);

Draw draw_shifted(const ApproxConfig& cfg, const TailParams& params, ShiftedSigma mode,
                  const std::function<double(double)>& sigma_sq_at, double sigma_sq_at_un,
                  const GammaLadder& ladder, double z);

// Independent Pareto-like left and right tails (Remark-3 construction).
struct TwoSidedConfig {
    TailParams right;
    TailParams left;
    int k_right = 1;
    int k_left = 1;
};

Draw draw_two_sided(const TwoSidedConfig& cfg, std::int64_t n, double sigma_sq_base,
                    const GammaLadder& right_ladder, const GammaLadder& left_ladder,
                    double z);

Draw draw_normal_baseline(std::int64_t n, double sigma0_sq, double z);

Draw draw_stable_baseline(std::int64_t n, const TailParams& params, int truncation,
                          RngStream& stream);

// Everything a bulk sampler may need; unused members can stay unset.
struct ApproxInputs {
    TailParams params{};
    double sigma0_sq = 0.0;
    double sigma_sq_at_un = 0.0;
    std::function<double(double)> sigma_sq_at;  // truncated variance accessor t -> sigma^2(t)
    ShiftedSigma shifted_mode = ShiftedSigma::Exact;
    int stable_truncation = kDefaultStableTruncation;
    std::optional<TwoSidedConfig> two_sided;
    double two_sided_sigma_base = 0.0;
};

struct SampleResult {
    std::vector<double> values;
    std::int64_t clamp_count = 0;
};

// reps independent draws of the configured variant. Replicate r consumes the
// substream (seed, task, r), so the ensemble is invariant to worker count.
SampleResult sample_approx(const ApproxConfig& cfg, const ApproxInputs& in,
                           std::int64_t reps, std::uint64_t seed, std::uint64_t task = 0,
                           int workers = 1);

}  // namespace tailsum

#endif
