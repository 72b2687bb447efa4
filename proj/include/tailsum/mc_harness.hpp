#ifndef TAILSUM_MC_HARNESS_HPP
#define TAILSUM_MC_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tailsum/refined_approx.hpp"
#include "tailsum/tail_model.hpp"

namespace tailsum {

// Sorted sample realizing an empirical CDF.
struct EmpiricalCdf {
    std::vector<double> values;  // nondecreasing
    std::size_t count() const { return values.size(); }
};

EmpiricalCdf make_ecdf(std::vector<double> sample);

struct KsResult {
    double statistic = 0.0;
    double dkw_margin = 0.0;  // at the confidence used to build it
    std::size_t reps_a = 0;
    std::size_t reps_b = 0;
};

// Two-sided DKW bound sqrt(log(2/(1-confidence)) / (2 reps)).
double dkw_margin(std::size_t reps, double confidence);

// Exact sup over pooled jump points of |F_a - F_b|; symmetric in (a, b).
KsResult ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b,
                       double confidence = 0.99);

// One-sample sup |F_hat - F| against an analytic CDF (test/validation helper).
double ks_against_cdf(const EmpiricalCdf& ecdf, const DistributionSpec& spec);

// Hard cap on n * reps per call; exceeding it raises budget_exceeded.
inline constexpr std::int64_t kDefaultSampleBudget = 10'000'000'000;

// reps draws of a_n * S_n, S_n a sum of n i.i.d. draws from spec. Replicate r
// uses substream (seed, task, r): the ensemble is worker-count invariant.
std::vector<double> simulate_true_sums(const DistributionSpec& spec, std::int64_t n,
                                       std::int64_t reps, std::uint64_t seed,
                                       std::uint64_t task = 0, int workers = 1,
                                       std::int64_t budget = kDefaultSampleBudget);

// Ordinary least-squares slope of y on x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y);

// One approximation entering a convergence study: a label plus a family of
// per-n configs (k may depend on n).
struct StudyVariant {
    std::string label;
    Variant variant = Variant::Unified;
    // k for a given n: fixed, or k*-driven; 0 defers to k_star resolution.
    std::function<int(std::int64_t)> k_for_n;
    std::function<ApproxInputs(std::int64_t, int)> inputs_for;  // (n, k) -> inputs
};

struct StudyCell {
    std::int64_t n = 0;
    std::string variant;
    double ks = 0.0;
    double dkw = 0.0;
    std::int64_t reps = 0;
    std::int64_t clamp_count = 0;
    bool noise_limited = false;  // ks < 3 * dkw: slope evidence unreliable
};

struct StudyTable {
    std::vector<StudyCell> cells;
    // label -> fitted log-log slope of ks against n
    std::vector<std::pair<std::string, double>> slopes;
    double slope_for(const std::string& label) const;
};

// For each n: KS between the true-sum ensemble and each variant ensemble,
// then a least-squares slope of log ks vs log n per variant.
StudyTable convergence_study(const DistributionSpec& spec,
                             const std::vector<StudyVariant>& variants,
                             const std::vector<std::int64_t>& n_grid, std::int64_t reps,
                             std::uint64_t seed, double confidence = 0.99,
                             int workers = 1,
                             std::int64_t budget = kDefaultSampleBudget);

}  // namespace tailsum

#endif
