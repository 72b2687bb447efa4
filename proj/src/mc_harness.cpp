#include "tailsum/mc_harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tailsum/errors.hpp"
#include "tailsum/parallel.hpp"

namespace tailsum {

EmpiricalCdf make_ecdf(std::vector<double> sample) {
    if (sample.empty()) throw std::domain_error("make_ecdf: empty sample");
    std::sort(sample.begin(), sample.end());
    return EmpiricalCdf{std::move(sample)};
}

double dkw_margin(std::size_t reps, double confidence) {
    if (reps < 1) throw std::domain_error("dkw_margin: reps must be >= 1");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::domain_error("dkw_margin: confidence must lie in (0,1)");
    return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(reps)));
}

KsResult ks_two_sample(const EmpiricalCdf& a, const EmpiricalCdf& b, double confidence) {
    if (a.values.empty() || b.values.empty())
        throw std::domain_error("ks_two_sample: empty sample");
    const double na = static_cast<double>(a.count());
    const double nb = static_cast<double>(b.count());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.count() && j < b.count()) {
        // Consume every point at the current jump location in both samples,
        // then evaluate the gap just after it.
        const double x = std::min(a.values[i], b.values[j]);
        while (i < a.count() && a.values[i] == x) ++i;
        while (j < b.count() && b.values[j] == x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    KsResult r;
    r.statistic = d;
    r.reps_a = a.count();
    r.reps_b = b.count();
    r.dkw_margin = dkw_margin(std::min(a.count(), b.count()), confidence);
    return r;
}

double ks_against_cdf(const EmpiricalCdf& ecdf, const DistributionSpec& spec) {
    const double n = static_cast<double>(ecdf.count());
    double d = 0.0;
    for (std::size_t i = 0; i < ecdf.count(); ++i) {
        const double F = cdf(spec, ecdf.values[i]);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - F));
        d = std::max(d, std::abs(static_cast<double>(i) / n - F));
    }
    return d;
}

std::vector<double> simulate_true_sums(const DistributionSpec& spec, std::int64_t n,
                                       std::int64_t reps, std::uint64_t seed,
                                       std::uint64_t task, int workers,
                                       std::int64_t budget) {
    if (n < 1 || reps < 1)
        throw std::domain_error("simulate_true_sums: n and reps must be >= 1");
    if (n > budget / reps)
        throw budget_exceeded("simulate_true_sums: n * reps exceeds the replicate budget");
    const double a_n = n >= 2 ? scaling_a_n(static_cast<double>(n), spec.params().xi)
                              : 1.0;
    std::vector<double> out(static_cast<std::size_t>(reps));
    parallel_for_chunks(reps, workers, [&](int, std::int64_t lo, std::int64_t hi) {
        for (std::int64_t r = lo; r < hi; ++r) {
            RngStream rs(seed, task, static_cast<std::uint64_t>(r));
            double s = 0.0;
            for (std::int64_t i = 0; i < n; ++i) s += quantile(spec, rs.uniform());
            out[static_cast<std::size_t>(r)] = a_n * s;
        }
    });
    return out;
}

double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::domain_error("ols_slope: need matching samples of size >= 2");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::domain_error("ols_slope: degenerate x grid");
    return sxy / sxx;
}

double StudyTable::slope_for(const std::string& label) const {
    for (const auto& [l, s] : slopes)
        if (l == label) return s;
    throw std::invalid_argument("no slope for variant: " + label);
}

StudyTable convergence_study(const DistributionSpec& spec,
                             const std::vector<StudyVariant>& variants,
                             const std::vector<std::int64_t>& n_grid, std::int64_t reps,
                             std::uint64_t seed, double confidence, int workers,
                             std::int64_t budget) {
    if (n_grid.size() < 3)
        throw std::domain_error("convergence_study: n grid needs at least 3 points");
    for (std::size_t i = 1; i < n_grid.size(); ++i)
        if (n_grid[i] <= n_grid[i - 1])
            throw std::domain_error("convergence_study: n grid must be increasing");
    // Validate the whole budget before any sampling.
    for (std::int64_t n : n_grid)
        if (n > budget / reps)
            throw budget_exceeded("convergence_study: n * reps exceeds the budget");

    StudyTable table;
    // Distinct task keys per (n, role) so ensembles are independent.
    std::uint64_t task = 1;
    std::vector<std::vector<double>> log_ks(variants.size());
    std::vector<double> log_n;
    for (std::int64_t n : n_grid) {
        const std::uint64_t truth_task = task++;
        EmpiricalCdf truth = make_ecdf(
            simulate_true_sums(spec, n, reps, seed, truth_task, workers, budget));
        log_n.push_back(std::log(static_cast<double>(n)));
        for (std::size_t v = 0; v < variants.size(); ++v) {
            const StudyVariant& sv = variants[v];
            const int k = sv.k_for_n ? sv.k_for_n(n) : 1;
            ApproxConfig cfg{n, k, sv.variant, true};
            ApproxInputs in = sv.inputs_for(n, k);
            SampleResult sample = sample_approx(cfg, in, reps, seed, task++, workers);
            KsResult ks =
                ks_two_sample(truth, make_ecdf(std::move(sample.values)), confidence);
            StudyCell cell;
            cell.n = n;
            cell.variant = sv.label;
            cell.ks = ks.statistic;
            cell.dkw = ks.dkw_margin;
            cell.reps = reps;
            cell.clamp_count = sample.clamp_count;
            cell.noise_limited = ks.statistic < 3.0 * ks.dkw_margin;
            table.cells.push_back(std::move(cell));
            log_ks[v].push_back(std::log(std::max(ks.statistic, 1e-300)));
        }
    }
    for (std::size_t v = 0; v < variants.size(); ++v)
        table.slopes.emplace_back(variants[v].label, ols_slope(log_n, log_ks[v]));
    return table;
}

}  // namespace tailsum
