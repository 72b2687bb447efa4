#ifndef TAILSUM_GAMMA_LADDER_HPP
#define TAILSUM_GAMMA_LADDER_HPP

#include <vector>

#include "tailsum/rng.hpp"

namespace tailsum {

// Arrival times of a unit-rate Poisson process: Gamma_1 < Gamma_2 < ... < Gamma_k.
struct GammaLadder {
    std::vector<double> gammas;
    int k() const { return static_cast<int>(gammas.size()); }
    double last() const { return gammas.back(); }
};

// Cumulative sums of k unit-rate exponentials drawn by inversion from the stream.
GammaLadder sample_ladder(int k, RngStream& stream);

// E[Gamma_i^{-xi}] = Gamma(i - xi) / Gamma(i).
double expected_inverse_power(int i, double xi);

// sum_{i<=k} Gamma_i^{-xi} - Gamma_k^{1-xi} / (1 - xi); mean-zero by the
// identity E[Gamma_k^{1-xi}] = (1 - xi) sum_{i<=k} E[Gamma_i^{-xi}].
double centered_partial_sum(const GammaLadder& ladder, double xi);

// Realization of the one-sided stable limit as the long-ladder limit of the
// centered partial sum, scaled by omega. Requires xi > 1/2.
double stable_limit_sample(double xi, double omega, int truncation, RngStream& stream);

inline constexpr int kDefaultStableTruncation = 20000;

}  // namespace tailsum

#endif
