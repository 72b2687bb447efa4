#ifndef TAILSUM_STUDY_SETUP_HPP
#define TAILSUM_STUDY_SETUP_HPP

#include <limits>

#include "tailsum/mc_harness.hpp"

namespace tailsum {

struct StudySetupOptions {
    int fixed_k = 0;  // 0 = resolve k via k_star per n
    double k_multiplier = 1.0;
    // Effective delta for k* resolution; NaN = family default (shifted
    // centered-pareto uses the capped large value).
    double delta = std::numeric_limits<double>::quiet_NaN();
    int stable_truncation = kDefaultStableTruncation;
    ShiftedSigma shifted_mode = ShiftedSigma::Exact;
    double confidence = 0.99;
};

// Effective neighborhood exponent for a (spec, variant) pair.
double effective_delta(const DistributionSpec& spec, Variant v,
                       const StudySetupOptions& opt);

// Wires a named family into a convergence-study variant: resolves k per n,
// builds the variance accessors (cached where evaluation is by quadrature)
// and the variant-specific scalar inputs.
StudyVariant make_study_variant(const DistributionSpec& spec, Variant v,
                                const StudySetupOptions& opt = {});

}  // namespace tailsum

#endif
