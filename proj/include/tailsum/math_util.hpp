#ifndef TAILSUM_MATH_UTIL_HPP
#define TAILSUM_MATH_UTIL_HPP

#include <cmath>

namespace tailsum {

// x^p for x > 0 via exp/log, one rounding each; keeps power chains
// reproducible across platforms and never trips pow() edge cases.
inline double pow_pos(double x, double p) {
    if (p == 0.0) return 1.0;
    return std::exp(p * std::log(x));
}

}  // namespace tailsum

#endif
