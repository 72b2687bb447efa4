#include "tailsum/rng.hpp"

#include <boost/math/distributions/normal.hpp>

namespace tailsum {

namespace {
const boost::math::normal_distribution<double> unit_normal{};
}

double norm_quantile(double p) { return boost::math::quantile(unit_normal, p); }

double norm_cdf(double z) { return boost::math::cdf(unit_normal, z); }

}  // namespace tailsum
