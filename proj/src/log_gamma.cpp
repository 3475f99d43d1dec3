#include "coulho/numerics/log_gamma.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace coulho {
namespace {

// Report every error as an exception and never touch errno, so concurrent
// callers share no state.
using Policy = boost::math::policies::policy<boost::math::policies::domain_error<boost::math::policies::throw_on_error>,
                                             boost::math::policies::pole_error<boost::math::policies::throw_on_error>,
                                             boost::math::policies::overflow_error<boost::math::policies::throw_on_error>,
                                             boost::math::policies::promote_double<false>>;

template <class Real>
Real log_gamma_impl(const Real& x) {
  if (!(x > 0)) throw std::domain_error("log_gamma: argument must be positive");
  int sign = 0;
  return boost::math::lgamma(x, &sign, Policy());
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("log_gamma: argument must be finite");
  return log_gamma_impl(x);
}

ext_real log_gamma(const ext_real& x) { return log_gamma_impl(x); }

}  // namespace coulho
