#pragma once

#include "coulho/numerics/real.hpp"

namespace coulho {

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);
ext_real log_gamma(const ext_real& x);

}  // namespace coulho
