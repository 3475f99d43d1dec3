#pragma once

#include <cmath>
#include <limits>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace coulho {

/// 50 significant decimal digits. The monomial-Gaussian overlap matrix has
/// a condition number near 1e33 at N = 30, which is far past what double
/// (or quad) can factor.
using ext_real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                               boost::multiprecision::et_off>;

template <class Real>
inline constexpr bool is_builtin_float_v = std::is_floating_point_v<Real>;

template <class Real>
Real real_abs(const Real& x) {
  using std::abs;
  return abs(x);
}

template <class Real>
Real real_sqrt(const Real& x) {
  using std::sqrt;
  return sqrt(x);
}

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

/// Relative off-diagonal threshold for the Jacobi sweeps.
template <class Real>
Real jacobi_default_tolerance() {
  if constexpr (std::numeric_limits<Real>::digits <= 64) {
    return Real(1e-14);
  } else {
    return Real(1e-30);
  }
}

}  // namespace coulho
