#pragma once

// Power-series solutions R(xi) = xi^|g| exp(-xi^2/2) sum_j c_j xi^j of
//   -R'' - R'/xi + g^2 R/xi^2 - a R/xi + xi^2 R = W R
// and the polynomial (truncated) solutions obtained by forcing
// W = 2n + 2|g| + 2 together with c_{n+1}(a) = 0.

#include <cstddef>
#include <variant>
#include <vector>

#include "coulho/numerics/poly_roots.hpp"
#include "coulho/numerics/rational_poly.hpp"
#include "coulho/numerics/real.hpp"

namespace coulho {

/// The pair (gamma, a) fixing the radial operator. Only |gamma| matters.
struct ProblemSpec {
  double gamma = 0.0;
  double a = 0.0;

  double abs_gamma() const;
  /// Throws std::invalid_argument when either value is not finite.
  void validate() const;
};

struct SeriesState {
  ProblemSpec spec;
  double W = 0.0;
  std::vector<double> coefficients;  // c_0 .. c_jmax, c_0 = 1
};

/// Polynomial in a with extended-precision coefficients, used when |gamma|
/// is not a small rational.
struct ExtRealPoly {
  std::vector<ext_real> coefficients;  // ascending
};

using TruncationPolynomial = std::variant<RationalPoly, ExtRealPoly>;

struct TruncationSolution {
  int n = 0;
  double gamma = 0.0;
  double W = 0.0;  // 2n + 2|gamma| + 2
  TruncationPolynomial poly;
  RootSet roots;
  /// max over roots of max_{n<j<=n+10} |c_j| / max_{j<=n} |c_j|
  double termination_residual = 0.0;

  bool exact() const { return std::holds_alternative<RationalPoly>(poly); }
  std::vector<double> poly_coefficients() const;
};

inline constexpr double kTerminationTolerance = 1e-10;

/// Runs the three-term recurrence for c_0..c_jmax.
SeriesState recurrence_coeffs(const ProblemSpec& spec, double W, std::size_t jmax);

/// W = 2n + 2|gamma| + 2.
double truncation_energy(int n, double gamma);

/// c_{n+1} as a polynomial in a (degree n+1), exact when |gamma| is a
/// rational with denominator <= 10^6, extended precision otherwise.
TruncationPolynomial truncation_polynomial(int n, double gamma);
/// Exact version for a rational |gamma|.
RationalPoly truncation_polynomial_exact(int n, const Rational& abs_gamma);

/// W together with the sorted real roots a^(k) of c_{n+1}(a).
TruncationSolution truncation_spectrum(int n, double gamma, double tol = kDefaultRootTolerance);

/// max_{n<j<=n+extra} |c_j| / max_{j<=n} |c_j| for the numerical recurrence.
double termination_ratio(int n, double gamma, double a, int extra = 10);

/// xi^|g| exp(-xi^2/2) sum_{j<=jmax} c_j xi^j, summed in log-magnitude form.
double evaluate_radial(const ProblemSpec& spec, double W, std::size_t jmax, double xi);

}  // namespace coulho
