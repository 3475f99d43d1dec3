#pragma once

#include <cstddef>
#include <vector>

#include "coulho/numerics/rational_poly.hpp"
#include "coulho/numerics/real.hpp"

namespace coulho {

/// [lo, hi] contains exactly one distinct real root. lo == hi means the
/// root is the exact rational lo.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
};

struct RootSet {
  std::vector<double> roots;  // strictly increasing
  std::vector<int> multiplicities;
  std::vector<IsolatingInterval> brackets;
  double certified_tolerance = 0.0;

  std::size_t size() const { return roots.size(); }
};

inline constexpr double kDefaultRootTolerance = 1e-13;

/// Number of distinct real roots in (lo, hi] of a square-free polynomial,
/// from the Sturm sequence sign variations.
std::size_t sturm_count(const std::vector<RationalPoly>& sturm, const Rational& lo, const Rational& hi);
std::vector<RationalPoly> sturm_sequence(const RationalPoly& square_free);
/// Distinct real roots overall (sign variations at -inf minus those at +inf).
std::size_t sturm_count_all(const std::vector<RationalPoly>& sturm);

/// All real roots of p, isolated with Sturm sequences and refined by exact
/// bisection to width <= tol (and at least to double precision). Throws std::domain_error for p == 0 or tol <= 0.
RootSet poly_real_roots(const RationalPoly& p, double tol = kDefaultRootTolerance);

/// Real roots of a polynomial with extended-precision coefficients
/// (ascending). Roots are isolated between consecutive critical points
/// (found recursively from the derivative) and refined by bisection only.
/// Multiplicities are reported as 1; a double root shows up as a critical
/// point where |p| vanishes to working precision.
RootSet poly_real_roots_bisection(const std::vector<ext_real>& coefficients, double tol = kDefaultRootTolerance);

}  // namespace coulho
