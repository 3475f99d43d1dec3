#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coulho/numerics/real.hpp"

namespace coulho {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial with exact rational coefficients, ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);

  static RationalPoly constant(const Rational& c);
  /// The monomial c * x^k.
  static RationalPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;
  /// Sign of p(x) computed exactly.
  int sign_at(const Rational& x) const;
  /// Sign as x -> +inf (positive = true) or -inf.
  int sign_at_infinity(bool positive) const;

  RationalPoly derivative() const;
  /// p(-x)
  RationalPoly reflected() const;
  RationalPoly monic() const;

  /// Euclidean division: {quotient, remainder}.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;

  std::vector<double> to_double() const;
  std::string to_string(const std::string& var = "a") const;

  friend RationalPoly operator+(const RationalPoly& p, const RationalPoly& q);
  friend RationalPoly operator-(const RationalPoly& p, const RationalPoly& q);
  friend RationalPoly operator*(const RationalPoly& p, const RationalPoly& q);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend RationalPoly operator-(const RationalPoly& p);
  friend bool operator==(const RationalPoly& p, const RationalPoly& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both are zero).
RationalPoly gcd(RationalPoly a, RationalPoly b);

/// Yun's square-free decomposition: returns {f_1, f_2, ...} with
/// p = c * f_1 * f_2^2 * f_3^3 ..., each f_i square-free and monic.
/// Trailing factors equal to 1 are omitted; interior ones are kept.
std::vector<RationalPoly> square_free_decomposition(const RationalPoly& p);

/// Exact rational value of a finite double.
Rational exact_rational(double x);

/// p/q with q <= max_denominator whose nearest double is exactly x, if any.
std::optional<Rational> as_small_rational(double x, long long max_denominator = 1000000);

}  // namespace coulho
