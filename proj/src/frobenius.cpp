#include "coulho/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coulho {

double ProblemSpec::abs_gamma() const { return std::abs(gamma); }

void ProblemSpec::validate() const {
  if (!std::isfinite(gamma) || !std::isfinite(a)) throw std::invalid_argument("ProblemSpec: gamma and a must be finite");
}

std::vector<double> TruncationSolution::poly_coefficients() const {
  if (const auto* exact_poly = std::get_if<RationalPoly>(&poly)) return exact_poly->to_double();
  std::vector<double> out;
  for (const auto& c : std::get<ExtRealPoly>(poly).coefficients) out.push_back(static_cast<double>(c));
  return out;
}

SeriesState recurrence_coeffs(const ProblemSpec& spec, double W, std::size_t jmax) {
  spec.validate();
  const double g = spec.abs_gamma();
  SeriesState state{spec, W, std::vector<double>(jmax + 1, 0.0)};
  auto& c = state.coefficients;
  c[0] = 1.0;
  double prev = 0.0;  // c_{j}, starting at c_{-1}
  double cur = 1.0;   // c_{j+1}
  // c_{j+2} = [-a c_{j+1} + (2j + 2g + 2 - W) c_j] / [(j+2)(j+2g+2)], j = -1, 0, ...
  for (std::size_t m = 1; m <= jmax; ++m) {
    const double j = static_cast<double>(m) - 2.0;
    const double denom = (j + 2.0) * (j + 2.0 * g + 2.0);
    const double next = (-spec.a * cur + (2.0 * j + 2.0 * g + 2.0 - W) * prev) / denom;
    c[m] = next;
    prev = cur;
    cur = next;
  }
  return state;
}

double truncation_energy(int n, double gamma) {
  if (n < 0) throw std::invalid_argument("truncation_energy: n must be non-negative");
  return 2.0 * n + 2.0 * std::abs(gamma) + 2.0;
}

namespace {

/// The recurrence with a symbolic; coefficients are polynomials in a over
/// any field-like Scalar type. Returns c_{n+1}.
template <class Poly, class Scalar>
Poly symbolic_recurrence(int n, const Scalar& g, const Poly& a_poly, const Poly& one) {
  const Scalar W = Scalar(2 * n + 2) + 2 * g;
  Poly prev;  // c_{-1} = 0
  Poly cur = one;
  for (int j = -1; j < n; ++j) {
    const Scalar denom = Scalar(j + 2) * (Scalar(j + 2) + 2 * g);
    const Scalar shift = Scalar(2 * j + 2) + 2 * g - W;
    Poly next = (Scalar(-1) / denom) * (a_poly * cur) + (shift / denom) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Minimal polynomial arithmetic over ext_real for the irrational branch.
struct ExtPolyOps {
  std::vector<ext_real> c;

  friend ExtPolyOps operator*(const ExtPolyOps& p, const ExtPolyOps& q) {
    if (p.c.empty() || q.c.empty()) return {};
    std::vector<ext_real> r(p.c.size() + q.c.size() - 1, ext_real(0));
    for (std::size_t i = 0; i < p.c.size(); ++i)
      for (std::size_t j = 0; j < q.c.size(); ++j) r[i + j] += p.c[i] * q.c[j];
    return {std::move(r)};
  }
  friend ExtPolyOps operator*(const ext_real& s, const ExtPolyOps& p) {
    ExtPolyOps r = p;
    for (auto& x : r.c) x *= s;
    return r;
  }
  friend ExtPolyOps operator+(const ExtPolyOps& p, const ExtPolyOps& q) {
    std::vector<ext_real> r(std::max(p.c.size(), q.c.size()), ext_real(0));
    for (std::size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
    for (std::size_t i = 0; i < q.c.size(); ++i) r[i] += q.c[i];
    return {std::move(r)};
  }
};

}  // namespace

RationalPoly truncation_polynomial_exact(int n, const Rational& abs_gamma) {
  if (n < 0) throw std::invalid_argument("truncation_polynomial: n must be non-negative");
  if (abs_gamma < 0) throw std::invalid_argument("truncation_polynomial: |gamma| must be non-negative");
  return symbolic_recurrence(n, abs_gamma, RationalPoly::monomial(Rational(1), 1), RationalPoly::constant(Rational(1)));
}

TruncationPolynomial truncation_polynomial(int n, double gamma) {
  if (n < 0) throw std::invalid_argument("truncation_polynomial: n must be non-negative");
  if (!std::isfinite(gamma)) throw std::invalid_argument("truncation_polynomial: gamma must be finite");
  const double g = std::abs(gamma);
  if (const auto r = as_small_rational(g)) return truncation_polynomial_exact(n, *r);
  const ExtPolyOps p = symbolic_recurrence(n, ext_real(g), ExtPolyOps{{ext_real(0), ext_real(1)}}, ExtPolyOps{{ext_real(1)}});
  return ExtRealPoly{p.c};
}

double termination_ratio(int n, double gamma, double a, int extra) {
  const SeriesState s = recurrence_coeffs({gamma, a}, truncation_energy(n, gamma), static_cast<std::size_t>(n + extra));
  double head = 0.0, tail = 0.0;
  for (int j = 0; j <= n + extra; ++j) {
    const double v = std::abs(s.coefficients[static_cast<std::size_t>(j)]);
    if (j <= n)
      head = std::max(head, v);
    else
      tail = std::max(tail, v);
  }
  return tail / head;
}

TruncationSolution truncation_spectrum(int n, double gamma, double tol) {
  TruncationSolution sol;
  sol.n = n;
  sol.gamma = gamma;
  sol.W = truncation_energy(n, gamma);
  sol.poly = truncation_polynomial(n, gamma);
  if (const auto* exact_poly = std::get_if<RationalPoly>(&sol.poly))
    sol.roots = poly_real_roots(*exact_poly, tol);
  else
    sol.roots = poly_real_roots_bisection(std::get<ExtRealPoly>(sol.poly).coefficients, tol);
  for (double root : sol.roots.roots)
    sol.termination_residual = std::max(sol.termination_residual, termination_ratio(n, gamma, root));
  return sol;
}

double evaluate_radial(const ProblemSpec& spec, double W, std::size_t jmax, double xi) {
  if (!(xi > 0)) throw std::domain_error("evaluate_radial: xi must be positive");
  const SeriesState s = recurrence_coeffs(spec, W, jmax);
  const double log_xi = std::log(xi);

  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(s.coefficients.size());
  for (std::size_t j = 0; j < s.coefficients.size(); ++j) {
    const double c = s.coefficients[j];
    logs[j] = c == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(c)) + static_cast<double>(j) * log_xi;
    max_log = std::max(max_log, logs[j]);
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < s.coefficients.size(); ++j) {
    if (s.coefficients[j] == 0.0) continue;
    sum += std::copysign(std::exp(logs[j] - max_log), s.coefficients[j]);
  }
  if (sum == 0.0) return 0.0;
  const double log_mag = spec.abs_gamma() * log_xi - 0.5 * xi * xi + max_log + std::log(std::abs(sum));
  return std::copysign(std::exp(log_mag), sum);
}

}  // namespace coulho
