#include "coulho/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coulho/numerics/log_gamma.hpp"

namespace coulho {

double BasisSpec::abs_gamma() const { return std::abs(gamma); }

void BasisSpec::validate() const {
  if (size < 1) throw std::invalid_argument("BasisSpec: size must be at least 1");
  if (!std::isfinite(gamma)) throw std::invalid_argument("BasisSpec: gamma must be finite");
}

std::vector<ext_real> gaussian_moments(double gamma, std::size_t count) {
  const ext_real g = ext_real(std::abs(gamma));
  std::vector<ext_real> m(count);
  // m[k] = I(2g + k); I(2g) = Gamma(g + 1/2)/2, I(2g + 1) = Gamma(g + 1)/2.
  if (count > 0) m[0] = exp(log_gamma(ext_real(g + ext_real(0.5)))) / 2;
  if (count > 1) m[1] = exp(log_gamma(ext_real(g + 1))) / 2;
  for (std::size_t k = 2; k < count; ++k) {
    const ext_real p = 2 * g + static_cast<int>(k) - 2;
    m[k] = (p + 1) / 2 * m[k - 2];
  }
  return m;
}

template <class Real>
SymMatrix<Real> overlap_matrix(const BasisSpec& basis) {
  basis.validate();
  const auto n = static_cast<std::size_t>(basis.size);
  const auto mom = gaussian_moments(basis.gamma, 2 * n + 1);
  SymMatrix<Real> s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s.set(i, j, static_cast<Real>(mom[i + j + 1]));
  return s;
}

template <class Real>
SymMatrix<Real> hamiltonian_matrix(const BasisSpec& basis, double a) {
  basis.validate();
  if (!std::isfinite(a)) throw std::invalid_argument("hamiltonian_matrix: a must be finite");
  const auto n = static_cast<std::size_t>(basis.size);
  const auto mom = gaussian_moments(basis.gamma, 2 * n + 1);
  const ext_real g = ext_real(basis.abs_gamma());
  const ext_real a_ext = ext_real(a);
  Matrix<ext_real> raw(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t m = i + j;  // I(2g + m)
      ext_real v = -a_ext * mom[m] + 2 * (g + static_cast<int>(j) + 1) * mom[m + 1];
      if (j > 0) v -= static_cast<int>(j) * (2 * g + static_cast<int>(j)) * mom[m - 1];
      raw(i, j) = v;
    }
  return SymMatrix<ext_real>::symmetrize(raw, 1e-10).template cast<Real>();
}

template <class Real>
SymMatrix<Real> inverse_radius_matrix(const BasisSpec& basis) {
  basis.validate();
  const auto n = static_cast<std::size_t>(basis.size);
  const auto mom = gaussian_moments(basis.gamma, 2 * n + 1);
  SymMatrix<Real> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, static_cast<Real>(mom[i + j]));
  return m;
}

template SymMatrix<double> overlap_matrix<double>(const BasisSpec&);
template SymMatrix<ext_real> overlap_matrix<ext_real>(const BasisSpec&);
template SymMatrix<double> hamiltonian_matrix<double>(const BasisSpec&, double);
template SymMatrix<ext_real> hamiltonian_matrix<ext_real>(const BasisSpec&, double);
template SymMatrix<double> inverse_radius_matrix<double>(const BasisSpec&);
template SymMatrix<ext_real> inverse_radius_matrix<ext_real>(const BasisSpec&);

double SpectrumResult::eigenvalue(std::size_t level) const {
  if (level >= eigenvalues.size()) throw std::out_of_range("SpectrumResult: level out of range");
  return eigenvalues[level];
}

SpectrumResult spectrum(const ProblemSpec& spec, int N, const SpectrumOptions& options) {
  spec.validate();
  const BasisSpec basis{spec.gamma, N};
  basis.validate();
  const auto h_full = hamiltonian_matrix<ext_real>(basis, spec.a);
  const auto s_full = overlap_matrix<ext_real>(basis);

  SpectrumResult out;
  out.spec = spec;
  out.basis = basis;
  out.usable_N = N;

  EigenDecomposition<ext_real> eig;
  try {
    eig = generalized_eigen<ext_real, double>(h_full, s_full);
  } catch (const NotPositiveDefinite& e) {
    out.usable_N = static_cast<int>(e.pivot_index());
    out.shrunk = true;
    if (out.usable_N < std::max(1, options.min_levels)) throw BasisShortfall(out.usable_N, std::max(1, options.min_levels));
    const auto k = static_cast<std::size_t>(out.usable_N);
    eig = generalized_eigen<ext_real, double>(h_full.leading(k), s_full.leading(k));
  }
  if (out.usable_N < options.min_levels) throw BasisShortfall(out.usable_N, options.min_levels);

  const auto usable = static_cast<std::size_t>(out.usable_N);
  out.eigenvalues_ext = eig.eigenvalues;
  for (const auto& w : eig.eigenvalues) out.eigenvalues.push_back(static_cast<double>(w));
  for (std::size_t col = 0; col < usable; ++col) out.eigenvectors.push_back(eig.eigenvectors.column(col));

  out.convergence_estimate.assign(usable, std::numeric_limits<double>::infinity());
  if (options.estimate_convergence && usable > 2) {
    const auto smaller = generalized_eigen<ext_real, double>(h_full.leading(usable - 2), s_full.leading(usable - 2));
    for (std::size_t v = 0; v < usable - 2; ++v)
      out.convergence_estimate[v] = static_cast<double>(abs(eig.eigenvalues[v] - smaller.eigenvalues[v]));
  }
  return out;
}

double expectation_inv_xi(const SpectrumResult& result, std::size_t level) {
  if (level >= result.eigenvectors.size()) throw std::out_of_range("expectation_inv_xi: level out of range");
  const auto m = inverse_radius_matrix<ext_real>(result.usable_basis());
  const auto& c = result.eigenvectors[level];
  return static_cast<double>(m.bilinear(c, c));
}

double state_overlap(const SpectrumResult& first, std::size_t level_first, const SpectrumResult& second,
                     std::size_t level_second) {
  if (first.usable_N != second.usable_N || first.basis.abs_gamma() != second.basis.abs_gamma())
    throw std::invalid_argument("state_overlap: results use different bases");
  if (level_first >= first.eigenvectors.size() || level_second >= second.eigenvectors.size())
    throw std::out_of_range("state_overlap: level out of range");
  const auto s = overlap_matrix<ext_real>(first.usable_basis());
  return static_cast<double>(abs(s.bilinear(first.eigenvectors[level_first], second.eigenvectors[level_second])));
}

HFReport hellmann_feynman_check(const ProblemSpec& spec, int level, int N, double h) {
  if (!(h > 0)) throw std::invalid_argument("hellmann_feynman_check: h must be positive");
  if (level < 0) throw std::invalid_argument("hellmann_feynman_check: level must be non-negative");
  SpectrumOptions opts;
  opts.estimate_convergence = false;
  opts.min_levels = level + 1;

  SpectrumResult center = spectrum(spec, N, opts);
  // All three solves must share one basis so eigenvectors are comparable.
  const int n_used = center.usable_N;
  SpectrumResult plus = spectrum({spec.gamma, spec.a + h}, n_used, opts);
  SpectrumResult minus = spectrum({spec.gamma, spec.a - h}, n_used, opts);
  if (plus.usable_N != n_used || minus.usable_N != n_used) {
    const int common = std::min({plus.usable_N, minus.usable_N, n_used});
    center = spectrum(spec, common, opts);
    plus = spectrum({spec.gamma, spec.a + h}, common, opts);
    minus = spectrum({spec.gamma, spec.a - h}, common, opts);
  }

  const auto lv = static_cast<std::size_t>(level);
  HFReport r;
  r.a = spec.a;
  r.gamma = spec.gamma;
  r.level = level;
  r.h = h;
  r.fd_slope = static_cast<double>((plus.eigenvalues_ext[lv] - minus.eigenvalues_ext[lv]) / (2 * ext_real(h)));
  r.expectation_inv_xi = expectation_inv_xi(center, lv);
  r.residual = std::abs(r.fd_slope + r.expectation_inv_xi);
  r.min_overlap = std::min(state_overlap(center, lv, plus, lv), state_overlap(center, lv, minus, lv));
  r.crossing_suspected = r.min_overlap < kCrossingOverlap;
  return r;
}

std::vector<TruncationMatch> truncation_point_locator(int n, double gamma, int N) {
  if (n < 0) throw std::invalid_argument("truncation_point_locator: n must be non-negative");
  if (N < n + 3) throw std::invalid_argument("truncation_point_locator: basis size must be at least n + 3");
  const TruncationSolution sol = truncation_spectrum(n, gamma);
  std::vector<TruncationMatch> out;
  SpectrumOptions opts;
  opts.estimate_convergence = false;
  for (std::size_t idx = 0; idx < sol.roots.size(); ++idx) {
    TruncationMatch m;
    m.n = n;
    m.k = static_cast<int>(idx) + 1;
    m.a_root = sol.roots.roots[idx];
    m.W_truncation = sol.W;
    m.matched_level = m.k - 1;
    opts.min_levels = m.k;
    const SpectrumResult res = spectrum({gamma, m.a_root}, N, opts);
    m.W_variational = res.eigenvalue(idx);
    m.mismatch = std::abs(m.W_variational - m.W_truncation);
    m.usable_N = res.usable_N;
    out.push_back(m);
  }
  return out;
}

}  // namespace coulho
