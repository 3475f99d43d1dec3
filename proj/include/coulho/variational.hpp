#pragma once

// Rayleigh-Ritz solution of the radial equation on the non-orthogonal basis
// u_j(xi) = xi^(|g|+j) exp(-xi^2/2), j = 0..N-1, with measure xi dxi.
// Moments: I(p) = int_0^inf xi^p exp(-xi^2) dxi = Gamma((p+1)/2) / 2.

#include <cstddef>
#include <vector>

#include "coulho/frobenius.hpp"
#include "coulho/numerics/linalg.hpp"
#include "coulho/numerics/real.hpp"
#include "coulho/numerics/sym_matrix.hpp"

namespace coulho {

inline constexpr int kDefaultBasisSize = 30;
inline constexpr double kDefaultFdStep = 1e-4;

struct BasisSpec {
  double gamma = 0.0;
  int size = kDefaultBasisSize;

  double abs_gamma() const;
  void validate() const;
};

/// I(2|g| + m) for m = 0 .. count-1, via the upward recurrence
/// I(p + 2) = (p + 1)/2 * I(p) seeded from log_gamma.
std::vector<ext_real> gaussian_moments(double gamma, std::size_t count);

/// S_ij = I(2g + i + j + 1) = Gamma(g + (i+j)/2 + 1) / 2.
template <class Real>
SymMatrix<Real> overlap_matrix(const BasisSpec& basis);

/// H_ij = <u_i | L | u_j>, assembled from the analytic action
/// L u_j = [2(g+j+1) - a/xi - j(2g+j)/xi^2] u_j and symmetrized after an
/// asymmetry check at 1e-10 relative.
template <class Real>
SymMatrix<Real> hamiltonian_matrix(const BasisSpec& basis, double a);

/// M_ij = <u_i | 1/xi | u_j> = I(2g + i + j).
template <class Real>
SymMatrix<Real> inverse_radius_matrix(const BasisSpec& basis);

extern template SymMatrix<double> overlap_matrix<double>(const BasisSpec&);
extern template SymMatrix<ext_real> overlap_matrix<ext_real>(const BasisSpec&);
extern template SymMatrix<double> hamiltonian_matrix<double>(const BasisSpec&, double);
extern template SymMatrix<ext_real> hamiltonian_matrix<ext_real>(const BasisSpec&, double);
extern template SymMatrix<double> inverse_radius_matrix<double>(const BasisSpec&);
extern template SymMatrix<ext_real> inverse_radius_matrix<ext_real>(const BasisSpec&);

struct SpectrumOptions {
  /// Re-solve at usable_N - 2 and report |W^(N) - W^(N-2)| per level.
  bool estimate_convergence = true;
  /// Fail when fewer levels than this survive the Cholesky shrink.
  int min_levels = 1;
};

struct SpectrumResult {
  ProblemSpec spec;
  BasisSpec basis;  // as requested
  int usable_N = 0;
  bool shrunk = false;  // Cholesky pivot failure forced usable_N < basis.size
  std::vector<double> eigenvalues;                  // ascending, length usable_N
  std::vector<ext_real> eigenvalues_ext;            // same, full precision
  std::vector<std::vector<ext_real>> eigenvectors;  // S-normalized, one per level
  /// |W_v^(N) - W_v^(N-2)|; +inf for levels the smaller basis cannot resolve
  /// or when estimation was skipped.
  std::vector<double> convergence_estimate;

  double eigenvalue(std::size_t level) const;
  BasisSpec usable_basis() const { return {basis.gamma, usable_N}; }
};

/// Thrown when the shrunk basis cannot hold the requested number of levels.
class BasisShortfall : public std::runtime_error {
 public:
  BasisShortfall(int usable, int required)
      : std::runtime_error("usable basis size " + std::to_string(usable) + " below required " + std::to_string(required)),
        usable_(usable) {}
  int usable() const { return usable_; }

 private:
  int usable_;
};

SpectrumResult spectrum(const ProblemSpec& spec, int N = kDefaultBasisSize, const SpectrumOptions& options = {});

/// c^T M c for the S-normalized eigenvector of `level`.
double expectation_inv_xi(const SpectrumResult& result, std::size_t level);

/// |c1^T S c2| between two results on the same basis.
double state_overlap(const SpectrumResult& first, std::size_t level_first, const SpectrumResult& second,
                     std::size_t level_second);

struct HFReport {
  double a = 0.0;
  double gamma = 0.0;
  int level = 0;
  double h = 0.0;
  double fd_slope = 0.0;
  double expectation_inv_xi = 0.0;
  double residual = 0.0;  // |fd_slope + <1/xi>|
  double min_overlap = 1.0;
  bool crossing_suspected = false;  // eigenvector overlap with a +- h below 0.9
};

inline constexpr double kCrossingOverlap = 0.9;

HFReport hellmann_feynman_check(const ProblemSpec& spec, int level, int N = kDefaultBasisSize, double h = kDefaultFdStep);

struct TruncationMatch {
  int n = 0;
  int k = 0;  // 1-based root index
  double a_root = 0.0;
  double W_truncation = 0.0;
  int matched_level = 0;  // k - 1
  double W_variational = 0.0;
  double mismatch = 0.0;
  int usable_N = 0;
};

/// For each root a^(k) of the order-n truncation, compares the (k-1)-th
/// variational level at a = a^(k) against 2n + 2|g| + 2. Requires N >= n + 3.
std::vector<TruncationMatch> truncation_point_locator(int n, double gamma, int N = kDefaultBasisSize);

}  // namespace coulho
