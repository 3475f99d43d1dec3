#pragma once

// Dense symmetric linear algebra: Cholesky factorization, cyclic Jacobi
// diagonalization, and the scaled-Cholesky reduction of H c = W S c.
// Everything is templated on the scalar so the variational solver can run
// in ext_real while tests exercise the same code in double.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "coulho/numerics/real.hpp"
#include "coulho/numerics/sym_matrix.hpp"

namespace coulho {

/// Cholesky pivot <= 0. `pivot_index` is 0-based, so the leading
/// `pivot_index` x `pivot_index` block factored successfully.
class NotPositiveDefinite : public std::runtime_error {
 public:
  explicit NotPositiveDefinite(std::size_t pivot_index)
      : std::runtime_error("matrix is not positive definite (pivot " + std::to_string(pivot_index) + ")"),
        pivot_index_(pivot_index) {}
  std::size_t pivot_index() const { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

template <class Real>
struct EigenDecomposition {
  std::vector<Real> eigenvalues;  // ascending
  Matrix<Real> eigenvectors;      // column i belongs to eigenvalues[i]
  int sweeps = 0;
};

/// Returns lower-triangular L with L L^T = S.
template <class Real>
Matrix<Real> cholesky(const SymMatrix<Real>& s) {
  const std::size_t n = s.dim();
  Matrix<Real> l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Real d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0)) throw NotPositiveDefinite(j);
    const Real ljj = real_sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Real v = s(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / ljj;
    }
  }
  return l;
}

namespace detail {

template <class Real>
Real offdiag_norm(const Matrix<Real>& a) {
  Real s(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return real_sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi. Stops when the off-diagonal Frobenius norm drops below
/// rel_tol * ||A||_F; throws ConvergenceError after max_sweeps.
template <class Real>
EigenDecomposition<Real> sym_eigen(const SymMatrix<Real>& sym, int max_sweeps = 50,
                                   Real rel_tol = jacobi_default_tolerance<Real>()) {
  const std::size_t n = sym.dim();
  Matrix<Real> a = sym.dense();
  Matrix<Real> v = Matrix<Real>::identity(n);
  const Real norm = sym.frobenius_norm();
  const Real threshold = rel_tol * norm;

  int sweep = 0;
  Real off = detail::offdiag_norm(a);
  while (off > threshold) {
    if (sweep == max_sweeps)
      throw ConvergenceError("sym_eigen: no convergence after " + std::to_string(max_sweeps) + " sweeps",
                             to_double(off / (norm > 0 ? norm : Real(1))));
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real apq = a(p, q);
        if (apq == 0) continue;
        const Real theta = (a(q, q) - a(p, p)) / (2 * apq);
        Real t = Real(1) / (real_abs(theta) + real_sqrt(theta * theta + 1));
        if (theta < 0) t = -t;
        const Real c = Real(1) / real_sqrt(t * t + 1);
        const Real s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const Real akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Real apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = Real(0);
        a(q, p) = Real(0);
        for (std::size_t k = 0; k < n; ++k) {
          const Real vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    off = detail::offdiag_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition<Real> out;
  out.sweeps = sweep;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix<Real>(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src);
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, col) = v(k, src);
  }
  return out;
}

/// Solves H c = lambda S c for symmetric H and positive definite S.
/// S is scaled by D = diag(S)^{-1/2} before factoring; returned eigenvectors
/// satisfy c^T S c = 1.
///
/// The reduction to C = L^{-1} D H D L^{-T} runs in Real. C itself is well
/// conditioned, so the Jacobi sweeps may run in a cheaper EigReal; each
/// eigenpair is then re-normalized and its eigenvalue recomputed as a
/// Rayleigh quotient in Real.
template <class Real, class EigReal = Real>
EigenDecomposition<Real> generalized_eigen(const SymMatrix<Real>& h, const SymMatrix<Real>& s) {
  const std::size_t n = s.dim();
  if (h.dim() != n) throw std::invalid_argument("generalized_eigen: H and S differ in dimension");

  std::vector<Real> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(s(i, i) > 0)) throw NotPositiveDefinite(i);
    d[i] = Real(1) / real_sqrt(s(i, i));
  }
  SymMatrix<Real> ss(n), hs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      ss.set(i, j, d[i] * s(i, j) * d[j]);
      hs.set(i, j, d[i] * h(i, j) * d[j]);
    }

  const Matrix<Real> l = cholesky(ss);

  // X = L^{-1} Hs, then C = X L^{-T} (i.e. solve L C^T = X^T).
  Matrix<Real> x(n, n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t i = 0; i < n; ++i) {
      Real v = hs(i, col);
      for (std::size_t k = 0; k < i; ++k) v -= l(i, k) * x(k, col);
      x(i, col) = v / l(i, i);
    }
  Matrix<Real> c(n, n);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i < n; ++i) {
      Real v = x(row, i);
      for (std::size_t k = 0; k < i; ++k) v -= l(i, k) * c(row, k);
      c(row, i) = v / l(i, i);
    }
  SymMatrix<Real> reduced(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) reduced.set(i, j, (c(i, j) + c(j, i)) / 2);

  EigenDecomposition<Real> eig;
  Matrix<Real> y(n, n);
  if constexpr (std::is_same_v<Real, EigReal>) {
    eig = sym_eigen(reduced);
    y = eig.eigenvectors;
  } else {
    const EigenDecomposition<EigReal> low = sym_eigen(reduced.template cast<EigReal>());
    eig.sweeps = low.sweeps;
    eig.eigenvalues.resize(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<Real> v(n);
      Real norm2(0);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<Real>(low.eigenvectors(i, col));
        norm2 += v[i] * v[i];
      }
      const Real inv = Real(1) / real_sqrt(norm2);
      for (std::size_t i = 0; i < n; ++i) y(i, col) = v[i] * inv;
      for (auto& vi : v) vi *= inv;
      eig.eigenvalues[col] = reduced.bilinear(v, v);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return eig.eigenvalues[i] < eig.eigenvalues[j]; });
    std::vector<Real> sorted(n);
    Matrix<Real> ys(n, n);
    for (std::size_t col = 0; col < n; ++col) {
      sorted[col] = eig.eigenvalues[order[col]];
      for (std::size_t i = 0; i < n; ++i) ys(i, col) = y(i, order[col]);
    }
    eig.eigenvalues = std::move(sorted);
    y = std::move(ys);
  }

  // Back-transform: y -> L^{-T} y -> D (.)
  Matrix<Real> vecs(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Real v = y(ii, col);
      for (std::size_t k = ii + 1; k < n; ++k) v -= l(k, ii) * vecs(k, col);
      vecs(ii, col) = v / l(ii, ii);
    }
    for (std::size_t i = 0; i < n; ++i) vecs(i, col) *= d[i];
  }
  eig.eigenvectors = std::move(vecs);
  return eig;
}

}  // namespace coulho
