#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "coulho/numerics/real.hpp"

namespace coulho {

/// Dense row-major matrix. Used for triangular factors and eigenvector sets.
template <class Real>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Real(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Real& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Real> column(std::size_t j) const {
    std::vector<Real> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Real aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Real> data_;
};

/// Square matrix whose (i,j) and (j,i) entries are always identical.
template <class Real>
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Real(0)) {
    if (dim == 0) throw std::invalid_argument("SymMatrix: dimension must be positive");
  }

  static SymMatrix identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Real(1));
    return m;
  }

  /// Rows must already be exactly symmetric.
  static SymMatrix from_rows(std::initializer_list<std::initializer_list<Real>> rows) {
    std::vector<std::vector<Real>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  static SymMatrix from_rows(const std::vector<std::vector<Real>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("SymMatrix: rows must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[i][j] != rows[j][i]) throw std::invalid_argument("SymMatrix: input is not symmetric");
        m.data_[i * m.dim_ + j] = rows[i][j];
      }
    }
    return m;
  }

  /// Averages a nearly symmetric matrix. Throws std::logic_error when
  /// max|A_ij - A_ji| exceeds rel_tol * max|A_ij|.
  static SymMatrix symmetrize(const Matrix<Real>& a, double rel_tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("symmetrize: matrix is not square");
    SymMatrix m(a.rows());
    Real max_entry(0), max_asym(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        max_entry = std::max(max_entry, real_abs(a(i, j)));
        max_asym = std::max(max_asym, real_abs(a(i, j) - a(j, i)));
      }
    if (max_asym > Real(rel_tol) * max_entry)
      throw std::logic_error("symmetrize: asymmetry " + std::to_string(to_double(max_asym / max_entry)) +
                             " exceeds tolerance");
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = i; j < a.cols(); ++j) m.set(i, j, (a(i, j) + a(j, i)) / 2);
    return m;
  }

  std::size_t dim() const { return dim_; }

  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, const Real& v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }

  Real max_abs() const {
    Real m(0);
    for (const auto& x : data_) m = std::max(m, real_abs(x));
    return m;
  }

  Real frobenius_norm() const {
    Real s(0);
    for (const auto& x : data_) s += x * x;
    return real_sqrt(s);
  }

  Real trace() const {
    Real t(0);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Leading k x k block.
  SymMatrix leading(std::size_t k) const {
    if (k == 0 || k > dim_) throw std::out_of_range("SymMatrix::leading: bad block size");
    SymMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) m.set(i, j, (*this)(i, j));
    return m;
  }

  template <class Other>
  SymMatrix<Other> cast() const {
    SymMatrix<Other> m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) m.set(i, j, static_cast<Other>((*this)(i, j)));
    return m;
  }

  Matrix<Real> dense() const {
    Matrix<Real> d(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) d(i, j) = (*this)(i, j);
    return d;
  }

  /// x^T A y
  Real bilinear(const std::vector<Real>& x, const std::vector<Real>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bilinear: dimension mismatch");
    Real s(0);
    for (std::size_t i = 0; i < dim_; ++i) {
      Real row(0);
      for (std::size_t j = 0; j < dim_; ++j) row += (*this)(i, j) * y[j];
      s += x[i] * row;
    }
    return s;
  }

  std::vector<Real> apply(const std::vector<Real>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Real> y(dim_, Real(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  std::size_t dim_;
  std::vector<Real> data_;
};

}  // namespace coulho
