// Copyright 2026 The opseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opseq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace opseq {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": sizes " + std::to_string(a) +
                         " and " + std::to_string(b) + " differ");
  }
}

void require_same_dim(const MatrixOperator& a, const MatrixOperator& b,
                      const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimensions " +
                         std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()) + " differ");
  }
}

Eigen::MatrixXcd to_eigen(const MatrixOperator& m) {
  const int n = m.dim();
  Eigen::MatrixXcd e(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e(i, j) = m.at(i, j);
  return e;
}

MatrixOperator from_eigen(const Eigen::MatrixXcd& e) {
  MatrixOperator m(static_cast<int>(e.rows()));
  for (int i = 0; i < e.rows(); ++i)
    for (int j = 0; j < e.cols(); ++j) m.at(i, j) = e(i, j);
  return m;
}

}  // namespace

CVector operator+(const CVector& a, const CVector& b) {
  require_same_size(a.size(), b.size(), "vector addition");
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CVector operator-(const CVector& a, const CVector& b) {
  require_same_size(a.size(), b.size(), "vector subtraction");
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

CVector operator*(cplx s, const CVector& a) {
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

double max_abs(const CVector& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

double max_abs_diff(const CVector& a, const CVector& b) {
  require_same_size(a.size(), b.size(), "vector comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

CVector zero_like(const CVector& a) { return CVector(a.size()); }

MatrixOperator MatrixOperator::identity(int n) {
  MatrixOperator m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

MatrixOperator MatrixOperator::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const int n = static_cast<int>(rows.size());
  MatrixOperator m(n);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw DimensionError("from_rows: matrix must be square");
    }
    int j = 0;
    for (const auto& x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

double MatrixOperator::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double MatrixOperator::max_abs_entry() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

MatrixOperator operator+(const MatrixOperator& a, const MatrixOperator& b) {
  require_same_dim(a, b, "matrix addition");
  MatrixOperator out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

MatrixOperator operator-(const MatrixOperator& a, const MatrixOperator& b) {
  require_same_dim(a, b, "matrix subtraction");
  MatrixOperator out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
  return out;
}

MatrixOperator operator-(const MatrixOperator& a) {
  MatrixOperator out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = -a.at(i, j);
  return out;
}

MatrixOperator operator*(const MatrixOperator& a, const MatrixOperator& b) {
  require_same_dim(a, b, "matrix product");
  const int n = a.dim();
  MatrixOperator out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

MatrixOperator operator*(cplx s, const MatrixOperator& a) {
  MatrixOperator out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out.at(i, j) = s * a.at(i, j);
  return out;
}

CVector operator*(const MatrixOperator& a, const CVector& x) {
  require_same_size(static_cast<std::size_t>(a.dim()), x.size(),
                    "matrix-vector product");
  CVector out(x.size());
  for (int i = 0; i < a.dim(); ++i) {
    cplx s{};
    for (int j = 0; j < a.dim(); ++j) s += a.at(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

MatrixOperator identity_like(const MatrixOperator& a) {
  return MatrixOperator::identity(a.dim());
}

MatrixOperator zero_like(const MatrixOperator& a) {
  return MatrixOperator(a.dim());
}

double max_abs_diff(const MatrixOperator& a, const MatrixOperator& b) {
  require_same_dim(a, b, "matrix comparison");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
  return m;
}

double commutator_norm(const MatrixOperator& l0, const MatrixOperator& l1) {
  return (l0 * l1 - l1 * l0).frobenius_norm();
}

MatrixOperator mat_pow(const MatrixOperator& m, int k) {
  if (k < 0) throw Error("mat_pow requires a nonnegative exponent");
  MatrixOperator result = MatrixOperator::identity(m.dim());
  MatrixOperator base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    if ((k >>= 1) > 0) base = base * base;
  }
  return result;
}

MatrixOperator mat_inverse(const MatrixOperator& m) {
  const int n = m.dim();
  const double pivot_floor = 1e-12 * m.max_abs_entry();
  MatrixOperator work = m;
  MatrixOperator inv = MatrixOperator::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    double best = std::abs(work.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::abs(work.at(r, col));
      if (mag > best) {
        best = mag;
        pivot_row = r;
      }
    }
    if (best <= pivot_floor) {
      throw SingularMatrixError(
          "matrix is singular to working precision (pivot " +
          std::to_string(best) + " at column " + std::to_string(col) + ")");
    }
    if (pivot_row != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot_row, j), work.at(col, j));
        std::swap(inv.at(pivot_row, j), inv.at(col, j));
      }
    }
    const cplx pivot = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= pivot;
      inv.at(col, j) /= pivot;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx factor = work.at(r, col);
      if (factor == cplx{}) continue;
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

Spectrum compute_spectrum(const MatrixOperator& m) {
  if (m.dim() == 0) throw DimensionError("spectrum of an empty matrix");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), true);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed to converge");
  }
  Spectrum spec;
  spec.eigenvalues.resize(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    spec.eigenvalues[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  spec.eigenvectors = from_eigen(solver.eigenvectors());
  // Frobenius condition of the eigenbasis; blows up as the basis loses
  // rank, which is how non-diagonalizable inputs show themselves.
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(solver.eigenvectors());
  if (!lu.isInvertible()) {
    spec.condition = std::numeric_limits<double>::infinity();
  } else {
    spec.condition = solver.eigenvectors().norm() * lu.inverse().norm();
  }
  return spec;
}

MatrixOperator mat_sqrt(const MatrixOperator& m, double condition_bound) {
  const Spectrum spec = compute_spectrum(m);
  if (!(spec.condition <= condition_bound)) {
    throw SqrtUnavailableError(
        "square-root unavailable: eigenvector condition " +
        std::to_string(spec.condition) + " exceeds bound " +
        std::to_string(condition_bound) +
        "; use the general recurrence path");
  }
  double max_eig = 0.0;
  for (const auto& ev : spec.eigenvalues)
    max_eig = std::max(max_eig, std::abs(ev));
  for (const auto& ev : spec.eigenvalues) {
    if (std::abs(ev) <= 1e-14 * max_eig) {
      throw SqrtUnavailableError(
          "square-root unavailable: matrix is singular; use the general "
          "recurrence path");
    }
  }

  const int n = m.dim();
  MatrixOperator diag(n);
  for (int i = 0; i < n; ++i) {
    // std::sqrt takes the principal branch: result argument in
    // (-pi/2, pi/2].
    diag.at(i, i) = std::sqrt(spec.eigenvalues[static_cast<std::size_t>(i)]);
  }
  const MatrixOperator root =
      spec.eigenvectors * diag * mat_inverse(spec.eigenvectors);

  const double denom = std::max(m.frobenius_norm(), 1e-300);
  const double residual = (root * root - m).frobenius_norm() / denom;
  if (!(residual <= 1e-8)) {
    throw SqrtUnavailableError(
        "square-root unavailable: reconstruction residual " +
        std::to_string(residual) +
        " exceeds 1e-8; use the general recurrence path");
  }
  return root;
}

MatrixOperator chebyshev_u(int p, const MatrixOperator& x) {
  MatrixOperator acc(x.dim());
  if (p < 0) return acc;
  const MatrixOperator two_x = cplx(2.0, 0.0) * x;
  MatrixOperator power = MatrixOperator::identity(x.dim());
  for (int q = 0; q <= p; ++q) {
    if ((p - q) % 2 == 0) {
      const int m = (p - q) / 2;
      const double coeff = binomial_double(p - m, m);
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      acc = acc + cplx(sign * coeff, 0.0) * power;
    }
    if (q < p) power = power * two_x;
  }
  return acc;
}

}  // namespace opseq
