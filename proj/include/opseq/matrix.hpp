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

#ifndef OPSEQ_MATRIX_HPP
#define OPSEQ_MATRIX_HPP

// Dense complex matrices realizing the operator coefficients, plus the
// pieces the commuting-case reduction needs: eigendecomposition-based
// principal square roots and operator-valued Chebyshev polynomials of the
// second kind. Desk scale by design; no attempt at BLAS-grade kernels.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "opseq/errors.hpp"
#include "opseq/scalar.hpp"

namespace opseq {

// Complex column vector with value semantics.
class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t n) : v_(n) {}
  CVector(std::initializer_list<cplx> xs) : v_(xs) {}

  std::size_t size() const { return v_.size(); }
  cplx& operator[](std::size_t i) { return v_[i]; }
  const cplx& operator[](std::size_t i) const { return v_[i]; }

  bool operator==(const CVector& rhs) const { return v_ == rhs.v_; }

 private:
  std::vector<cplx> v_;
};

CVector operator+(const CVector& a, const CVector& b);
CVector operator-(const CVector& a, const CVector& b);
CVector operator*(cplx s, const CVector& a);

double max_abs(const CVector& a);
double max_abs_diff(const CVector& a, const CVector& b);
CVector zero_like(const CVector& a);

// Square complex matrix, row-major storage.
class MatrixOperator {
 public:
  MatrixOperator() = default;
  explicit MatrixOperator(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static MatrixOperator identity(int n);
  // Row-major rows; every row must have the same length.
  static MatrixOperator from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);

  int dim() const { return n_; }
  cplx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cplx& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  double frobenius_norm() const;
  double max_abs_entry() const;

  bool operator==(const MatrixOperator& rhs) const {
    return n_ == rhs.n_ && a_ == rhs.a_;
  }

 private:
  int n_ = 0;
  std::vector<cplx> a_;
};

MatrixOperator operator+(const MatrixOperator& a, const MatrixOperator& b);
MatrixOperator operator-(const MatrixOperator& a, const MatrixOperator& b);
MatrixOperator operator-(const MatrixOperator& a);
MatrixOperator operator*(const MatrixOperator& a, const MatrixOperator& b);
MatrixOperator operator*(cplx s, const MatrixOperator& a);
CVector operator*(const MatrixOperator& a, const CVector& x);

MatrixOperator identity_like(const MatrixOperator& a);
MatrixOperator zero_like(const MatrixOperator& a);
double max_abs_diff(const MatrixOperator& a, const MatrixOperator& b);

// ||L0 L1 - L1 L0||_F.
double commutator_norm(const MatrixOperator& l0, const MatrixOperator& l1);

MatrixOperator mat_pow(const MatrixOperator& m, int k);

// Gauss-Jordan with partial pivoting. A pivot below 1e-12 times the
// largest input entry counts as singular.
MatrixOperator mat_inverse(const MatrixOperator& m);

// Eigendecomposition of a diagonalizable matrix: m * eigenvectors ~=
// eigenvectors * diag(eigenvalues). condition estimates the eigenvector
// basis conditioning and gates the square root.
struct Spectrum {
  std::vector<cplx> eigenvalues;
  MatrixOperator eigenvectors;
  double condition = 0.0;
};

Spectrum compute_spectrum(const MatrixOperator& m);

inline constexpr double kDefaultSqrtConditionBound = 1e8;

// Principal square root through the eigenbasis: eigenvalue roots with
// argument in (-pi/2, pi/2]. Requires a diagonalizable, nonsingular input
// with eigenvector condition below the bound; the result is verified to
// reproduce m with relative residual <= 1e-8. Failures throw
// SqrtUnavailableError, directing callers to the general recurrence path.
MatrixOperator mat_sqrt(const MatrixOperator& m,
                        double condition_bound = kDefaultSqrtConditionBound);

// U_p at an operator argument, from the explicit coefficients
//   U_p(x) = sum_{m=0}^{floor(p/2)} (-1)^m binomial(p-m, m) (2x)^{p-2m}.
MatrixOperator chebyshev_u(int p, const MatrixOperator& x);

}  // namespace opseq

#endif  // OPSEQ_MATRIX_HPP
