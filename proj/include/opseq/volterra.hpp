// Copyright 2026 The opseq Authors
//
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

#ifndef OPSEQ_VOLTERRA_HPP_
#define OPSEQ_VOLTERRA_HPP_

// Volterra backend: L f = int_0^t f(tau) dtau on polynomials, where
// integration is closed and exact.  The difference-differential equation
// f'_{p+2} = beta f_{p+1} + alpha f_p integrates to
//
//   f_{p+2} = L1 f_{p+1} + L0 f_p + f_{p+2}(0),  L0 = alpha L, L1 = beta L,
//
// a forced instance of the general recurrence whose forcing terms are the
// prescribed values at t = 0.  Since L0 and L1 commute, beta_p collapses to
//
//   beta_p = sum_k alpha^k beta^{p-1-2k} C(p-1-k, k) L^{p-1-k}
//
// and alpha_p = beta_{p-1} L0 correspondingly.  Iterated integration has
// the closed Cauchy form
//
//   L^n f = (1/(n-1)!) int_0^t (t - tau)^{n-1} f(tau) dtau,
//
// implemented both ways as mutual checks: volterra_power stacks exact
// antiderivatives, cauchy_kernel expands the kernel binomially and
// integrates monomials termwise.

#include <vector>

#include "opseq/scalar.hpp"

namespace opseq {

inline constexpr int kDefaultDegreeCap = 64;

// Polynomial in t with complex coefficients, constant term first.
// Canonical form: no trailing zero coefficients; zero is the empty list.
class PolyFunction {
 public:
  PolyFunction() = default;  // zero
  explicit PolyFunction(std::vector<cplx> coeffs);

  static PolyFunction constant(cplx c);
  static PolyFunction monomial(int degree, cplx coeff = cplx(1.0, 0.0));

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  cplx coeff(int k) const;
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  cplx evaluate(cplx t) const;
  PolyFunction derivative() const;
  PolyFunction integral() const;  // int_0^t, so the constant term is 0

  friend bool operator==(const PolyFunction&, const PolyFunction&) = default;

 private:
  std::vector<cplx> coeffs_;
};

PolyFunction operator+(const PolyFunction& a, const PolyFunction& b);
PolyFunction operator*(cplx s, const PolyFunction& a);
PolyFunction zero_like(const PolyFunction& a);
double max_abs(const PolyFunction& a);
double max_abs_diff(const PolyFunction& a, const PolyFunction& b);

// Polynomial in the integration operator L: sum_k c_k L^k.  The degree
// cap bounds the polynomial degree any application may produce.
class VolterraOperator {
 public:
  VolterraOperator() = default;  // the zero operator
  explicit VolterraOperator(std::vector<cplx> l_coeffs,
                            int degree_cap = kDefaultDegreeCap);

  static VolterraOperator identity(int degree_cap = kDefaultDegreeCap);
  // scale * L
  static VolterraOperator integration(cplx scale,
                                      int degree_cap = kDefaultDegreeCap);

  const std::vector<cplx>& l_coeffs() const { return coeffs_; }
  int degree_cap() const { return cap_; }

  friend bool operator==(const VolterraOperator&,
                         const VolterraOperator&) = default;

 private:
  std::vector<cplx> coeffs_;
  int cap_ = kDefaultDegreeCap;
};

VolterraOperator operator+(const VolterraOperator& a, const VolterraOperator& b);
VolterraOperator operator*(const VolterraOperator& a, const VolterraOperator& b);
VolterraOperator operator*(cplx s, const VolterraOperator& a);
VolterraOperator identity_like(const VolterraOperator& a);
VolterraOperator zero_like(const VolterraOperator& a);

// Applies the operator; throws DegreeCapError when the result would
// exceed the cap.
PolyFunction operator*(const VolterraOperator& op, const PolyFunction& f);

// L^n f by n exact antiderivative passes; L^0 is the identity.
PolyFunction volterra_power(int n, const PolyFunction& f,
                            int degree_cap = kDefaultDegreeCap);

// L^n f through the Cauchy kernel: expand (t - tau)^{n-1} binomially and
// integrate termwise.  Independent of volterra_power.
PolyFunction cauchy_kernel(int n, const PolyFunction& f,
                           int degree_cap = kDefaultDegreeCap);

// The collapsed binomial forms of beta_p (p >= 1) and alpha_p (p >= 2)
// applied to f, with L^n routed through cauchy_kernel.
PolyFunction volterra_beta_apply(cplx alpha, cplx beta, int p,
                                 const PolyFunction& f,
                                 int degree_cap = kDefaultDegreeCap);
PolyFunction volterra_alpha_apply(cplx alpha, cplx beta, int p,
                                  const PolyFunction& f,
                                  int degree_cap = kDefaultDegreeCap);

struct VolterraSolution {
  std::vector<PolyFunction> iterative;  // f_0 .. f_P by the general solver
  std::vector<PolyFunction> closed;     // binomial/kernel closed form

  double route_deviation = 0.0;      // max coefficientwise |iterative-closed|
  double derivative_residual = 0.0;  // max coeff of f'_q - beta f_{q-1} - alpha f_{q-2}
  double boundary_error = 0.0;       // max |f_q(0) - prescribed|
};

// boundary holds f_2(0) .. f_P(0) (length P-1).  Requires P >= 2.
VolterraSolution solve_volterra_problem(cplx alpha, cplx beta,
                                        const PolyFunction& f0,
                                        const PolyFunction& f1,
                                        const std::vector<cplx>& boundary,
                                        int max_index,
                                        int degree_cap = kDefaultDegreeCap);

}  // namespace opseq

#endif  // OPSEQ_VOLTERRA_HPP_
