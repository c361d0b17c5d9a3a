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

#include "opseq/volterra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "opseq/errors.hpp"
#include "opseq/solver.hpp"

namespace opseq {

namespace {

constexpr cplx kZero(0.0, 0.0);

cplx cpow_int(cplx base, int e) {
  cplx acc(1.0, 0.0);
  for (int q = 0; q < e; ++q) acc *= base;
  return acc;
}

void check_degree_budget(int f_degree, int l_power, int cap,
                         const char* what) {
  if (f_degree + l_power > cap) {
    std::ostringstream msg;
    msg << what << ": degree " << f_degree << " + L^" << l_power
        << " exceeds degree cap " << cap;
    throw DegreeCapError(msg.str());
  }
}

}  // namespace

PolyFunction::PolyFunction(std::vector<cplx> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == kZero) coeffs_.pop_back();
}

PolyFunction PolyFunction::constant(cplx c) {
  return PolyFunction(std::vector<cplx>{c});
}

PolyFunction PolyFunction::monomial(int degree, cplx coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: degree must be >= 0");
  std::vector<cplx> coeffs(static_cast<std::size_t>(degree) + 1, kZero);
  coeffs.back() = coeff;
  return PolyFunction(std::move(coeffs));
}

cplx PolyFunction::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

cplx PolyFunction::evaluate(cplx t) const {
  cplx acc = kZero;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
  return acc;
}

PolyFunction PolyFunction::derivative() const {
  if (coeffs_.size() <= 1) return PolyFunction();
  std::vector<cplx> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return PolyFunction(std::move(out));
}

PolyFunction PolyFunction::integral() const {
  if (coeffs_.empty()) return PolyFunction();
  std::vector<cplx> out(coeffs_.size() + 1, kZero);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  }
  return PolyFunction(std::move(out));
}

PolyFunction operator+(const PolyFunction& a, const PolyFunction& b) {
  std::vector<cplx> out(std::max(a.coeffs().size(), b.coeffs().size()), kZero);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  }
  return PolyFunction(std::move(out));
}

PolyFunction operator*(cplx s, const PolyFunction& a) {
  std::vector<cplx> out = a.coeffs();
  for (cplx& c : out) c *= s;
  return PolyFunction(std::move(out));
}

PolyFunction zero_like(const PolyFunction&) { return PolyFunction(); }

double max_abs(const PolyFunction& a) {
  double m = 0.0;
  for (const cplx& c : a.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const PolyFunction& a, const PolyFunction& b) {
  const int top = std::max(a.degree(), b.degree());
  double m = 0.0;
  for (int k = 0; k <= top; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return m;
}

VolterraOperator::VolterraOperator(std::vector<cplx> l_coeffs, int degree_cap)
    : coeffs_(std::move(l_coeffs)), cap_(degree_cap) {
  while (!coeffs_.empty() && coeffs_.back() == kZero) coeffs_.pop_back();
}

VolterraOperator VolterraOperator::identity(int degree_cap) {
  return VolterraOperator(std::vector<cplx>{cplx(1.0, 0.0)}, degree_cap);
}

VolterraOperator VolterraOperator::integration(cplx scale, int degree_cap) {
  return VolterraOperator(std::vector<cplx>{kZero, scale}, degree_cap);
}

VolterraOperator operator+(const VolterraOperator& a,
                           const VolterraOperator& b) {
  std::vector<cplx> out(std::max(a.l_coeffs().size(), b.l_coeffs().size()),
                        kZero);
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < a.l_coeffs().size()) out[k] += a.l_coeffs()[k];
    if (k < b.l_coeffs().size()) out[k] += b.l_coeffs()[k];
  }
  return VolterraOperator(std::move(out),
                          std::max(a.degree_cap(), b.degree_cap()));
}

VolterraOperator operator*(const VolterraOperator& a,
                           const VolterraOperator& b) {
  if (a.l_coeffs().empty() || b.l_coeffs().empty()) {
    return VolterraOperator({}, std::max(a.degree_cap(), b.degree_cap()));
  }
  std::vector<cplx> out(a.l_coeffs().size() + b.l_coeffs().size() - 1, kZero);
  for (std::size_t i = 0; i < a.l_coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.l_coeffs().size(); ++j) {
      out[i + j] += a.l_coeffs()[i] * b.l_coeffs()[j];
    }
  }
  return VolterraOperator(std::move(out),
                          std::max(a.degree_cap(), b.degree_cap()));
}

VolterraOperator operator*(cplx s, const VolterraOperator& a) {
  std::vector<cplx> out = a.l_coeffs();
  for (cplx& c : out) c *= s;
  return VolterraOperator(std::move(out), a.degree_cap());
}

VolterraOperator identity_like(const VolterraOperator& a) {
  return VolterraOperator::identity(a.degree_cap());
}

VolterraOperator zero_like(const VolterraOperator& a) {
  return VolterraOperator({}, a.degree_cap());
}

PolyFunction operator*(const VolterraOperator& op, const PolyFunction& f) {
  if (op.l_coeffs().empty() || f.is_zero()) return PolyFunction();
  const int top = static_cast<int>(op.l_coeffs().size()) - 1;
  check_degree_budget(f.degree(), top, op.degree_cap(), "operator apply");
  PolyFunction result = op.l_coeffs()[0] * f;
  PolyFunction g = f;
  for (int k = 1; k <= top; ++k) {
    g = g.integral();
    result = result + op.l_coeffs()[static_cast<std::size_t>(k)] * g;
  }
  return result;
}

PolyFunction volterra_power(int n, const PolyFunction& f, int degree_cap) {
  if (n < 0) throw std::invalid_argument("volterra_power: n must be >= 0");
  if (n == 0) return f;
  if (f.is_zero()) return PolyFunction();
  check_degree_budget(f.degree(), n, degree_cap, "volterra_power");
  PolyFunction g = f;
  for (int k = 0; k < n; ++k) g = g.integral();
  return g;
}

PolyFunction cauchy_kernel(int n, const PolyFunction& f, int degree_cap) {
  if (n < 0) throw std::invalid_argument("cauchy_kernel: n must be >= 0");
  if (n == 0) return f;
  if (f.is_zero()) return PolyFunction();
  check_degree_budget(f.degree(), n, degree_cap, "cauchy_kernel");

  // (1/(n-1)!) int_0^t (t-tau)^{n-1} f(tau) dtau.  Each monomial a_m t^m
  // contributes a_m [ sum_j C(n-1,j) (-1)^j / (j+m+1) ] t^{n+m} / (n-1)!.
  const double fact = factorial_double(n - 1);
  std::vector<cplx> out(static_cast<std::size_t>(f.degree() + n + 1), kZero);
  for (int m = 0; m <= f.degree(); ++m) {
    const cplx a_m = f.coeff(m);
    if (a_m == kZero) continue;
    double factor = 0.0;
    for (int j = 0; j <= n - 1; ++j) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      factor += sign * binomial_double(n - 1, j) / static_cast<double>(j + m + 1);
    }
    out[static_cast<std::size_t>(n + m)] = a_m * (factor / fact);
  }
  return PolyFunction(std::move(out));
}

PolyFunction volterra_beta_apply(cplx alpha, cplx beta, int p,
                                 const PolyFunction& f, int degree_cap) {
  if (p < 1) throw std::invalid_argument("volterra_beta_apply: p must be >= 1");
  PolyFunction acc;
  for (int k = 0; 2 * k <= p - 1; ++k) {
    const int l_power = p - 1 - k;
    const cplx scale = cpow_int(alpha, k) * cpow_int(beta, p - 1 - 2 * k) *
                       binomial_double(p - 1 - k, k);
    if (scale == kZero) continue;
    const PolyFunction term =
        l_power == 0 ? f : cauchy_kernel(l_power, f, degree_cap);
    acc = acc + scale * term;
  }
  return acc;
}

PolyFunction volterra_alpha_apply(cplx alpha, cplx beta, int p,
                                  const PolyFunction& f, int degree_cap) {
  if (p < 2) {
    throw std::invalid_argument("volterra_alpha_apply: p must be >= 2");
  }
  PolyFunction acc;
  for (int k = 0; 2 * k <= p - 2; ++k) {
    const int l_power = p - 1 - k;  // one more integration than beta_{p-1}
    const cplx scale = cpow_int(alpha, k + 1) *
                       cpow_int(beta, p - 2 - 2 * k) *
                       binomial_double(p - 2 - k, k);
    if (scale == kZero) continue;
    acc = acc + scale * cauchy_kernel(l_power, f, degree_cap);
  }
  return acc;
}

VolterraSolution solve_volterra_problem(cplx alpha, cplx beta,
                                        const PolyFunction& f0,
                                        const PolyFunction& f1,
                                        const std::vector<cplx>& boundary,
                                        int max_index, int degree_cap) {
  if (max_index < 2) {
    throw std::invalid_argument("volterra problem: max_index must be >= 2");
  }
  if (boundary.size() != static_cast<std::size_t>(max_index - 1)) {
    throw DimensionError("boundary list must hold f_2(0) .. f_P(0), got " +
                         std::to_string(boundary.size()) + " entries for P = " +
                         std::to_string(max_index));
  }

  Problem<VolterraOperator, PolyFunction> prob;
  prob.l0 = VolterraOperator::integration(alpha, degree_cap);
  prob.l1 = VolterraOperator::integration(beta, degree_cap);
  prob.a = f0;
  prob.b = f1;
  prob.max_index = max_index;
  prob.forcing.reserve(boundary.size());
  for (cplx c : boundary) prob.forcing.push_back(PolyFunction::constant(c));

  VolterraSolution sol;
  sol.iterative = solve_iterative(prob).values;

  sol.closed.reserve(static_cast<std::size_t>(max_index) + 1);
  sol.closed.push_back(f0);
  sol.closed.push_back(f1);
  for (int p = 2; p <= max_index; ++p) {
    PolyFunction y = volterra_alpha_apply(alpha, beta, p, f0, degree_cap) +
                     volterra_beta_apply(alpha, beta, p, f1, degree_cap);
    // Particular part: sum_m beta_{p-m} applied to the constant f_{m+1}(0),
    // plus f_p(0) itself.
    for (int m = 1; m <= p - 2; ++m) {
      y = y + volterra_beta_apply(
                  alpha, beta, p - m,
                  PolyFunction::constant(boundary[static_cast<std::size_t>(m - 1)]),
                  degree_cap);
    }
    y = y + PolyFunction::constant(boundary[static_cast<std::size_t>(p - 2)]);
    sol.closed.push_back(y);
  }

  for (int p = 0; p <= max_index; ++p) {
    sol.route_deviation = std::max(
        sol.route_deviation,
        max_abs_diff(sol.iterative[static_cast<std::size_t>(p)],
                     sol.closed[static_cast<std::size_t>(p)]));
  }
  for (int q = 2; q <= max_index; ++q) {
    const PolyFunction residual =
        sol.iterative[static_cast<std::size_t>(q)].derivative() +
        (-beta) * sol.iterative[static_cast<std::size_t>(q - 1)] +
        (-alpha) * sol.iterative[static_cast<std::size_t>(q - 2)];
    sol.derivative_residual = std::max(sol.derivative_residual,
                                       max_abs(residual));
    sol.boundary_error = std::max(
        sol.boundary_error,
        std::abs(sol.iterative[static_cast<std::size_t>(q)].coeff(0) -
                 boundary[static_cast<std::size_t>(q - 2)]));
  }
  return sol;
}

}  // namespace opseq
