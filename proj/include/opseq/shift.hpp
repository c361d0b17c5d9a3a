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

#ifndef OPSEQ_SHIFT_HPP_
#define OPSEQ_SHIFT_HPP_

// Delay recurrence f_{p+2}(t) = -f_p(t - tau0) + f_{p+1}(t + tau1) realized
// with translation operators L0 = -exp[-tau0 d/dt], L1 = exp[tau1 d/dt].
//
// Shifts are kept symbolic: every offset is a point of the half-step
// lattice i*(tau0/2) + j*(tau1/2) with integer (i, j), so composing
// operators adds lattice vectors exactly and no discretization error
// exists before the final evaluation at real sample points.  Half steps
// are what make the commuting-Chebyshev route representable, since
// R = (-L0)^{1/2} is the translation by -tau0/2.
//
// An expansion is a finite combination of translated copies of the two
// base functions f0 and f1; the solution f_p stays in that space for all
// p, which is the exact analogue of the resolutive formula's alpha/beta
// word structure.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "opseq/scalar.hpp"

namespace opseq {

// Lattice offset i*(tau0/2) + j*(tau1/2).
struct ShiftOffset {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const ShiftOffset&, const ShiftOffset&) = default;
};

// Finite combination of translations T_o : f(t) -> f(t + offset(o)).
class ShiftOperator {
 public:
  ShiftOperator() = default;  // the zero operator

  static ShiftOperator identity();
  static ShiftOperator translation(ShiftOffset o, cplx coeff = cplx(1.0, 0.0));

  const std::map<ShiftOffset, cplx>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Merges coefficients; exact zeros are erased to keep the form canonical.
  void add_term(ShiftOffset o, cplx coeff);

  friend bool operator==(const ShiftOperator&, const ShiftOperator&) = default;

 private:
  std::map<ShiftOffset, cplx> terms_;
};

ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b);
ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b);
ShiftOperator operator*(cplx s, const ShiftOperator& a);
ShiftOperator identity_like(const ShiftOperator& a);
ShiftOperator zero_like(const ShiftOperator& a);

enum class ShiftBase { f0, f1 };

// Element of the solution space: sum of coeff * f_base(t + offset).
class ShiftExpansion {
 public:
  using Key = std::pair<ShiftBase, ShiftOffset>;

  ShiftExpansion() = default;  // zero

  static ShiftExpansion base(ShiftBase b);

  const std::map<Key, cplx>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, cplx coeff);

  friend bool operator==(const ShiftExpansion&,
                         const ShiftExpansion&) = default;

 private:
  std::map<Key, cplx> terms_;
};

ShiftExpansion operator+(const ShiftExpansion& a, const ShiftExpansion& b);
ShiftExpansion operator*(cplx s, const ShiftExpansion& a);
ShiftExpansion operator*(const ShiftOperator& op, const ShiftExpansion& x);
ShiftExpansion zero_like(const ShiftExpansion& x);
double max_abs(const ShiftExpansion& x);
double max_abs_diff(const ShiftExpansion& a, const ShiftExpansion& b);

using BaseFunction = std::function<cplx(double)>;

// Instantiates the symbols: offset (i, j) becomes i*tau0/2 + j*tau1/2.
cplx evaluate(const ShiftExpansion& x, const BaseFunction& f0,
              const BaseFunction& f1, double tau0, double tau1, double t);

// The recurrence run pointwise at t, memoized on the lattice, with no
// operator algebra involved; returns f_0(t) .. f_P(t).
std::vector<cplx> shift_recurrence_values(const BaseFunction& f0,
                                          const BaseFunction& f1, double tau0,
                                          double tau1, int max_index,
                                          double t);

// L0 = -T_{-tau0} and L1 = T_{+tau1} on the half-step lattice.
ShiftOperator shift_l0();
ShiftOperator shift_l1();

struct ShiftSolution {
  std::vector<double> samples;

  // Expansions of f_0 .. f_P along three routes: the general solver's
  // iteration in the operator algebra, the explicit binomial double sum,
  // and the commuting-Chebyshev reduction composed from half-shifts.
  std::vector<ShiftExpansion> general;
  std::vector<ShiftExpansion> binomial;
  std::vector<ShiftExpansion> chebyshev;

  // values[p][k] = route's f_p(samples[k]).
  std::vector<std::vector<cplx>> general_values;
  std::vector<std::vector<cplx>> binomial_values;
  std::vector<std::vector<cplx>> chebyshev_values;
  std::vector<std::vector<cplx>> recurrence_values;

  // Max over the table of |a - b| / max(1, |a|, |b|).
  double binomial_vs_recurrence = 0.0;
  double general_vs_binomial = 0.0;
  double chebyshev_vs_general = 0.0;
};

// Builds the binomial double-sum expansion of f_p directly.
ShiftExpansion shift_binomial_expansion(int p);

// Builds f_p through R^{p-1} U_{p-1}(X) f1 - R^p U_{p-2}(X) f0 with
// R = T_{-tau0/2} and X = (1/2) L1 R^{-1}, all in the operator algebra.
ShiftExpansion shift_chebyshev_expansion(int p);

ShiftSolution solve_shift_problem(const BaseFunction& f0,
                                  const BaseFunction& f1, double tau0,
                                  double tau1, int max_index,
                                  const std::vector<double>& samples);

}  // namespace opseq

#endif  // OPSEQ_SHIFT_HPP_
