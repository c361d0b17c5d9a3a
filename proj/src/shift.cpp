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

#include "opseq/shift.hpp"

#include <cmath>
#include <stdexcept>

#include "opseq/solver.hpp"

namespace opseq {

namespace {

constexpr cplx kZero(0.0, 0.0);

double offset_value(ShiftOffset o, double tau0, double tau1) {
  return 0.5 * (static_cast<double>(o.i) * tau0 +
                static_cast<double>(o.j) * tau1);
}

ShiftOperator op_pow(const ShiftOperator& a, int k) {
  ShiftOperator acc = ShiftOperator::identity();
  for (int q = 0; q < k; ++q) acc = acc * a;
  return acc;
}

double scaled_deviation(cplx a, cplx b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

ShiftOperator ShiftOperator::identity() {
  return translation(ShiftOffset{0, 0});
}

ShiftOperator ShiftOperator::translation(ShiftOffset o, cplx coeff) {
  ShiftOperator op;
  op.add_term(o, coeff);
  return op;
}

void ShiftOperator::add_term(ShiftOffset o, cplx coeff) {
  auto [it, inserted] = terms_.try_emplace(o, coeff);
  if (!inserted) it->second += coeff;
  if (it->second == kZero) terms_.erase(it);
}

ShiftOperator operator+(const ShiftOperator& a, const ShiftOperator& b) {
  ShiftOperator out = a;
  for (const auto& [o, c] : b.terms()) out.add_term(o, c);
  return out;
}

ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b) {
  ShiftOperator out;
  for (const auto& [oa, ca] : a.terms()) {
    for (const auto& [ob, cb] : b.terms()) {
      out.add_term(ShiftOffset{oa.i + ob.i, oa.j + ob.j}, ca * cb);
    }
  }
  return out;
}

ShiftOperator operator*(cplx s, const ShiftOperator& a) {
  ShiftOperator out;
  for (const auto& [o, c] : a.terms()) out.add_term(o, s * c);
  return out;
}

ShiftOperator identity_like(const ShiftOperator&) {
  return ShiftOperator::identity();
}

ShiftOperator zero_like(const ShiftOperator&) { return ShiftOperator(); }

ShiftExpansion ShiftExpansion::base(ShiftBase b) {
  ShiftExpansion x;
  x.add_term(Key{b, ShiftOffset{0, 0}}, cplx(1.0, 0.0));
  return x;
}

void ShiftExpansion::add_term(const Key& k, cplx coeff) {
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (!inserted) it->second += coeff;
  if (it->second == kZero) terms_.erase(it);
}

ShiftExpansion operator+(const ShiftExpansion& a, const ShiftExpansion& b) {
  ShiftExpansion out = a;
  for (const auto& [k, c] : b.terms()) out.add_term(k, c);
  return out;
}

ShiftExpansion operator*(cplx s, const ShiftExpansion& a) {
  ShiftExpansion out;
  for (const auto& [k, c] : a.terms()) out.add_term(k, s * c);
  return out;
}

ShiftExpansion operator*(const ShiftOperator& op, const ShiftExpansion& x) {
  ShiftExpansion out;
  for (const auto& [o, c] : op.terms()) {
    for (const auto& [k, cx] : x.terms()) {
      out.add_term(ShiftExpansion::Key{
                       k.first, ShiftOffset{o.i + k.second.i, o.j + k.second.j}},
                   c * cx);
    }
  }
  return out;
}

ShiftExpansion zero_like(const ShiftExpansion&) { return ShiftExpansion(); }

double max_abs(const ShiftExpansion& x) {
  double m = 0.0;
  for (const auto& [k, c] : x.terms()) m = std::max(m, std::abs(c));
  return m;
}

double max_abs_diff(const ShiftExpansion& a, const ShiftExpansion& b) {
  double m = 0.0;
  for (const auto& [k, c] : a.terms()) {
    auto it = b.terms().find(k);
    m = std::max(m, std::abs(c - (it == b.terms().end() ? kZero : it->second)));
  }
  for (const auto& [k, c] : b.terms()) {
    if (!a.terms().contains(k)) m = std::max(m, std::abs(c));
  }
  return m;
}

cplx evaluate(const ShiftExpansion& x, const BaseFunction& f0,
              const BaseFunction& f1, double tau0, double tau1, double t) {
  cplx acc = kZero;
  for (const auto& [k, c] : x.terms()) {
    const double point = t + offset_value(k.second, tau0, tau1);
    acc += c * (k.first == ShiftBase::f0 ? f0(point) : f1(point));
  }
  return acc;
}

std::vector<cplx> shift_recurrence_values(const BaseFunction& f0,
                                          const BaseFunction& f1, double tau0,
                                          double tau1, int max_index,
                                          double t) {
  if (max_index < 0) {
    throw std::invalid_argument("shift recurrence: max_index must be >= 0");
  }
  // level[o] = f_p(t + offset(o)); two previous levels drive the next.
  std::map<ShiftOffset, cplx> prev, cur;
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(max_index) + 1);

  // Offsets reachable at level p span what levels p+1.. will request;
  // seed every point either sum below can touch rather than recursing.
  auto seed = [&](int p) {
    std::map<ShiftOffset, cplx> level;
    const BaseFunction& f = p == 0 ? f0 : f1;
    for (std::int64_t a = -(max_index); a <= 0; ++a) {
      for (std::int64_t b = 0; b <= max_index; ++b) {
        const ShiftOffset o{2 * a, 2 * b};
        level[o] = f(t + offset_value(o, tau0, tau1));
      }
    }
    return level;
  };
  prev = seed(0);
  out.push_back(prev.at(ShiftOffset{0, 0}));
  if (max_index >= 1) {
    cur = seed(1);
    out.push_back(cur.at(ShiftOffset{0, 0}));
  }
  for (int p = 2; p <= max_index; ++p) {
    std::map<ShiftOffset, cplx> next;
    for (const auto& [o, v] : prev) {
      const ShiftOffset back{o.i - 2, o.j};
      const ShiftOffset fwd{o.i, o.j + 2};
      if (prev.contains(back) && cur.contains(fwd)) {
        next[o] = -prev.at(back) + cur.at(fwd);
      }
    }
    // Shrinking domains are fine as long as the origin survives to level P.
    prev = cur;
    cur = next;
    out.push_back(cur.at(ShiftOffset{0, 0}));
  }
  return out;
}

ShiftOperator shift_l0() {
  return ShiftOperator::translation(ShiftOffset{-2, 0}, cplx(-1.0, 0.0));
}

ShiftOperator shift_l1() {
  return ShiftOperator::translation(ShiftOffset{0, 2}, cplx(1.0, 0.0));
}

ShiftExpansion shift_binomial_expansion(int p) {
  if (p < 0) throw std::invalid_argument("shift expansion: p must be >= 0");
  if (p == 0) return ShiftExpansion::base(ShiftBase::f0);
  if (p == 1) return ShiftExpansion::base(ShiftBase::f1);

  ShiftExpansion out;
  for (int k = 0; 2 * k <= p - 1; ++k) {
    const double c = (k % 2 == 0 ? 1.0 : -1.0) * binomial_double(p - 1 - k, k);
    out.add_term(ShiftExpansion::Key{
                     ShiftBase::f1, ShiftOffset{-2 * k, 2 * (p - 1 - 2 * k)}},
                 cplx(c, 0.0));
  }
  for (int k = 0; 2 * k <= p - 2; ++k) {
    const double c = (k % 2 == 0 ? -1.0 : 1.0) * binomial_double(p - 2 - k, k);
    out.add_term(
        ShiftExpansion::Key{ShiftBase::f0,
                            ShiftOffset{-2 * (k + 1), 2 * (p - 2 - 2 * k)}},
        cplx(c, 0.0));
  }
  return out;
}

ShiftExpansion shift_chebyshev_expansion(int p) {
  if (p < 0) throw std::invalid_argument("shift expansion: p must be >= 0");
  if (p == 0) return ShiftExpansion::base(ShiftBase::f0);
  if (p == 1) return ShiftExpansion::base(ShiftBase::f1);

  // R = (-L0)^{1/2} is the half-shift by -tau0/2; 2X = L1 R^{-1}.
  const ShiftOperator r = ShiftOperator::translation(ShiftOffset{-1, 0});
  const ShiftOperator r_inv = ShiftOperator::translation(ShiftOffset{1, 0});
  const ShiftOperator two_x = shift_l1() * r_inv;

  // U_q(X) by the three-term recurrence, as operators.
  std::vector<ShiftOperator> u;
  u.reserve(static_cast<std::size_t>(p));
  u.push_back(ShiftOperator::identity());
  u.push_back(two_x);
  for (int q = 2; q <= p - 1; ++q) {
    u.push_back(two_x * u[static_cast<std::size_t>(q - 1)] +
                cplx(-1.0, 0.0) * u[static_cast<std::size_t>(q - 2)]);
  }

  const ShiftExpansion from_f1 =
      (op_pow(r, p - 1) * u[static_cast<std::size_t>(p - 1)]) *
      ShiftExpansion::base(ShiftBase::f1);
  const ShiftExpansion from_f0 =
      (op_pow(r, p) * u[static_cast<std::size_t>(p - 2)]) *
      ShiftExpansion::base(ShiftBase::f0);
  return from_f1 + cplx(-1.0, 0.0) * from_f0;
}

ShiftSolution solve_shift_problem(const BaseFunction& f0,
                                  const BaseFunction& f1, double tau0,
                                  double tau1, int max_index,
                                  const std::vector<double>& samples) {
  if (max_index < 0) {
    throw std::invalid_argument("shift problem: max_index must be >= 0");
  }
  ShiftSolution sol;
  sol.samples = samples;

  Problem<ShiftOperator, ShiftExpansion> prob;
  prob.l0 = shift_l0();
  prob.l1 = shift_l1();
  prob.a = ShiftExpansion::base(ShiftBase::f0);
  prob.b = ShiftExpansion::base(ShiftBase::f1);
  prob.max_index = max_index;
  sol.general = solve_iterative(prob).values;

  sol.binomial.reserve(static_cast<std::size_t>(max_index) + 1);
  sol.chebyshev.reserve(static_cast<std::size_t>(max_index) + 1);
  for (int p = 0; p <= max_index; ++p) {
    sol.binomial.push_back(shift_binomial_expansion(p));
    sol.chebyshev.push_back(shift_chebyshev_expansion(p));
  }

  const std::size_t np = static_cast<std::size_t>(max_index) + 1;
  sol.general_values.assign(np, {});
  sol.binomial_values.assign(np, {});
  sol.chebyshev_values.assign(np, {});
  sol.recurrence_values.assign(np, {});
  for (std::size_t p = 0; p < np; ++p) {
    for (double t : samples) {
      sol.general_values[p].push_back(
          evaluate(sol.general[p], f0, f1, tau0, tau1, t));
      sol.binomial_values[p].push_back(
          evaluate(sol.binomial[p], f0, f1, tau0, tau1, t));
      sol.chebyshev_values[p].push_back(
          evaluate(sol.chebyshev[p], f0, f1, tau0, tau1, t));
    }
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const std::vector<cplx> col = shift_recurrence_values(
        f0, f1, tau0, tau1, max_index, samples[k]);
    for (std::size_t p = 0; p < np; ++p) {
      sol.recurrence_values[p].push_back(col[p]);
    }
  }

  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t k = 0; k < samples.size(); ++k) {
      sol.binomial_vs_recurrence =
          std::max(sol.binomial_vs_recurrence,
                   scaled_deviation(sol.binomial_values[p][k],
                                    sol.recurrence_values[p][k]));
      sol.general_vs_binomial =
          std::max(sol.general_vs_binomial,
                   scaled_deviation(sol.general_values[p][k],
                                    sol.binomial_values[p][k]));
      sol.chebyshev_vs_general =
          std::max(sol.chebyshev_vs_general,
                   scaled_deviation(sol.chebyshev_values[p][k],
                                    sol.general_values[p][k]));
    }
  }
  return sol;
}

}  // namespace opseq
