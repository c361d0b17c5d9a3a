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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "opseq/shift.hpp"

namespace opseq {
namespace {

const BaseFunction kExpNeg = [](double t) { return cplx(std::exp(-t), 0.0); };
const BaseFunction kExpPos = [](double t) { return cplx(std::exp(t), 0.0); };
const BaseFunction kOne = [](double) { return cplx(1.0, 0.0); };

TEST_CASE("shift operator algebra") {
  const ShiftOperator t1 = ShiftOperator::translation({-2, 0});
  const ShiftOperator t2 = ShiftOperator::translation({0, 2});
  // Composition adds offsets.
  const ShiftOperator prod = t1 * t2;
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms().begin()->first == ShiftOffset{-2, 2});

  // Exact cancellation erases the term.
  ShiftOperator cancel = t1;
  cancel.add_term({-2, 0}, cplx(-1.0, 0.0));
  CHECK(cancel.is_zero());

  CHECK(t1 * t2 == t2 * t1);
  CHECK(shift_l0() * shift_l1() == shift_l1() * shift_l0());
  CHECK(identity_like(t1) * t2 == t2);
}

TEST_CASE("first solution step") {
  // f_2 = L0 f_0 + L1 f_1 = -f0(t - tau0) + f1(t + tau1).
  const ShiftExpansion f2 =
      shift_l0() * ShiftExpansion::base(ShiftBase::f0) +
      shift_l1() * ShiftExpansion::base(ShiftBase::f1);
  REQUIRE(f2.terms().size() == 2);
  const auto it0 = f2.terms().find({ShiftBase::f0, ShiftOffset{-2, 0}});
  REQUIRE(it0 != f2.terms().end());
  CHECK(it0->second == cplx(-1.0, 0.0));
  const auto it1 = f2.terms().find({ShiftBase::f1, ShiftOffset{0, 2}});
  REQUIRE(it1 != f2.terms().end());
  CHECK(it1->second == cplx(1.0, 0.0));
  CHECK(f2 == shift_binomial_expansion(2));
}

TEST_CASE("evaluation instantiates lattice offsets") {
  ShiftExpansion x;
  x.add_term({ShiftBase::f1, ShiftOffset{0, 2}}, cplx(1.0, 0.0));
  const cplx got = evaluate(x, kExpNeg, kExpPos, 0.2, 0.3, 0.5);
  CHECK(std::abs(got - cplx(std::exp(0.8), 0.0)) < 1e-12);
}

TEST_CASE("three symbolic routes build identical expansions") {
  for (int p = 2; p <= 10; ++p) {
    const ShiftExpansion binom = shift_binomial_expansion(p);
    const ShiftExpansion cheb = shift_chebyshev_expansion(p);
    CHECK(binom == cheb);
    for (const auto& [key, coeff] : binom.terms()) {
      // Integer coefficients with alternating signs.
      CHECK(coeff.imag() == 0.0);
      CHECK(coeff.real() == std::round(coeff.real()));
    }
  }
}

TEST_CASE("binomial route matches the pointwise recurrence") {
  const ShiftSolution sol =
      solve_shift_problem(kExpNeg, kExpPos, 0.2, 0.3, 8, {0.0, 0.5, 1.0});
  REQUIRE(sol.general.size() == 9);
  REQUIRE(sol.recurrence_values.size() == 9);
  CHECK(sol.binomial_vs_recurrence <= 1e-10);
  CHECK(sol.general_vs_binomial <= 1e-12);
  CHECK(sol.chebyshev_vs_general <= 1e-9);
  for (int p = 2; p <= 8; ++p) {
    CHECK(sol.general[static_cast<std::size_t>(p)] ==
          sol.binomial[static_cast<std::size_t>(p)]);
  }
}

TEST_CASE("degenerate delays collapse to the scalar recurrence") {
  // tau0 = tau1 = 0: y_{p+2} = y_{p+1} - y_p, which is 6-periodic.
  const ShiftSolution sol =
      solve_shift_problem(kOne, kOne, 0.0, 0.0, 12, {0.7});
  const double expected[13] = {1.0, 1.0, 0.0, -1.0, -1.0, 0.0, 1.0,
                               1.0, 0.0,  -1.0, -1.0, 0.0, 1.0};
  for (int p = 0; p <= 12; ++p) {
    CHECK(std::abs(sol.recurrence_values[static_cast<std::size_t>(p)][0] -
                   cplx(expected[p], 0.0)) == 0.0);
    CHECK(std::abs(sol.binomial_values[static_cast<std::size_t>(p)][0] -
                   cplx(expected[p], 0.0)) < 1e-12);
  }
  CHECK(sol.binomial_vs_recurrence <= 1e-12);
}

TEST_CASE("recurrence values helper stands alone") {
  const std::vector<cplx> vals =
      shift_recurrence_values(kExpNeg, kExpPos, 0.2, 0.3, 4, 1.0);
  REQUIRE(vals.size() == 5);
  CHECK(std::abs(vals[0] - cplx(std::exp(-1.0), 0.0)) < 1e-15);
  CHECK(std::abs(vals[1] - cplx(std::exp(1.0), 0.0)) < 1e-15);
  // f_2(1) = -f0(1 - 0.2) + f1(1 + 0.3).
  const cplx f2 = -kExpNeg(0.8) + kExpPos(1.3);
  CHECK(std::abs(vals[2] - f2) < 1e-12);
}

}  // namespace
}  // namespace opseq
