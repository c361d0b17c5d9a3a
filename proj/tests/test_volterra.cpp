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

#include <vector>

#include "doctest.h"
#include "opseq/errors.hpp"
#include "opseq/scalar.hpp"
#include "opseq/solver.hpp"
#include "opseq/volterra.hpp"

namespace opseq {
namespace {

TEST_CASE("polynomial calculus") {
  const PolyFunction f({cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(3.0, 0.0)});
  CHECK(f.degree() == 2);
  CHECK(f.evaluate(cplx(2.0, 0.0)) == cplx(17.0, 0.0));
  CHECK(f.derivative() ==
        PolyFunction({cplx(2.0, 0.0), cplx(6.0, 0.0)}));
  // int_0^t (1 + 2u + 3u^2) du = t + t^2 + t^3.
  CHECK(f.integral() == PolyFunction({cplx(0.0, 0.0), cplx(1.0, 0.0),
                                      cplx(1.0, 0.0), cplx(1.0, 0.0)}));
  CHECK(f.integral().derivative() == f);

  CHECK(PolyFunction().is_zero());
  CHECK(PolyFunction().degree() == -1);
  // Trailing exact zeros are trimmed on construction.
  CHECK(PolyFunction({cplx(1.0, 0.0), cplx(0.0, 0.0)}).degree() == 0);
  CHECK(PolyFunction::monomial(3).coeff(3) == cplx(1.0, 0.0));
  CHECK(PolyFunction::monomial(3).coeff(1) == cplx(0.0, 0.0));
}

TEST_CASE("iterated integration of the constant") {
  const PolyFunction one = PolyFunction::constant(cplx(1.0, 0.0));
  CHECK(volterra_power(1, one) == PolyFunction::monomial(1));
  CHECK(volterra_power(2, one).coeff(2) == cplx(0.5, 0.0));
  // t^3/6 comes out bitwise identical on both routes.
  const PolyFunction it3 = volterra_power(3, one);
  const PolyFunction ck3 = cauchy_kernel(3, one);
  CHECK(it3.coeff(3) == cplx(1.0 / 6.0, 0.0));
  CHECK(it3 == ck3);
  CHECK(volterra_power(0, one) == one);
  CHECK(cauchy_kernel(0, one) == one);
}

TEST_CASE("iterated integrals match the Cauchy kernel") {
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) {
    for (int j = 0; j <= 6; ++j) {
      const PolyFunction f = PolyFunction::monomial(j);
      worst = std::max(worst,
                       max_abs_diff(volterra_power(n, f), cauchy_kernel(n, f)));
    }
  }
  CHECK(worst <= 1e-13);

  // A mixed polynomial with complex coefficients.
  const PolyFunction g({cplx(1.0, -2.0), cplx(0.0, 0.5), cplx(-3.0, 0.0)});
  for (int n = 0; n <= 6; ++n) {
    CHECK(max_abs_diff(volterra_power(n, g), cauchy_kernel(n, g)) <= 1e-13);
  }

  // L^4 t^2 = 2! t^6 / 6! = t^6 / 360.
  const PolyFunction l4 = volterra_power(4, PolyFunction::monomial(2));
  CHECK(std::abs(l4.coeff(6) - cplx(1.0 / 360.0, 0.0)) < 1e-18);
  CHECK(l4.degree() == 6);
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(volterra_power(10, PolyFunction::monomial(60)),
                  DegreeCapError);
  const VolterraOperator l = VolterraOperator::integration(cplx(1.0, 0.0), 5);
  CHECK_THROWS_AS(l * PolyFunction::monomial(5), DegreeCapError);
  CHECK((l * PolyFunction::monomial(4)).degree() == 5);
}

TEST_CASE("operator algebra in L") {
  const cplx a(0.7, 0.0), b(-0.4, 0.0);
  const VolterraOperator l0 = VolterraOperator::integration(a);
  const VolterraOperator l1 = VolterraOperator::integration(b);
  // Polynomial multiplication in L: (aL)(bL) = ab L^2.
  const VolterraOperator prod = l0 * l1;
  REQUIRE(prod.l_coeffs().size() == 3);
  CHECK(prod.l_coeffs()[2] == a * b);
  CHECK(identity_like(l0).l_coeffs().size() == 1);
  CHECK(zero_like(l0).l_coeffs().empty());

  // Applying E + bL to t: t + b t^2/2.
  const VolterraOperator affine = identity_like(l1) + l1;
  const PolyFunction out = affine * PolyFunction::monomial(1);
  CHECK(out.coeff(1) == cplx(1.0, 0.0));
  CHECK(out.coeff(2) == b * cplx(0.5, 0.0));
}

TEST_CASE("binomial beta and alpha forms match the generic recurrence") {
  const cplx a(0.7, 0.2), b(-0.4, 0.1);
  const VolterraOperator l0 = VolterraOperator::integration(a);
  const VolterraOperator l1 = VolterraOperator::integration(b);
  const auto beta = beta_operators(l0, l1, 10);
  const auto alpha = alpha_operators(l0, beta, 10);

  const std::vector<PolyFunction> probes = {
      PolyFunction::constant(cplx(1.0, 0.0)),
      PolyFunction({cplx(0.5, -1.0), cplx(2.0, 0.0)}),
      PolyFunction::monomial(3, cplx(0.0, 1.5))};
  double worst = 0.0;
  for (const PolyFunction& f : probes) {
    for (int p = 1; p <= 10; ++p) {
      worst = std::max(
          worst, max_abs_diff(volterra_beta_apply(a, b, p, f),
                              beta[static_cast<std::size_t>(p)] * f));
      if (p >= 2) {
        worst = std::max(
            worst, max_abs_diff(volterra_alpha_apply(a, b, p, f),
                                alpha[static_cast<std::size_t>(p)] * f));
      }
    }
  }
  CHECK(worst <= 1e-11);
}

TEST_CASE("pure accumulation problem produces the factorial family") {
  // alpha = 0, beta = 1, f0 = 0, f1 = 1: f_p = t^{p-1}/(p-1)!.
  const VolterraSolution sol = solve_volterra_problem(
      cplx(0.0, 0.0), cplx(1.0, 0.0), PolyFunction(),
      PolyFunction::constant(cplx(1.0, 0.0)),
      std::vector<cplx>(7, cplx(0.0, 0.0)), 8);
  REQUIRE(sol.iterative.size() == 9);
  for (int p = 1; p <= 8; ++p) {
    const PolyFunction& f = sol.iterative[static_cast<std::size_t>(p)];
    CHECK(f.degree() == p - 1);
    CHECK(std::abs(f.coeff(p - 1) - cplx(1.0 / factorial_double(p - 1), 0.0)) <
          1e-16);
  }
  CHECK(sol.route_deviation <= 1e-13);
  CHECK(sol.derivative_residual <= 1e-13);
  CHECK(sol.boundary_error == 0.0);
}

TEST_CASE("pure forcing reduces to the particular solution") {
  // f0 = f1 = 0 leaves only the beta-convolved boundary constants.
  const std::vector<cplx> boundary = {cplx(1.0, 0.0), cplx(-0.5, 0.5),
                                      cplx(0.25, 0.0), cplx(0.0, -1.0)};
  const VolterraSolution sol =
      solve_volterra_problem(cplx(0.4, 0.0), cplx(0.9, 0.0), PolyFunction(),
                             PolyFunction(), boundary, 5);
  CHECK(sol.route_deviation <= 1e-13);
  CHECK(sol.boundary_error == 0.0);
  CHECK(sol.derivative_residual <= 1e-13);
  // f_2 is the constant phi_1.
  CHECK(sol.iterative[2] == PolyFunction::constant(boundary[0]));
}

TEST_CASE("zero operators freeze the boundary constants") {
  const std::vector<cplx> boundary = {cplx(2.0, 0.0), cplx(3.0, 0.0)};
  const VolterraSolution sol = solve_volterra_problem(
      cplx(0.0, 0.0), cplx(0.0, 0.0), PolyFunction::monomial(1),
      PolyFunction::constant(cplx(5.0, 0.0)), boundary, 3);
  CHECK(sol.iterative[2] == PolyFunction::constant(boundary[0]));
  CHECK(sol.iterative[3] == PolyFunction::constant(boundary[1]));
  CHECK(sol.route_deviation == 0.0);
}

TEST_CASE("derivative identity on a generic problem") {
  std::vector<cplx> boundary;
  for (int r = 1; r <= 9; ++r) {
    boundary.push_back(cplx(0.1 * r, -0.05 * r));
  }
  const VolterraSolution sol = solve_volterra_problem(
      cplx(0.35, 0.0), cplx(0.8, 0.0),
      PolyFunction({cplx(1.0, 0.0), cplx(-1.0, 0.0)}),
      PolyFunction({cplx(0.5, 0.0), cplx(0.0, 0.0), cplx(2.0, 0.0)}), boundary,
      10);
  CHECK(sol.route_deviation <= 1e-12);
  CHECK(sol.derivative_residual <= 1e-11);
  CHECK(sol.boundary_error == 0.0);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(
      solve_volterra_problem(cplx(0.0, 0.0), cplx(1.0, 0.0), PolyFunction(),
                             PolyFunction(), {}, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      solve_volterra_problem(cplx(0.0, 0.0), cplx(1.0, 0.0), PolyFunction(),
                             PolyFunction(), {cplx(1.0, 0.0)}, 4),
      DimensionError);
  CHECK_THROWS_AS(volterra_beta_apply(cplx(1.0, 0.0), cplx(1.0, 0.0), 0,
                                      PolyFunction::constant(cplx(1.0, 0.0))),
                  std::invalid_argument);
}

}  // namespace
}  // namespace opseq
