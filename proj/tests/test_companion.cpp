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
#include "opseq/companion.hpp"
#include "opseq/errors.hpp"
#include "opseq/matrix.hpp"
#include "opseq/solver.hpp"
#include "support.hpp"

namespace opseq {
namespace {

TEST_CASE("companion matrix layout") {
  auto gen = test::rng(201);
  const MatrixOperator l0 = test::random_matrix(gen, 2);
  const MatrixOperator l1 = test::random_matrix(gen, 2);
  const BlockMatrix2x2 c1 = companion_matrix(l0, l1);
  CHECK(c1.tl == zero_like(l0));
  CHECK(c1.tr == identity_like(l0));
  CHECK(c1.bl == l0);
  CHECK(c1.br == l1);

  const BlockMatrix2x2 p0 = companion_power(l0, l1, 0);
  CHECK(p0.tl == identity_like(l0));
  CHECK(p0.tr == zero_like(l0));
  const BlockMatrix2x2 p1 = companion_power(l0, l1, 1);
  CHECK(p1.bl == l0);
  CHECK(p1.br == l1);
  CHECK_THROWS_AS(companion_power(l0, l1, -1), std::invalid_argument);
}

TEST_CASE("companion square by hand") {
  auto gen = test::rng(203);
  const MatrixOperator l0 = test::random_matrix(gen, 3);
  const MatrixOperator l1 = test::random_matrix(gen, 3);
  const BlockMatrix2x2 sq = companion_power(l0, l1, 2);
  // C1^2 = [[L0, L1], [L1 L0, L0 + L1^2]].
  CHECK(sq.tl == l0);
  CHECK(sq.tr == l1);
  CHECK(sq.bl == l1 * l0);
  CHECK(sq.br == l0 + l1 * l1);
}

TEST_CASE("companion powers reproduce alpha and beta blocks") {
  auto gen = test::rng(207);
  double worst = 0.0;
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 3);
    const MatrixOperator l0 = test::random_matrix(gen, n);
    const MatrixOperator l1 = test::random_matrix(gen, n);
    const auto beta = beta_operators(l0, l1, 11);
    const auto alpha = alpha_operators(l0, beta, 11);
    for (int p = 0; p <= 10; ++p) {
      const BlockMatrix2x2 cp = companion_power(l0, l1, p);
      const std::size_t k = static_cast<std::size_t>(p);
      double scale = 1.0;
      for (const MatrixOperator* m :
           {&alpha[k], &beta[k], &alpha[k + 1], &beta[k + 1]}) {
        scale = std::max(scale, m->max_abs_entry());
      }
      const double diff = std::max(
          {max_abs_diff(cp.tl, alpha[k]), max_abs_diff(cp.tr, beta[k]),
           max_abs_diff(cp.bl, alpha[k + 1]), max_abs_diff(cp.br, beta[k + 1])});
      worst = std::max(worst, diff / scale);
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("block dimension mismatches are rejected") {
  BlockMatrix2x2 a;
  a.tl = MatrixOperator::identity(2);
  a.tr = MatrixOperator::identity(2);
  a.bl = MatrixOperator::identity(2);
  a.br = MatrixOperator::identity(3);
  const BlockMatrix2x2 b = companion_matrix(MatrixOperator::identity(2),
                                            MatrixOperator::identity(2));
  CHECK_THROWS_AS(block_multiply(a, b), DimensionError);
}

TEST_CASE("generating function gate") {
  const MatrixOperator e = MatrixOperator::identity(1);
  CHECK(genfun_gate(e, e, cplx(0.1, 0.0)));
  CHECK_FALSE(genfun_gate(e, e, cplx(0.9, 0.0)));
}

TEST_CASE("generating functions on the scalar golden ratio pair") {
  // L0 = L1 = 1: beta_p are the Fibonacci numbers.
  const MatrixOperator one = MatrixOperator::identity(1);
  const GenfunResidual beta = genfun_beta_check(one, one, cplx(0.1, 0.0), 40);
  CHECK(beta.relative <= 1e-12);
  const GenfunResidual alpha = genfun_alpha_check(one, one, cplx(0.1, 0.0), 40);
  CHECK(alpha.relative <= 1e-12);
}

TEST_CASE("generating functions on random gated matrices") {
  auto gen = test::rng(211);
  for (int trial = 0; trial < 5; ++trial) {
    const MatrixOperator l0 = test::random_matrix(gen, 2);
    const MatrixOperator l1 = test::random_matrix(gen, 2);
    const cplx s(0.05, 0.0);
    REQUIRE(genfun_gate(l0, l1, s));
    CHECK(genfun_beta_check(l0, l1, s, 60).relative <= 1e-10);
    CHECK(genfun_alpha_check(l0, l1, s, 60).relative <= 1e-10);
  }
}

TEST_CASE("gated residuals decrease monotonically") {
  auto gen = test::rng(213);
  const MatrixOperator l0 = test::random_matrix(gen, 2);
  const MatrixOperator l1 = test::random_matrix(gen, 2);
  const cplx s(0.05, 0.0);
  REQUIRE(genfun_gate(l0, l1, s));
  const auto sweep = genfun_beta_sweep(l0, l1, s, 40);
  REQUIRE(sweep.size() == 41);
  for (std::size_t k = 1; k + 1 < sweep.size(); ++k) {
    CHECK(sweep[k + 1].relative <= sweep[k].relative + 1e-13);
  }
  const auto alpha_sweep = genfun_alpha_sweep(l0, l1, s, 40);
  for (std::size_t k = 1; k + 1 < alpha_sweep.size(); ++k) {
    CHECK(alpha_sweep[k + 1].relative <= alpha_sweep[k].relative + 1e-13);
  }
}

TEST_CASE("chebyshev generating function variant") {
  auto gen = test::rng(217);
  // Hermitian L1 with spectrum inside [-1, 1].
  const MatrixOperator v = test::random_unitary(gen, 3);
  MatrixOperator d(3);
  d.at(0, 0) = cplx(-0.8, 0.0);
  d.at(1, 1) = cplx(0.15, 0.0);
  d.at(2, 2) = cplx(0.95, 0.0);
  const MatrixOperator l1 = v * d * test::adjoint(v);
  const GenfunResidual r = genfun_chebyshev_check(l1, cplx(0.05, 0.0), 60);
  CHECK(r.relative <= 1e-10);

  // Consistency with the beta series at L0 = -E: beta_{p+1} = U_p(L1/2).
  const MatrixOperator minus_e = cplx(-1.0, 0.0) * MatrixOperator::identity(3);
  const GenfunResidual beta = genfun_beta_check(minus_e, l1, cplx(0.05, 0.0), 60);
  CHECK(beta.relative <= 1e-10);
}

TEST_CASE("trivial coefficients give zero residual once the series settles") {
  const MatrixOperator z(2);
  const auto sweep = genfun_beta_sweep(z, z, cplx(0.3, 0.0), 6);
  // Closed form is s E; the partial sum reaches it at order 1.
  CHECK(sweep[0].absolute == doctest::Approx(0.3 * std::sqrt(2.0)));
  for (std::size_t k = 1; k < sweep.size(); ++k) {
    CHECK(sweep[k].absolute == 0.0);
  }
  const auto alpha_sweep = genfun_alpha_sweep(z, z, cplx(0.3, 0.0), 6);
  for (const auto& r : alpha_sweep) CHECK(r.absolute == 0.0);
}

TEST_CASE("singular resolvent is reported") {
  // s = 0.5, L1 = 2E makes E - L1 s vanish; with strictly triangular L0
  // the full resolvent is singular.
  const MatrixOperator l1 = cplx(2.0, 0.0) * MatrixOperator::identity(2);
  MatrixOperator l0(2);
  l0.at(0, 1) = cplx(1.0, 0.0);
  CHECK_THROWS_AS(genfun_beta_check(l0, l1, cplx(0.5, 0.0), 8),
                  SingularMatrixError);
}

}  // namespace
}  // namespace opseq
