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

#include "opseq/solver.hpp"

#include <sstream>
#include <vector>

namespace opseq {

std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::iterative:
      return "iterative";
    case SolveMethod::closed_form:
      return "closed_form";
    case SolveMethod::chebyshev:
      return "chebyshev";
    case SolveMethod::words_oracle:
      return "words_oracle";
  }
  return "unknown";
}

MatrixSolution solve_commuting_chebyshev(const MatrixProblem& prob,
                                         double commute_tol,
                                         double condition_bound) {
  validate_problem(prob);

  const double comm = commutator_norm(prob.l0, prob.l1);
  const double scale =
      prob.l0.frobenius_norm() * prob.l1.frobenius_norm();
  if (comm > commute_tol * scale) {
    std::ostringstream msg;
    msg << "coefficients do not commute: ||[L0,L1]||_F = " << comm
        << " exceeds " << commute_tol << " * ||L0||_F * ||L1||_F = "
        << commute_tol * scale;
    throw NotCommutingError(msg.str(), comm);
  }

  MatrixSolution out;
  out.method = SolveMethod::chebyshev;
  const int max_p = prob.max_index;
  out.values.reserve(static_cast<std::size_t>(max_p) + 1);
  out.values.push_back(prob.a);
  if (max_p >= 1) out.values.push_back(prob.b);
  if (max_p < 2) return out;

  const MatrixOperator r = mat_sqrt(-prob.l0, condition_bound);
  const MatrixOperator r_inv = mat_inverse(r);
  const MatrixOperator x = cplx(0.5, 0.0) * (prob.l1 * r_inv);

  // R^q for q = 0..max_p and U_q(X) for q = 0..max_p-1 cover every
  // index the resolutive expression touches.
  std::vector<MatrixOperator> r_pow;
  r_pow.reserve(static_cast<std::size_t>(max_p) + 1);
  r_pow.push_back(identity_like(r));
  for (int q = 1; q <= max_p; ++q) r_pow.push_back(r_pow.back() * r);

  std::vector<MatrixOperator> u;
  u.reserve(static_cast<std::size_t>(max_p));
  for (int q = 0; q <= max_p - 1; ++q) u.push_back(chebyshev_u(q, x));

  for (int p = 2; p <= max_p; ++p) {
    CVector y = (r_pow[static_cast<std::size_t>(p - 1)] *
                 u[static_cast<std::size_t>(p - 1)]) *
                prob.b;
    y = y + cplx(-1.0, 0.0) *
                ((r_pow[static_cast<std::size_t>(p)] *
                  u[static_cast<std::size_t>(p - 2)]) *
                 prob.a);
    for (int r_idx = 1; r_idx <= p - 1; ++r_idx) {
      if (prob.forcing.empty()) break;
      y = y + (r_pow[static_cast<std::size_t>(p - r_idx - 1)] *
               u[static_cast<std::size_t>(p - r_idx - 1)]) *
                  prob.forcing[static_cast<std::size_t>(r_idx - 1)];
    }
    out.values.push_back(y);
  }
  return out;
}

}  // namespace opseq
