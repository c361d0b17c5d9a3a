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

#ifndef OPSEQ_SOLVER_HPP
#define OPSEQ_SOLVER_HPP

// Cauchy problems for Y_{p+2} = L0 Y_p + L1 Y_{p+1} + phi_{p+1} with
// Y_0 = A, Y_1 = B, over any backend whose operators form an algebra
// acting on the value space. Three routes to the same sequence:
//
//   * direct iteration of the recurrence (the ground truth),
//   * the resolutive formula Y_p = alpha_p A + beta_p B
//       + sum_{r=1}^{p-1} beta_{p-r} phi_r, with beta materialized by
//     beta_{p+2} = L0 beta_p + L1 beta_{p+1} (beta_0 = 0, beta_1 = E) and
//     alpha_p = beta_{p-1} L0 for p >= 2 (alpha_0 = E, alpha_1 = 0),
//   * the word-enumeration oracle, evaluating the symbolic expansions of
//     alpha_p and beta_p term by term. Exponential; kept for checking.
//
// A fourth route for commuting matrix coefficients reduces beta_p to
// Chebyshev polynomials of the second kind and lives in solver.cpp.

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "opseq/errors.hpp"
#include "opseq/matrix.hpp"
#include "opseq/words.hpp"

namespace opseq {

template <class Op, class Vec>
concept SolverAlgebra = requires(const Op& a, const Op& b, const Vec& x,
                                 cplx s) {
  { a * b } -> std::convertible_to<Op>;
  { a + b } -> std::convertible_to<Op>;
  { s * a } -> std::convertible_to<Op>;
  { a * x } -> std::convertible_to<Vec>;
  { x + x } -> std::convertible_to<Vec>;
  { s * x } -> std::convertible_to<Vec>;
  { identity_like(a) } -> std::convertible_to<Op>;
  { zero_like(a) } -> std::convertible_to<Op>;
  { zero_like(x) } -> std::convertible_to<Vec>;
};

// Cauchy data. The forcing list holds phi_1 .. phi_{P-1}; an empty list
// means the homogeneous equation. phi_{p+1} enters the step that produces
// Y_{p+2}, so Y_2 is the first forced value.
template <class Op, class Vec>
struct Problem {
  Op l0;
  Op l1;
  Vec a;
  Vec b;
  std::vector<Vec> forcing;
  int max_index = 0;  // P: the solution runs Y_0 .. Y_P
};

enum class SolveMethod { iterative, closed_form, chebyshev, words_oracle };

std::string to_string(SolveMethod m);

template <class Vec>
struct SolutionSequence {
  std::vector<Vec> values;  // Y_0 .. Y_P
  SolveMethod method = SolveMethod::iterative;
};

template <class Op, class Vec>
  requires SolverAlgebra<Op, Vec>
void validate_problem(const Problem<Op, Vec>& prob) {
  if (prob.max_index < 0) throw Error("P must be nonnegative");
  const std::size_t expected =
      static_cast<std::size_t>(std::max(prob.max_index - 1, 0));
  if (!prob.forcing.empty() && prob.forcing.size() != expected) {
    throw DimensionError("forcing list has " +
                         std::to_string(prob.forcing.size()) +
                         " entries, expected " + std::to_string(expected) +
                         " (phi_1 .. phi_{P-1}) or none");
  }
}

namespace detail {

// Returns phi_r or the zero vector for a homogeneous problem.
template <class Op, class Vec>
const Vec* forcing_term(const Problem<Op, Vec>& prob, int r) {
  if (prob.forcing.empty()) return nullptr;
  return &prob.forcing[static_cast<std::size_t>(r - 1)];
}

}  // namespace detail

template <class Op, class Vec>
  requires SolverAlgebra<Op, Vec>
SolutionSequence<Vec> solve_iterative(const Problem<Op, Vec>& prob) {
  validate_problem(prob);
  SolutionSequence<Vec> sol;
  sol.method = SolveMethod::iterative;
  sol.values.push_back(prob.a);
  if (prob.max_index >= 1) sol.values.push_back(prob.b);
  for (int p = 0; p + 2 <= prob.max_index; ++p) {
    Vec next = prob.l0 * sol.values[static_cast<std::size_t>(p)] +
               prob.l1 * sol.values[static_cast<std::size_t>(p + 1)];
    if (const Vec* phi = detail::forcing_term(prob, p + 1)) {
      next = next + *phi;
    }
    sol.values.push_back(std::move(next));
  }
  return sol;
}

// beta_0 .. beta_P materialized by the two-term recurrence; O(P) operator
// operations instead of exponential word enumeration.
template <class Op>
std::vector<Op> beta_operators(const Op& l0, const Op& l1, int max_index) {
  if (max_index < 0) throw Error("P must be nonnegative");
  std::vector<Op> beta;
  beta.reserve(static_cast<std::size_t>(max_index) + 1);
  beta.push_back(zero_like(l0));
  if (max_index >= 1) beta.push_back(identity_like(l0));
  for (int p = 2; p <= max_index; ++p) {
    beta.push_back(l0 * beta[static_cast<std::size_t>(p - 2)] +
                   l1 * beta[static_cast<std::size_t>(p - 1)]);
  }
  return beta;
}

// alpha_0 .. alpha_P from the beta list: alpha_p = beta_{p-1} L0.
template <class Op>
std::vector<Op> alpha_operators(const Op& l0, const std::vector<Op>& beta,
                                int max_index) {
  std::vector<Op> alpha;
  alpha.reserve(static_cast<std::size_t>(max_index) + 1);
  alpha.push_back(identity_like(l0));
  if (max_index >= 1) alpha.push_back(zero_like(l0));
  for (int p = 2; p <= max_index; ++p) {
    alpha.push_back(beta[static_cast<std::size_t>(p - 1)] * l0);
  }
  return alpha;
}

template <class Op, class Vec>
  requires SolverAlgebra<Op, Vec>
SolutionSequence<Vec> solve_closed_form(const Problem<Op, Vec>& prob) {
  validate_problem(prob);
  SolutionSequence<Vec> sol;
  sol.method = SolveMethod::closed_form;
  sol.values.push_back(prob.a);
  if (prob.max_index >= 1) sol.values.push_back(prob.b);
  if (prob.max_index < 2) return sol;

  const std::vector<Op> beta =
      beta_operators(prob.l0, prob.l1, prob.max_index);
  const std::vector<Op> alpha =
      alpha_operators(prob.l0, beta, prob.max_index);
  for (int p = 2; p <= prob.max_index; ++p) {
    Vec y = alpha[static_cast<std::size_t>(p)] * prob.a +
            beta[static_cast<std::size_t>(p)] * prob.b;
    for (int r = 1; r <= p - 1; ++r) {
      if (const Vec* phi = detail::forcing_term(prob, r)) {
        y = y + beta[static_cast<std::size_t>(p - r)] * *phi;
      }
    }
    sol.values.push_back(std::move(y));
  }
  return sol;
}

// The oracle route: alpha_p and beta_p as explicit word expansions,
// contracted against the problem data term by term.
template <class Op, class Vec>
  requires SolverAlgebra<Op, Vec>
SolutionSequence<Vec> solve_words_oracle(const Problem<Op, Vec>& prob,
                                         std::int64_t cap = kDefaultWordCap) {
  validate_problem(prob);
  SolutionSequence<Vec> sol;
  sol.method = SolveMethod::words_oracle;
  sol.values.push_back(prob.a);
  if (prob.max_index >= 1) sol.values.push_back(prob.b);
  if (prob.max_index < 2) return sol;

  std::vector<WordSum> beta;
  beta.reserve(static_cast<std::size_t>(prob.max_index) + 1);
  for (int p = 0; p <= prob.max_index; ++p)
    beta.push_back(beta_expansion(p, cap));

  for (int p = 2; p <= prob.max_index; ++p) {
    Vec y = evaluate_word_sum(alpha_expansion(p, cap), prob.l0, prob.l1,
                              prob.a) +
            evaluate_word_sum(beta[static_cast<std::size_t>(p)], prob.l0,
                              prob.l1, prob.b);
    for (int r = 1; r <= p - 1; ++r) {
      if (const Vec* phi = detail::forcing_term(prob, r)) {
        y = y + evaluate_word_sum(beta[static_cast<std::size_t>(p - r)],
                                  prob.l0, prob.l1, *phi);
      }
    }
    sol.values.push_back(std::move(y));
  }
  return sol;
}

// Max componentwise deviation between two sequences, relative to the
// largest magnitude either attains. Backends supply max_abs/max_abs_diff.
template <class Vec>
double sequence_relative_deviation(const std::vector<Vec>& a,
                                   const std::vector<Vec>& b) {
  if (a.size() != b.size()) {
    throw DimensionError("sequences have different lengths");
  }
  double scale = 0.0;
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    scale = std::max({scale, max_abs(a[i]), max_abs(b[i])});
    dev = std::max(dev, max_abs_diff(a[i], b[i]));
  }
  if (scale == 0.0) return dev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return dev / scale;
}

using MatrixProblem = Problem<MatrixOperator, CVector>;
using MatrixSolution = SolutionSequence<CVector>;

inline constexpr double kDefaultCommuteTol = 1e-10;

// Commuting-coefficient reduction: with R = (-L0)^{1/2} and
// X = (1/2) L1 R^{-1},
//   Y_p = R^{p-1} U_{p-1}(X) B - R^p U_{p-2}(X) A
//       + sum_{r=1}^{p-1} R^{p-r-1} U_{p-r-1}(X) phi_r   (p >= 2).
// Requires ||L0 L1 - L1 L0||_F <= commute_tol * ||L0||_F ||L1||_F and an
// available principal root; throws NotCommutingError or
// SqrtUnavailableError otherwise, directing callers to the general path.
MatrixSolution solve_commuting_chebyshev(
    const MatrixProblem& prob, double commute_tol = kDefaultCommuteTol,
    double condition_bound = kDefaultSqrtConditionBound);

}  // namespace opseq

#endif  // OPSEQ_SOLVER_HPP
