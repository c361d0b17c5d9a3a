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

#ifndef OPSEQ_COMPANION_HPP_
#define OPSEQ_COMPANION_HPP_

// Companion-matrix view of the recurrence and truncated checks of the
// generating-function identities for the alpha/beta operator sequences.
//
// The first-order rewrite stacks (Y_p, Y_{p+1}) and advances it with the
// block matrix C1 = [[0, E], [L0, L1]].  Powers of C1 reproduce the
// alpha/beta operators blockwise:
//
//   C1^p = [[alpha_p, beta_p], [alpha_{p+1}, beta_{p+1}]]
//
// companion_power builds C1^p by plain block multiplication and therefore
// serves as an oracle that is independent of the recurrences in solver.hpp.
//
// The generating functions are checked as truncated residuals:
//
//   sum_p beta_p s^p   vs  (E - L1 s - L0 s^2)^{-1} s
//   sum_p alpha_p s^p  vs  (E - L1 s - L0 s^2)^{-1} (E - L1 s)
//
// and, for L0 = -E, the Chebyshev variant
//
//   sum_p U_p(L1/2) s^p  vs  (E - L1 s + s^2 E)^{-1}.
//
// Convergence is not guaranteed in general.  The heuristic gate
// ||L1||_F |s| + ||L0||_F |s|^2 <= 1/2 is sufficient for a geometric tail;
// callers should treat residuals outside the gate as informational.

#include <vector>

#include "opseq/matrix.hpp"

namespace opseq {

struct BlockMatrix2x2 {
  MatrixOperator tl, tr, bl, br;  // all four blocks share one dimension
};

BlockMatrix2x2 block_multiply(const BlockMatrix2x2& a, const BlockMatrix2x2& b);

// C1 = [[0, E], [L0, L1]].
BlockMatrix2x2 companion_matrix(const MatrixOperator& l0,
                                const MatrixOperator& l1);

// C1^p for p >= 0, computed by block multiplication only.
BlockMatrix2x2 companion_power(const MatrixOperator& l0,
                               const MatrixOperator& l1, int p);

struct GenfunResidual {
  double relative = 0.0;  // ||partial - closed||_F / ||closed||_F
  double absolute = 0.0;  // ||partial - closed||_F
};

// True when ||L1||_F |s| + ||L0||_F |s|^2 <= 1/2.
bool genfun_gate(const MatrixOperator& l0, const MatrixOperator& l1, cplx s);

// Residuals of the truncated series against the closed form for every
// truncation order 0..max_order (entry k covers sum_{p<=k}).  Throws
// SingularMatrixError when the resolvent E - L1 s - L0 s^2 is singular.
std::vector<GenfunResidual> genfun_beta_sweep(const MatrixOperator& l0,
                                              const MatrixOperator& l1, cplx s,
                                              int max_order);
std::vector<GenfunResidual> genfun_alpha_sweep(const MatrixOperator& l0,
                                               const MatrixOperator& l1,
                                               cplx s, int max_order);

// L0 = -E specialization: sum_p U_p(L1/2) s^p vs (E - L1 s + s^2 E)^{-1}.
std::vector<GenfunResidual> genfun_chebyshev_sweep(const MatrixOperator& l1,
                                                   cplx s, int max_order);

// Final-order residuals, convenience over the sweeps.
GenfunResidual genfun_beta_check(const MatrixOperator& l0,
                                 const MatrixOperator& l1, cplx s,
                                 int max_order);
GenfunResidual genfun_alpha_check(const MatrixOperator& l0,
                                  const MatrixOperator& l1, cplx s,
                                  int max_order);
GenfunResidual genfun_chebyshev_check(const MatrixOperator& l1, cplx s,
                                      int max_order);

}  // namespace opseq

#endif  // OPSEQ_COMPANION_HPP_
