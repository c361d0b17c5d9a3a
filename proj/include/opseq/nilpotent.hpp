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

#ifndef OPSEQ_NILPOTENT_HPP_
#define OPSEQ_NILPOTENT_HPP_

// Closed forms for the alpha/beta operator sequences when both
// coefficients are nilpotent of index 2 (M0^2 = M1^2 = 0).  Every
// symmetrized word containing two adjacent equal letters dies, so the
// surviving words are alternating and the sequences collapse to short
// products with period-3 structure in p:
//
//   beta_p:  p = 3k+1 (k >= 1)  (M0 M1)^k + (M1 M0)^k
//            p = 3k+2 (k >= 0)  M1 (M0 M1)^k
//            p = 3k   (k >= 1)  (M0 M1)^{k-1} M0
//            p = 1               E
//
//   alpha_p: p = 3k+2 (k >= 0)  (M0 M1)^k M0
//            p = 3k+3 (k >= 0)  M1 (M0 M1)^k M0
//            p = 3k+1 (k >= 1)  0
//
// alpha_0 = E and alpha_1 = 0 are boundary values of the general theory
// and are not produced here; nilpotent_alpha requires p >= 2.

#include "opseq/matrix.hpp"

namespace opseq {

inline constexpr double kDefaultNilpotentTol = 1e-12;

// Throws NotNilpotentError unless max|M^2| <= tol entrywise.
void require_nilpotent_index2(const MatrixOperator& m,
                              double tol = kDefaultNilpotentTol);

// beta_p for p >= 1; verifies index-2 nilpotency of both inputs.
MatrixOperator nilpotent_beta(int p, const MatrixOperator& m0,
                              const MatrixOperator& m1,
                              double tol = kDefaultNilpotentTol);

// alpha_p for p >= 2; the p = 3k+1 branch returns the exact zero matrix.
MatrixOperator nilpotent_alpha(int p, const MatrixOperator& m0,
                               const MatrixOperator& m1,
                               double tol = kDefaultNilpotentTol);

}  // namespace opseq

#endif  // OPSEQ_NILPOTENT_HPP_
