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

#include "opseq/nilpotent.hpp"

#include <sstream>
#include <stdexcept>

#include "opseq/errors.hpp"

namespace opseq {

void require_nilpotent_index2(const MatrixOperator& m, double tol) {
  const double residual = (m * m).max_abs_entry();
  if (residual > tol) {
    std::ostringstream msg;
    msg << "matrix is not nilpotent of index 2: max|M^2| = " << residual
        << " exceeds " << tol;
    throw NotNilpotentError(msg.str());
  }
}

MatrixOperator nilpotent_beta(int p, const MatrixOperator& m0,
                              const MatrixOperator& m1, double tol) {
  if (p < 1) throw std::invalid_argument("nilpotent_beta: p must be >= 1");
  require_nilpotent_index2(m0, tol);
  require_nilpotent_index2(m1, tol);
  if (p == 1) return identity_like(m0);

  const MatrixOperator m0m1 = m0 * m1;
  switch (p % 3) {
    case 1: {  // p = 3k+1, k >= 1
      const int k = (p - 1) / 3;
      return mat_pow(m0m1, k) + mat_pow(m1 * m0, k);
    }
    case 2: {  // p = 3k+2, k >= 0
      const int k = (p - 2) / 3;
      return m1 * mat_pow(m0m1, k);
    }
    default: {  // p = 3k, k >= 1
      const int k = p / 3;
      return mat_pow(m0m1, k - 1) * m0;
    }
  }
}

MatrixOperator nilpotent_alpha(int p, const MatrixOperator& m0,
                               const MatrixOperator& m1, double tol) {
  if (p < 2) throw std::invalid_argument("nilpotent_alpha: p must be >= 2");
  require_nilpotent_index2(m0, tol);
  require_nilpotent_index2(m1, tol);

  const MatrixOperator m0m1 = m0 * m1;
  switch (p % 3) {
    case 2: {  // p = 3k+2, k >= 0
      const int k = (p - 2) / 3;
      return mat_pow(m0m1, k) * m0;
    }
    case 0: {  // p = 3k+3, k >= 0
      const int k = (p - 3) / 3;
      return m1 * mat_pow(m0m1, k) * m0;
    }
    default:  // p = 3k+1, k >= 1: the branch that vanishes identically
      return zero_like(m0);
  }
}

}  // namespace opseq
