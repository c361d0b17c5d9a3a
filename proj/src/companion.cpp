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

#include "opseq/companion.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "opseq/errors.hpp"

namespace opseq {

namespace {

void check_block_dims(const BlockMatrix2x2& m) {
  const int n = m.tl.dim();
  if (m.tr.dim() != n || m.bl.dim() != n || m.br.dim() != n) {
    throw DimensionError("block matrix has blocks of unequal dimension");
  }
}

MatrixOperator resolvent_inverse(const MatrixOperator& l0,
                                 const MatrixOperator& l1, cplx s) {
  const MatrixOperator e = identity_like(l0);
  return mat_inverse(e - s * l1 - (s * s) * l0);
}

GenfunResidual residual_of(const MatrixOperator& partial,
                           const MatrixOperator& closed) {
  GenfunResidual r;
  r.absolute = (partial - closed).frobenius_norm();
  const double denom = closed.frobenius_norm();
  r.relative = denom > 0.0 ? r.absolute / denom : r.absolute;
  return r;
}

}  // namespace

BlockMatrix2x2 block_multiply(const BlockMatrix2x2& a,
                              const BlockMatrix2x2& b) {
  check_block_dims(a);
  check_block_dims(b);
  if (a.tl.dim() != b.tl.dim()) {
    throw DimensionError("block matrix product dimension mismatch");
  }
  BlockMatrix2x2 out{a.tl * b.tl + a.tr * b.bl, a.tl * b.tr + a.tr * b.br,
                     a.bl * b.tl + a.br * b.bl, a.bl * b.tr + a.br * b.br};
  return out;
}

BlockMatrix2x2 companion_matrix(const MatrixOperator& l0,
                                const MatrixOperator& l1) {
  if (l0.dim() != l1.dim()) {
    throw DimensionError("companion matrix needs L0, L1 of equal dimension");
  }
  return BlockMatrix2x2{zero_like(l0), identity_like(l0), l0, l1};
}

BlockMatrix2x2 companion_power(const MatrixOperator& l0,
                               const MatrixOperator& l1, int p) {
  if (p < 0) throw std::invalid_argument("companion_power: p must be >= 0");
  const BlockMatrix2x2 c1 = companion_matrix(l0, l1);
  BlockMatrix2x2 acc{identity_like(l0), zero_like(l0), zero_like(l0),
                     identity_like(l0)};
  for (int k = 0; k < p; ++k) acc = block_multiply(acc, c1);
  return acc;
}

bool genfun_gate(const MatrixOperator& l0, const MatrixOperator& l1, cplx s) {
  const double m = std::abs(s);
  return l1.frobenius_norm() * m + l0.frobenius_norm() * m * m <= 0.5;
}

std::vector<GenfunResidual> genfun_beta_sweep(const MatrixOperator& l0,
                                              const MatrixOperator& l1, cplx s,
                                              int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("genfun sweep: max_order must be >= 0");
  }
  const MatrixOperator closed = s * resolvent_inverse(l0, l1, s);

  // beta_0 = 0, beta_1 = E, beta_{p+2} = L0 beta_p + L1 beta_{p+1}.
  MatrixOperator beta_prev = zero_like(l0);
  MatrixOperator beta_cur = identity_like(l0);
  MatrixOperator partial = zero_like(l0);
  cplx s_pow(1.0, 0.0);

  std::vector<GenfunResidual> out;
  out.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int p = 0; p <= max_order; ++p) {
    if (p >= 1) {
      if (p >= 2) {
        MatrixOperator beta_next = l0 * beta_prev + l1 * beta_cur;
        beta_prev = beta_cur;
        beta_cur = beta_next;
      }
      partial = partial + s_pow * beta_cur;
    }
    out.push_back(residual_of(partial, closed));
    s_pow *= s;
  }
  return out;
}

std::vector<GenfunResidual> genfun_alpha_sweep(const MatrixOperator& l0,
                                               const MatrixOperator& l1,
                                               cplx s, int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("genfun sweep: max_order must be >= 0");
  }
  const MatrixOperator e = identity_like(l0);
  const MatrixOperator closed = resolvent_inverse(l0, l1, s) * (e - s * l1);

  // alpha_0 = E, alpha_1 = 0, alpha_p = beta_{p-1} L0.
  MatrixOperator beta_prev = zero_like(l0);   // beta_{p-1} at p = 1
  MatrixOperator beta_cur = identity_like(l0);
  MatrixOperator partial = e;  // the p = 0 term
  cplx s_pow(1.0, 0.0);

  std::vector<GenfunResidual> out;
  out.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int p = 0; p <= max_order; ++p) {
    if (p >= 2) {
      // beta_{p-1} lives in beta_cur once the recurrence has advanced p-2
      // steps past (beta_0, beta_1).
      partial = partial + s_pow * (beta_cur * l0);
      MatrixOperator beta_next = l0 * beta_prev + l1 * beta_cur;
      beta_prev = beta_cur;
      beta_cur = beta_next;
    }
    out.push_back(residual_of(partial, closed));
    s_pow *= s;
  }
  return out;
}

std::vector<GenfunResidual> genfun_chebyshev_sweep(const MatrixOperator& l1,
                                                   cplx s, int max_order) {
  if (max_order < 0) {
    throw std::invalid_argument("genfun sweep: max_order must be >= 0");
  }
  const MatrixOperator e = identity_like(l1);
  const MatrixOperator closed = mat_inverse(e - s * l1 + (s * s) * e);

  // U_0 = E, U_1 = 2X = L1, U_{p+1} = L1 U_p - U_{p-1} at X = L1/2.
  MatrixOperator u_prev = e;
  MatrixOperator u_cur = l1;
  MatrixOperator partial = zero_like(l1);
  cplx s_pow(1.0, 0.0);

  std::vector<GenfunResidual> out;
  out.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int p = 0; p <= max_order; ++p) {
    if (p == 0) {
      partial = partial + u_prev;
    } else if (p == 1) {
      partial = partial + s_pow * u_cur;
    } else {
      MatrixOperator u_next = l1 * u_cur - u_prev;
      u_prev = u_cur;
      u_cur = u_next;
      partial = partial + s_pow * u_cur;
    }
    out.push_back(residual_of(partial, closed));
    s_pow *= s;
  }
  return out;
}

GenfunResidual genfun_beta_check(const MatrixOperator& l0,
                                 const MatrixOperator& l1, cplx s,
                                 int max_order) {
  return genfun_beta_sweep(l0, l1, s, max_order).back();
}

GenfunResidual genfun_alpha_check(const MatrixOperator& l0,
                                  const MatrixOperator& l1, cplx s,
                                  int max_order) {
  return genfun_alpha_sweep(l0, l1, s, max_order).back();
}

GenfunResidual genfun_chebyshev_check(const MatrixOperator& l1, cplx s,
                                      int max_order) {
  return genfun_chebyshev_sweep(l1, s, max_order).back();
}

}  // namespace opseq
