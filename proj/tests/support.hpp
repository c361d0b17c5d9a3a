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

#ifndef OPSEQ_TESTS_SUPPORT_HPP_
#define OPSEQ_TESTS_SUPPORT_HPP_

// Deterministic random problem generators shared by the unit and
// acceptance suites. Every test fixes its own seed; nothing here reads
// global state.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "opseq/matrix.hpp"
#include "opseq/solver.hpp"

namespace opseq::test {

inline std::mt19937_64 rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

// Uniform over the closed unit disc.
inline cplx unit_disc(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double re = u(gen);
    const double im = u(gen);
    if (re * re + im * im <= 1.0) return cplx(re, im);
  }
}

// Modulus in [lo, hi], uniform argument.
inline cplx annulus(std::mt19937_64& gen, double lo, double hi) {
  std::uniform_real_distribution<double> mod(lo, hi);
  std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
  const double r = mod(gen);
  const double t = arg(gen);
  return cplx(r * std::cos(t), r * std::sin(t));
}

inline CVector random_vector(std::mt19937_64& gen, int n) {
  CVector v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = unit_disc(gen);
  return v;
}

inline MatrixOperator random_matrix(std::mt19937_64& gen, int n) {
  MatrixOperator m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = unit_disc(gen);
  }
  return m;
}

inline MatrixOperator adjoint(const MatrixOperator& m) {
  MatrixOperator out(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out.at(i, j) = std::conj(m.at(j, i));
  }
  return out;
}

// Gram-Schmidt on random columns; unitary to rounding.
inline MatrixOperator random_unitary(std::mt19937_64& gen, int n) {
  MatrixOperator q(n);
  for (int j = 0; j < n; ++j) {
    std::vector<cplx> col(static_cast<std::size_t>(n));
    for (;;) {
      for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = unit_disc(gen);
      for (int prev = 0; prev < j; ++prev) {
        cplx proj(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
          proj += std::conj(q.at(i, prev)) * col[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < n; ++i) {
          col[static_cast<std::size_t>(i)] -= proj * q.at(i, prev);
        }
      }
      double norm2 = 0.0;
      for (int i = 0; i < n; ++i) norm2 += std::norm(col[static_cast<std::size_t>(i)]);
      if (norm2 > 1e-6) {  // redraw nearly dependent columns
        const double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < n; ++i) q.at(i, j) = inv * col[static_cast<std::size_t>(i)];
        break;
      }
    }
  }
  return q;
}

// Commuting pair sharing a unitary eigenbasis. l0's spectrum stays away
// from zero so -l0 has a well-conditioned principal root.
inline void commuting_pair(std::mt19937_64& gen, int n, MatrixOperator& l0,
                           MatrixOperator& l1) {
  const MatrixOperator v = random_unitary(gen, n);
  const MatrixOperator vh = adjoint(v);
  MatrixOperator d0(n), d1(n);
  for (int i = 0; i < n; ++i) {
    d0.at(i, i) = annulus(gen, 0.4, 1.2);
    d1.at(i, i) = annulus(gen, 0.1, 1.0);
  }
  l0 = v * d0 * vh;
  l1 = v * d1 * vh;
}

// Rank-one index-2 nilpotent: u v^T with v^T u = 0 (plain transpose, no
// conjugation, to kill the inner square exactly).
inline MatrixOperator random_nilpotent2(std::mt19937_64& gen, int n) {
  for (;;) {
    CVector u = random_vector(gen, n);
    CVector w = random_vector(gen, n);
    cplx uu(0.0, 0.0), uw(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      uu += u[k] * u[k];
      uw += u[k] * w[k];
    }
    if (std::abs(uu) < 0.1) continue;  // near-isotropic u makes v explode
    const cplx scale = uw / uu;
    MatrixOperator m(n);
    double mag = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const cplx vj = w[static_cast<std::size_t>(j)] -
                        scale * u[static_cast<std::size_t>(j)];
        m.at(i, j) = u[static_cast<std::size_t>(i)] * vj;
        mag = std::max(mag, std::abs(m.at(i, j)));
      }
    }
    if (mag > 1e-2) return m;  // avoid degenerate, nearly zero draws
  }
}

}  // namespace opseq::test

#endif  // OPSEQ_TESTS_SUPPORT_HPP_
