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

#include "opseq/scalar.hpp"

namespace opseq {

std::optional<std::int64_t> binomial_capped(int n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // C(n, j) = C(n, j-1) * (n - j + 1) / j, integral at every step.
  std::int64_t c = 1;
  for (int j = 1; j <= k; ++j) {
    if (c > cap) return std::nullopt;
    c = c * (n - j + 1) / j;
  }
  if (c > cap) return std::nullopt;
  return c;
}

double binomial_double(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * static_cast<double>(n - j + 1) / j;
  return c;
}

double factorial_double(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

cplx chebyshev_u_scalar(int p, cplx x) {
  if (p < 0) return 0.0;
  cplx prev = 1.0;  // U_0
  if (p == 0) return prev;
  cplx cur = 2.0 * x;  // U_1
  for (int q = 1; q < p; ++q) {
    cplx next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace opseq
