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

#ifndef OPSEQ_SCALAR_HPP
#define OPSEQ_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <optional>

namespace opseq {

using cplx = std::complex<double>;

// binomial(n, k) in 64-bit, or nullopt once the running value exceeds cap.
// Exact for every value it returns.
std::optional<std::int64_t> binomial_capped(int n, int k, std::int64_t cap);

// binomial(n, k) as a double. Exact while the result stays below 2^53.
double binomial_double(int n, int k);

double factorial_double(int n);

// U_p(x) by the three-term recurrence U_{p+1} = 2x U_p - U_{p-1}.
// Independent of the explicit-coefficient evaluation used for operators.
cplx chebyshev_u_scalar(int p, cplx x);

}  // namespace opseq

#endif  // OPSEQ_SCALAR_HPP
