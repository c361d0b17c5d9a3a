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

#ifndef OPSEQ_PROBLEM_IO_HPP_
#define OPSEQ_PROBLEM_IO_HPP_

// Problem-file schema and deterministic output formatting.
//
// Problem files are JSON.  Complex numbers are always [re, im] pairs,
// matrices are row-major nested arrays of such pairs, polynomial
// coefficients are listed constant term first.  The loader is strict:
// anything that does not match the schema raises ProblemFormatError,
// mismatched shapes raise DimensionError.
//
// All output goes through fmt_g17, which renders doubles with 17
// significant digits so that identical inputs produce byte-identical
// reports across runs.

#include <optional>
#include <string>
#include <vector>

#include "opseq/shift.hpp"
#include "opseq/solver.hpp"
#include "opseq/volterra.hpp"

namespace opseq {

enum class BackendTag { matrix, shift, volterra };
enum class MethodSel { iterative, closed, chebyshev, all };

std::string to_string(BackendTag t);
std::string to_string(MethodSel m);
MethodSel parse_method(const std::string& name);  // ProblemFormatError

struct ShiftProblemFile {
  std::string f0_name;
  std::string f1_name;
  double tau0 = 0.0;
  double tau1 = 0.0;
  int max_index = 0;
  std::vector<double> samples;
};

struct VolterraProblemFile {
  cplx alpha;
  cplx beta;
  PolyFunction f0;
  PolyFunction f1;
  std::vector<cplx> boundary;  // f_2(0) .. f_P(0)
  int max_index = 0;
  int degree_cap = kDefaultDegreeCap;
};

struct ProblemFile {
  BackendTag backend = BackendTag::matrix;
  MethodSel method = MethodSel::all;
  std::optional<double> tolerance;

  // Exactly the member matching `backend` is engaged.
  std::optional<MatrixProblem> matrix;
  std::optional<ShiftProblemFile> shift;
  std::optional<VolterraProblemFile> volterra;
};

ProblemFile parse_problem_json(const std::string& text);
ProblemFile load_problem_file(const std::string& path);

// Named analytic base functions for the shift backend:
// "exp(t)", "exp(-t)", "sin(t)", "cos(t)", "t", "1".
BaseFunction lookup_base_function(const std::string& name);

// 17-significant-digit rendering; non-finite values become "null".
std::string fmt_g17(double x);
std::string json_complex(cplx z);
std::string json_cvector(const CVector& v);
std::string json_matrix(const MatrixOperator& m);
std::string json_poly(const PolyFunction& f);

}  // namespace opseq

#endif  // OPSEQ_PROBLEM_IO_HPP_
