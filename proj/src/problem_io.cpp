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

#include "opseq/problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "opseq/errors.hpp"

namespace opseq {

namespace {

using nlohmann::json;

[[noreturn]] void format_error(const std::string& what) {
  throw ProblemFormatError(what);
}

const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) format_error(std::string("missing field \"") + key + "\"");
  return *it;
}

double parse_real(const json& j, const char* what) {
  if (!j.is_number()) format_error(std::string(what) + " must be a number");
  return j.get<double>();
}

int parse_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    format_error(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

cplx parse_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    format_error(std::string(what) + " must be a [re, im] pair");
  }
  return cplx(j[0].get<double>(), j[1].get<double>());
}

CVector parse_cvector(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    format_error(std::string(what) + " must be a nonempty array of pairs");
  }
  CVector v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    v[k] = parse_complex(j[k], what);
  }
  return v;
}

MatrixOperator parse_matrix(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    format_error(std::string(what) + " must be a nonempty array of rows");
  }
  const std::size_t n = j.size();
  MatrixOperator m(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n) {
      format_error(std::string(what) + " must be square; row " +
                   std::to_string(i) + " has " + std::to_string(row.size()) +
                   " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      m.at(static_cast<int>(i), static_cast<int>(c)) =
          parse_complex(row[c], what);
    }
  }
  return m;
}

PolyFunction parse_poly(const json& j, const char* what) {
  if (!j.is_array()) {
    format_error(std::string(what) +
                 " must be an array of [re, im] coefficient pairs");
  }
  std::vector<cplx> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    coeffs.push_back(parse_complex(j[k], what));
  }
  return PolyFunction(std::move(coeffs));
}

MatrixProblem parse_matrix_problem(const json& j) {
  MatrixProblem prob;
  prob.l0 = parse_matrix(require_field(j, "l0"), "l0");
  prob.l1 = parse_matrix(require_field(j, "l1"), "l1");
  prob.a = parse_cvector(require_field(j, "a"), "a");
  prob.b = parse_cvector(require_field(j, "b"), "b");
  prob.max_index = parse_int(require_field(j, "max_index"), "max_index");

  const int n = prob.l0.dim();
  if (prob.l1.dim() != n) {
    throw DimensionError("l0 is " + std::to_string(n) + "x" +
                         std::to_string(n) + " but l1 is " +
                         std::to_string(prob.l1.dim()) + "x" +
                         std::to_string(prob.l1.dim()));
  }
  if (static_cast<int>(prob.a.size()) != n ||
      static_cast<int>(prob.b.size()) != n) {
    throw DimensionError("initial vectors must have " + std::to_string(n) +
                         " entries to match the operators");
  }
  if (auto it = j.find("forcing"); it != j.end()) {
    if (!it->is_array()) format_error("forcing must be an array of vectors");
    for (std::size_t k = 0; k < it->size(); ++k) {
      CVector phi = parse_cvector((*it)[k], "forcing");
      if (static_cast<int>(phi.size()) != n) {
        throw DimensionError("forcing entry " + std::to_string(k) + " has " +
                             std::to_string(phi.size()) +
                             " entries, expected " + std::to_string(n));
      }
      prob.forcing.push_back(std::move(phi));
    }
  }
  return prob;
}

ShiftProblemFile parse_shift_problem(const json& j) {
  ShiftProblemFile f;
  const json& f0 = require_field(j, "f0");
  const json& f1 = require_field(j, "f1");
  if (!f0.is_string() || !f1.is_string()) {
    format_error("shift f0/f1 must be base-function names");
  }
  f.f0_name = f0.get<std::string>();
  f.f1_name = f1.get<std::string>();
  lookup_base_function(f.f0_name);  // validate now, use later
  lookup_base_function(f.f1_name);
  f.tau0 = parse_real(require_field(j, "tau0"), "tau0");
  f.tau1 = parse_real(require_field(j, "tau1"), "tau1");
  f.max_index = parse_int(require_field(j, "max_index"), "max_index");
  if (auto it = j.find("samples"); it != j.end()) {
    if (!it->is_array() || it->empty()) {
      format_error("samples must be a nonempty array of numbers");
    }
    for (const json& s : *it) f.samples.push_back(parse_real(s, "samples"));
  } else {
    f.samples = {0.0, 0.5, 1.0};
  }
  return f;
}

VolterraProblemFile parse_volterra_problem(const json& j) {
  VolterraProblemFile f;
  f.alpha = cplx(parse_real(require_field(j, "alpha"), "alpha"), 0.0);
  f.beta = cplx(parse_real(require_field(j, "beta"), "beta"), 0.0);
  f.f0 = parse_poly(require_field(j, "f0"), "f0");
  f.f1 = parse_poly(require_field(j, "f1"), "f1");
  f.max_index = parse_int(require_field(j, "max_index"), "max_index");
  const json& boundary = require_field(j, "boundary");
  if (!boundary.is_array()) {
    format_error("boundary must be an array of [re, im] pairs");
  }
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    f.boundary.push_back(parse_complex(boundary[k], "boundary"));
  }
  if (auto it = j.find("degree_cap"); it != j.end()) {
    f.degree_cap = parse_int(*it, "degree_cap");
    if (f.degree_cap < 1) format_error("degree_cap must be >= 1");
  }
  return f;
}

}  // namespace

std::string to_string(BackendTag t) {
  switch (t) {
    case BackendTag::matrix:
      return "matrix";
    case BackendTag::shift:
      return "shift";
    case BackendTag::volterra:
      return "volterra";
  }
  return "unknown";
}

std::string to_string(MethodSel m) {
  switch (m) {
    case MethodSel::iterative:
      return "iterative";
    case MethodSel::closed:
      return "closed_form";
    case MethodSel::chebyshev:
      return "chebyshev";
    case MethodSel::all:
      return "all";
  }
  return "unknown";
}

MethodSel parse_method(const std::string& name) {
  if (name == "iterative") return MethodSel::iterative;
  if (name == "closed_form" || name == "closed") return MethodSel::closed;
  if (name == "chebyshev") return MethodSel::chebyshev;
  if (name == "all") return MethodSel::all;
  format_error("unknown method \"" + name +
               "\"; expected iterative, closed_form, chebyshev or all");
}

ProblemFile parse_problem_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) format_error("problem file must be a JSON object");

  ProblemFile file;
  const json& backend = require_field(j, "backend");
  if (!backend.is_string()) format_error("backend must be a string");
  const std::string tag = backend.get<std::string>();
  if (tag == "matrix") {
    file.backend = BackendTag::matrix;
    file.matrix = parse_matrix_problem(j);
  } else if (tag == "shift") {
    file.backend = BackendTag::shift;
    file.shift = parse_shift_problem(j);
  } else if (tag == "volterra") {
    file.backend = BackendTag::volterra;
    file.volterra = parse_volterra_problem(j);
  } else {
    format_error("unknown backend \"" + tag +
                 "\"; expected matrix, shift or volterra");
  }

  if (auto it = j.find("method"); it != j.end()) {
    if (!it->is_string()) format_error("method must be a string");
    file.method = parse_method(it->get<std::string>());
  }
  if (auto it = j.find("tolerance"); it != j.end()) {
    file.tolerance = parse_real(*it, "tolerance");
    if (*file.tolerance <= 0.0) format_error("tolerance must be positive");
  }
  return file;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) format_error("cannot read problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_json(buf.str());
}

BaseFunction lookup_base_function(const std::string& name) {
  if (name == "exp(t)") {
    return [](double t) { return cplx(std::exp(t), 0.0); };
  }
  if (name == "exp(-t)") {
    return [](double t) { return cplx(std::exp(-t), 0.0); };
  }
  if (name == "sin(t)") {
    return [](double t) { return cplx(std::sin(t), 0.0); };
  }
  if (name == "cos(t)") {
    return [](double t) { return cplx(std::cos(t), 0.0); };
  }
  if (name == "t") {
    return [](double t) { return cplx(t, 0.0); };
  }
  if (name == "1") {
    return [](double) { return cplx(1.0, 0.0); };
  }
  format_error("unknown base function \"" + name +
               "\"; expected one of exp(t), exp(-t), sin(t), cos(t), t, 1");
}

std::string fmt_g17(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_complex(cplx z) {
  return "[" + fmt_g17(z.real()) + ", " + fmt_g17(z.imag()) + "]";
}

std::string json_cvector(const CVector& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ", ";
    out += json_complex(v[k]);
  }
  return out + "]";
}

std::string json_matrix(const MatrixOperator& m) {
  std::string out = "[";
  for (int i = 0; i < m.dim(); ++i) {
    if (i > 0) out += ", ";
    out += "[";
    for (int j = 0; j < m.dim(); ++j) {
      if (j > 0) out += ", ";
      out += json_complex(m.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string json_poly(const PolyFunction& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) out += ", ";
    out += json_complex(f.coeffs()[k]);
  }
  return out + "]";
}

}  // namespace opseq
