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

// opseq: solve Y_{p+2} = L0 Y_p + L1 Y_{p+1} + phi_{p+1} and exercise the
// closed forms around it.
//
// Exit codes partition outcomes:
//   0  success
//   1  methods disagree beyond tolerance
//   2  parse / schema / usage error
//   3  numerical failure (singularity, non-commuting chebyshev request,
//      resource or degree cap, non-nilpotent input)
//
// Output is deterministic: fixed key order, 17-significant-digit floats,
// sorted term listings. Identical inputs give byte-identical bytes.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opseq/companion.hpp"
#include "opseq/errors.hpp"
#include "opseq/nilpotent.hpp"
#include "opseq/problem_io.hpp"
#include "opseq/shift.hpp"
#include "opseq/solver.hpp"
#include "opseq/volterra.hpp"
#include "opseq/words.hpp"

namespace {

using namespace opseq;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNumerical = 3;

constexpr double kDefaultTolerance = 1e-9;
constexpr int kDefaultMaxDim = 16;
constexpr int kDefaultMaxP = 200;

// Precedence: --tol flag, then the problem file, then OPSEQ_TOL, then the
// built-in default.
double resolve_tolerance(const std::optional<double>& flag_tol,
                         const std::optional<double>& file_tol) {
  if (flag_tol) return *flag_tol;
  if (file_tol) return *file_tol;
  if (const char* env = std::getenv("OPSEQ_TOL")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const double v = std::stod(text, &used);
      if (used != text.size() || v <= 0.0) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw ProblemFormatError(std::string("OPSEQ_TOL is not a positive "
                                           "number: \"") +
                               env + "\"");
    }
  }
  return kDefaultTolerance;
}

void check_limit(int value, int limit, const char* what, const char* flag) {
  if (value > limit) {
    std::ostringstream msg;
    msg << what << " = " << value << " exceeds " << limit << "; raise "
        << flag << " to allow it";
    throw ResourceLimitError(msg.str());
  }
}

std::string json_values_block(
    const std::vector<std::pair<std::string, const std::vector<CVector>*>>&
        runs) {
  std::string out = "{";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i > 0) out += ", ";
    out += "\"" + runs[i].first + "\": [";
    const std::vector<CVector>& vals = *runs[i].second;
    for (std::size_t p = 0; p < vals.size(); ++p) {
      if (p > 0) out += ", ";
      out += json_cvector(vals[p]);
    }
    out += "]";
  }
  return out + "}";
}

std::string json_value_table(const std::vector<std::vector<cplx>>& table) {
  std::string out = "[";
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (p > 0) out += ", ";
    out += "[";
    for (std::size_t k = 0; k < table[p].size(); ++k) {
      if (k > 0) out += ", ";
      out += json_complex(table[p][k]);
    }
    out += "]";
  }
  return out + "]";
}

std::string json_poly_list(const std::vector<PolyFunction>& polys) {
  std::string out = "[";
  for (std::size_t p = 0; p < polys.size(); ++p) {
    if (p > 0) out += ", ";
    out += json_poly(polys[p]);
  }
  return out + "]";
}

struct SolveOpts {
  std::string path;
  std::string method_flag;  // empty = use the file's selection
  std::optional<double> tol;
  bool csv = false;
  std::int64_t max_terms = kDefaultWordCap;
  int max_dim = kDefaultMaxDim;
  int max_p = kDefaultMaxP;
};

int solve_matrix(const ProblemFile& file, MethodSel method, double tol,
                 const SolveOpts& opts) {
  const MatrixProblem& prob = *file.matrix;
  check_limit(prob.l0.dim(), opts.max_dim, "matrix dimension", "--max-dim");
  check_limit(prob.max_index, opts.max_p, "max_index", "--max-p");

  std::vector<std::pair<std::string, MatrixSolution>> runs;
  std::string skipped;
  const bool all = method == MethodSel::all;
  if (all || method == MethodSel::iterative) {
    runs.emplace_back("iterative", solve_iterative(prob));
  }
  if (all || method == MethodSel::closed) {
    runs.emplace_back("closed_form", solve_closed_form(prob));
  }
  if (all || method == MethodSel::chebyshev) {
    if (all) {
      try {
        runs.emplace_back("chebyshev", solve_commuting_chebyshev(prob));
      } catch (const NotCommutingError& e) {
        skipped = std::string("chebyshev: ") + e.what();
      } catch (const SqrtUnavailableError& e) {
        skipped = std::string("chebyshev: ") + e.what();
      } catch (const SingularMatrixError& e) {
        skipped = std::string("chebyshev: ") + e.what();
      }
    } else {
      runs.emplace_back("chebyshev", solve_commuting_chebyshev(prob));
    }
  }

  double deviation = 0.0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      deviation = std::max(deviation,
                           sequence_relative_deviation(runs[i].second.values,
                                                       runs[j].second.values));
    }
  }
  const bool ok = deviation <= tol;

  std::string out;
  if (opts.csv) {
    out += "method,p,component,re,im\n";
    for (const auto& [name, sol] : runs) {
      for (std::size_t p = 0; p < sol.values.size(); ++p) {
        for (std::size_t c = 0; c < sol.values[p].size(); ++c) {
          out += name + "," + std::to_string(p) + "," + std::to_string(c) +
                 "," + fmt_g17(sol.values[p][c].real()) + "," +
                 fmt_g17(sol.values[p][c].imag()) + "\n";
        }
      }
    }
    out += "# max_pairwise_deviation = " + fmt_g17(deviation) + "\n";
    if (!skipped.empty()) out += "# skipped " + skipped + "\n";
    out += std::string("# status = ") + (ok ? "ok" : "method_disagreement") +
           "\n";
  } else {
    out += "{\n  \"backend\": \"matrix\",\n";
    out += "  \"max_index\": " + std::to_string(prob.max_index) + ",\n";
    out += "  \"methods\": [";
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (i > 0) out += ", ";
      out += "\"" + runs[i].first + "\"";
    }
    out += "],\n";
    if (!skipped.empty()) out += "  \"skipped\": \"" + skipped + "\",\n";
    std::vector<std::pair<std::string, const std::vector<CVector>*>> refs;
    refs.reserve(runs.size());
    for (const auto& [name, sol] : runs) refs.emplace_back(name, &sol.values);
    out += "  \"values\": " + json_values_block(refs) + ",\n";
    out += "  \"max_pairwise_deviation\": " + fmt_g17(deviation) + ",\n";
    out += "  \"tolerance\": " + fmt_g17(tol) + ",\n";
    out += std::string("  \"status\": \"") +
           (ok ? "ok" : "method_disagreement") + "\"\n}\n";
  }
  std::cout << out;
  return ok ? kExitOk : kExitDisagreement;
}

int solve_shift(const ProblemFile& file, MethodSel method, double tol,
                const SolveOpts& opts) {
  const ShiftProblemFile& f = *file.shift;
  check_limit(f.max_index, opts.max_p, "max_index", "--max-p");
  const ShiftSolution sol = solve_shift_problem(
      lookup_base_function(f.f0_name), lookup_base_function(f.f1_name),
      f.tau0, f.tau1, f.max_index, f.samples);

  std::vector<std::pair<std::string, const std::vector<std::vector<cplx>>*>>
      tables;
  const bool all = method == MethodSel::all;
  if (all || method == MethodSel::iterative) {
    tables.emplace_back("general", &sol.general_values);
  }
  if (all || method == MethodSel::closed) {
    tables.emplace_back("binomial", &sol.binomial_values);
  }
  if (all || method == MethodSel::chebyshev) {
    tables.emplace_back("chebyshev", &sol.chebyshev_values);
  }
  if (all) tables.emplace_back("recurrence", &sol.recurrence_values);

  const double deviation =
      all ? std::max({sol.binomial_vs_recurrence, sol.general_vs_binomial,
                      sol.chebyshev_vs_general})
          : 0.0;
  const bool ok = deviation <= tol;

  std::string out;
  if (opts.csv) {
    out += "route,p,t,re,im\n";
    for (const auto& [name, table] : tables) {
      for (std::size_t p = 0; p < table->size(); ++p) {
        for (std::size_t k = 0; k < (*table)[p].size(); ++k) {
          out += name + "," + std::to_string(p) + "," + fmt_g17(f.samples[k]) +
                 "," + fmt_g17((*table)[p][k].real()) + "," +
                 fmt_g17((*table)[p][k].imag()) + "\n";
        }
      }
    }
    out += "# max_route_deviation = " + fmt_g17(deviation) + "\n";
    out += std::string("# status = ") + (ok ? "ok" : "method_disagreement") +
           "\n";
  } else {
    out += "{\n  \"backend\": \"shift\",\n";
    out += "  \"max_index\": " + std::to_string(f.max_index) + ",\n";
    out += "  \"samples\": [";
    for (std::size_t k = 0; k < f.samples.size(); ++k) {
      if (k > 0) out += ", ";
      out += fmt_g17(f.samples[k]);
    }
    out += "],\n  \"values\": {";
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i > 0) out += ", ";
      out += "\"" + tables[i].first + "\": " + json_value_table(*tables[i].second);
    }
    out += "},\n";
    out += "  \"deviations\": {\"binomial_vs_recurrence\": " +
           fmt_g17(sol.binomial_vs_recurrence) +
           ", \"general_vs_binomial\": " + fmt_g17(sol.general_vs_binomial) +
           ", \"chebyshev_vs_general\": " + fmt_g17(sol.chebyshev_vs_general) +
           "},\n";
    out += "  \"tolerance\": " + fmt_g17(tol) + ",\n";
    out += std::string("  \"status\": \"") +
           (ok ? "ok" : "method_disagreement") + "\"\n}\n";
  }
  std::cout << out;
  return ok ? kExitOk : kExitDisagreement;
}

int solve_volterra(const ProblemFile& file, MethodSel method, double tol,
                   const SolveOpts& opts) {
  const VolterraProblemFile& f = *file.volterra;
  check_limit(f.max_index, opts.max_p, "max_index", "--max-p");
  if (method == MethodSel::chebyshev) {
    throw ProblemFormatError(
        "method chebyshev is not available for the volterra backend");
  }
  const VolterraSolution sol =
      solve_volterra_problem(f.alpha, f.beta, f.f0, f.f1, f.boundary,
                             f.max_index, f.degree_cap);

  std::vector<std::pair<std::string, const std::vector<PolyFunction>*>> series;
  const bool all = method == MethodSel::all;
  if (all || method == MethodSel::iterative) {
    series.emplace_back("iterative", &sol.iterative);
  }
  if (all || method == MethodSel::closed) {
    series.emplace_back("closed", &sol.closed);
  }
  const double worst =
      all ? std::max({sol.route_deviation, sol.derivative_residual,
                      sol.boundary_error})
          : 0.0;
  const bool ok = worst <= tol;

  std::string out;
  if (opts.csv) {
    out += "series,p,k,re,im\n";
    for (const auto& [name, list] : series) {
      for (std::size_t p = 0; p < list->size(); ++p) {
        const std::vector<cplx>& coeffs = (*list)[p].coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
          out += name + "," + std::to_string(p) + "," + std::to_string(k) +
                 "," + fmt_g17(coeffs[k].real()) + "," +
                 fmt_g17(coeffs[k].imag()) + "\n";
        }
      }
    }
    out += "# route_deviation = " + fmt_g17(sol.route_deviation) + "\n";
    out += "# derivative_residual = " + fmt_g17(sol.derivative_residual) + "\n";
    out += "# boundary_error = " + fmt_g17(sol.boundary_error) + "\n";
    out += std::string("# status = ") + (ok ? "ok" : "method_disagreement") +
           "\n";
  } else {
    out += "{\n  \"backend\": \"volterra\",\n";
    out += "  \"max_index\": " + std::to_string(f.max_index) + ",\n";
    out += "  \"values\": {";
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (i > 0) out += ", ";
      out += "\"" + series[i].first + "\": " + json_poly_list(*series[i].second);
    }
    out += "},\n";
    out += "  \"checks\": {\"route_deviation\": " +
           fmt_g17(sol.route_deviation) +
           ", \"derivative_residual\": " + fmt_g17(sol.derivative_residual) +
           ", \"boundary_error\": " + fmt_g17(sol.boundary_error) + "},\n";
    out += "  \"tolerance\": " + fmt_g17(tol) + ",\n";
    out += std::string("  \"status\": \"") +
           (ok ? "ok" : "method_disagreement") + "\"\n}\n";
  }
  std::cout << out;
  return ok ? kExitOk : kExitDisagreement;
}

int run_solve(const SolveOpts& opts) {
  ProblemFile file = load_problem_file(opts.path);
  const MethodSel method = opts.method_flag.empty()
                               ? file.method
                               : parse_method(opts.method_flag);
  const double tol = resolve_tolerance(opts.tol, file.tolerance);
  switch (file.backend) {
    case BackendTag::matrix:
      return solve_matrix(file, method, tol, opts);
    case BackendTag::shift:
      return solve_shift(file, method, tol, opts);
    case BackendTag::volterra:
      return solve_volterra(file, method, tol, opts);
  }
  throw Error("unreachable backend tag");
}

struct WordsOpts {
  int u = -1;
  int v = -1;
  int beta_p = -1;
  int alpha_p = -1;
  std::int64_t max_terms = kDefaultWordCap;
};

int run_words(const WordsOpts& opts) {
  const bool have_uv = opts.u >= 0 || opts.v >= 0;
  const bool have_beta = opts.beta_p >= 0;
  const bool have_alpha = opts.alpha_p >= 0;
  if (have_uv + have_beta + have_alpha != 1 ||
      (have_uv && (opts.u < 0 || opts.v < 0))) {
    throw ProblemFormatError(
        "pass either both -u and -v, or --beta P, or --alpha P");
  }
  WordSum sum;
  std::string label;
  if (have_uv) {
    sum = symmetrized_words(opts.u, opts.v, opts.max_terms);
    label = "{L0^(" + std::to_string(opts.u) + ") L1^(" +
            std::to_string(opts.v) + ")}";
  } else if (have_beta) {
    sum = beta_expansion(opts.beta_p, opts.max_terms);
    label = "beta_" + std::to_string(opts.beta_p);
  } else {
    sum = alpha_expansion(opts.alpha_p, opts.max_terms);
    label = "alpha_" + std::to_string(opts.alpha_p);
  }
  const std::int64_t count = sum.term_count();
  std::cout << label << ": " << sum.str() << " (" << count
            << (count == 1 ? " term)" : " terms)") << "\n";
  return kExitOk;
}

struct CompanionOpts {
  std::string path;
  int p = 2;
  std::optional<double> tol;
  bool csv = false;
  int max_p = kDefaultMaxP;
};

int run_companion(const CompanionOpts& opts) {
  ProblemFile file = load_problem_file(opts.path);
  if (file.backend != BackendTag::matrix) {
    throw ProblemFormatError("companion requires a matrix-backend problem");
  }
  if (opts.p < 0) throw ProblemFormatError("-p must be >= 0");
  check_limit(opts.p, opts.max_p, "p", "--max-p");
  const double tol = resolve_tolerance(opts.tol, file.tolerance);

  const MatrixOperator& l0 = file.matrix->l0;
  const MatrixOperator& l1 = file.matrix->l1;
  const BlockMatrix2x2 power = companion_power(l0, l1, opts.p);
  const std::vector<MatrixOperator> beta = beta_operators(l0, l1, opts.p + 1);
  const std::vector<MatrixOperator> alpha =
      alpha_operators(l0, beta, opts.p + 1);

  const std::size_t p = static_cast<std::size_t>(opts.p);
  const MatrixOperator* expected[4] = {&alpha[p], &beta[p], &alpha[p + 1],
                                       &beta[p + 1]};
  const MatrixOperator* actual[4] = {&power.tl, &power.tr, &power.bl,
                                     &power.br};
  double abs_dev = 0.0;
  double scale = 1.0;
  for (int b = 0; b < 4; ++b) {
    abs_dev = std::max(abs_dev, max_abs_diff(*actual[b], *expected[b]));
    scale = std::max(scale, expected[b]->max_abs_entry());
  }
  const double rel = abs_dev / scale;
  const bool ok = rel <= tol;

  std::string out;
  if (opts.csv) {
    const char* names[4] = {"alpha_p", "beta_p", "alpha_p1", "beta_p1"};
    out += "block,i,j,re,im\n";
    for (int b = 0; b < 4; ++b) {
      for (int i = 0; i < actual[b]->dim(); ++i) {
        for (int j = 0; j < actual[b]->dim(); ++j) {
          out += std::string(names[b]) + "," + std::to_string(i) + "," +
                 std::to_string(j) + "," + fmt_g17(actual[b]->at(i, j).real()) +
                 "," + fmt_g17(actual[b]->at(i, j).imag()) + "\n";
        }
      }
    }
    out += "# relative_residual = " + fmt_g17(rel) + "\n";
    out += std::string("# status = ") + (ok ? "ok" : "block_mismatch") + "\n";
  } else {
    out += "{\n  \"p\": " + std::to_string(opts.p) + ",\n";
    out += "  \"blocks\": {\"alpha_p\": " + json_matrix(power.tl) +
           ", \"beta_p\": " + json_matrix(power.tr) +
           ", \"alpha_p1\": " + json_matrix(power.bl) +
           ", \"beta_p1\": " + json_matrix(power.br) + "},\n";
    out += "  \"relative_residual\": " + fmt_g17(rel) + ",\n";
    out += "  \"tolerance\": " + fmt_g17(tol) + ",\n";
    out += std::string("  \"status\": \"") + (ok ? "ok" : "block_mismatch") +
           "\"\n}\n";
  }
  std::cout << out;
  return ok ? kExitOk : kExitDisagreement;
}

struct GenfunOpts {
  std::string path;
  double s = 0.1;
  int k = 40;
  bool chebyshev_variant = false;
  std::optional<double> tol;
  bool csv = false;
};

int run_genfun(const GenfunOpts& opts) {
  ProblemFile file = load_problem_file(opts.path);
  if (file.backend != BackendTag::matrix) {
    throw ProblemFormatError("genfun-check requires a matrix-backend problem");
  }
  if (opts.k < 0) throw ProblemFormatError("-K must be >= 0");
  const double tol = resolve_tolerance(opts.tol, file.tolerance);
  const MatrixOperator& l0 = file.matrix->l0;
  const MatrixOperator& l1 = file.matrix->l1;
  const cplx s(opts.s, 0.0);

  std::string out;
  bool ok = true;
  if (opts.chebyshev_variant) {
    if (max_abs_diff(l0, -identity_like(l0)) > 1e-12) {
      throw Error("the chebyshev variant requires L0 = -E in the problem file");
    }
    const bool gate = genfun_gate(l0, l1, s);
    const std::vector<GenfunResidual> sweep =
        genfun_chebyshev_sweep(l1, s, opts.k);
    ok = !gate || sweep.back().relative <= tol;
    if (opts.csv) {
      out += "K,chebyshev_relative,chebyshev_absolute\n";
      for (std::size_t k = 0; k < sweep.size(); ++k) {
        out += std::to_string(k) + "," + fmt_g17(sweep[k].relative) + "," +
               fmt_g17(sweep[k].absolute) + "\n";
      }
      out += "# status = ";
    } else {
      out += "{\n  \"variant\": \"chebyshev\",\n";
      out += "  \"s\": " + fmt_g17(opts.s) + ",\n";
      out += "  \"max_order\": " + std::to_string(opts.k) + ",\n";
      out += std::string("  \"gate_satisfied\": ") +
             (gate ? "true" : "false") + ",\n";
      out += "  \"residual\": {\"relative\": " +
             fmt_g17(sweep.back().relative) +
             ", \"absolute\": " + fmt_g17(sweep.back().absolute) + "},\n";
      out += "  \"tolerance\": " + fmt_g17(tol) + ",\n  \"status\": \"";
    }
    const char* status = !gate              ? "outside_convergence_gate"
                         : ok               ? "ok"
                                            : "residual_exceeds_tolerance";
    out += status;
    out += opts.csv ? "\n" : "\"\n}\n";
  } else {
    const bool gate = genfun_gate(l0, l1, s);
    const std::vector<GenfunResidual> beta =
        genfun_beta_sweep(l0, l1, s, opts.k);
    const std::vector<GenfunResidual> alpha =
        genfun_alpha_sweep(l0, l1, s, opts.k);
    ok = !gate ||
         (beta.back().relative <= tol && alpha.back().relative <= tol);
    if (opts.csv) {
      out += "K,beta_relative,beta_absolute,alpha_relative,alpha_absolute\n";
      for (std::size_t k = 0; k < beta.size(); ++k) {
        out += std::to_string(k) + "," + fmt_g17(beta[k].relative) + "," +
               fmt_g17(beta[k].absolute) + "," + fmt_g17(alpha[k].relative) +
               "," + fmt_g17(alpha[k].absolute) + "\n";
      }
      out += "# status = ";
    } else {
      out += "{\n  \"s\": " + fmt_g17(opts.s) + ",\n";
      out += "  \"max_order\": " + std::to_string(opts.k) + ",\n";
      out += std::string("  \"gate_satisfied\": ") +
             (gate ? "true" : "false") + ",\n";
      out += "  \"beta_residual\": {\"relative\": " +
             fmt_g17(beta.back().relative) +
             ", \"absolute\": " + fmt_g17(beta.back().absolute) + "},\n";
      out += "  \"alpha_residual\": {\"relative\": " +
             fmt_g17(alpha.back().relative) +
             ", \"absolute\": " + fmt_g17(alpha.back().absolute) + "},\n";
      out += "  \"tolerance\": " + fmt_g17(tol) + ",\n  \"status\": \"";
    }
    const char* status = !gate              ? "outside_convergence_gate"
                         : ok               ? "ok"
                                            : "residual_exceeds_tolerance";
    out += status;
    out += opts.csv ? "\n" : "\"\n}\n";
  }
  std::cout << out;
  return ok ? kExitOk : kExitDisagreement;
}

struct DemoNilpotentOpts {
  int p = 12;
  std::optional<double> tol;
  bool csv = false;
};

int run_demo_nilpotent(const DemoNilpotentOpts& opts) {
  if (opts.p < 2) throw ProblemFormatError("--p must be >= 2");
  const double tol = resolve_tolerance(opts.tol, std::nullopt);
  const MatrixOperator m0 = MatrixOperator::from_rows(
      {{cplx(0, 0), cplx(1, 0)}, {cplx(0, 0), cplx(0, 0)}});
  const MatrixOperator m1 = MatrixOperator::from_rows(
      {{cplx(0, 0), cplx(0, 0)}, {cplx(1, 0), cplx(0, 0)}});

  const std::vector<MatrixOperator> beta = beta_operators(m0, m1, opts.p);
  const std::vector<MatrixOperator> alpha = alpha_operators(m0, beta, opts.p);
  double beta_dev = 0.0;
  double alpha_dev = 0.0;
  for (int p = 1; p <= opts.p; ++p) {
    beta_dev = std::max(beta_dev,
                        max_abs_diff(nilpotent_beta(p, m0, m1),
                                     beta[static_cast<std::size_t>(p)]));
    if (p >= 2) {
      alpha_dev = std::max(alpha_dev,
                           max_abs_diff(nilpotent_alpha(p, m0, m1),
                                        alpha[static_cast<std::size_t>(p)]));
    }
  }
  const bool alpha4_zero =
      opts.p < 4 || nilpotent_alpha(4, m0, m1).max_abs_entry() == 0.0;
  const bool ok = beta_dev <= tol && alpha_dev <= tol && alpha4_zero;

  std::string out;
  if (opts.csv) {
    out += "p,kind,i,j,re,im\n";
    for (int p = 1; p <= opts.p; ++p) {
      const MatrixOperator b = nilpotent_beta(p, m0, m1);
      for (int i = 0; i < b.dim(); ++i) {
        for (int j = 0; j < b.dim(); ++j) {
          out += std::to_string(p) + ",beta," + std::to_string(i) + "," +
                 std::to_string(j) + "," + fmt_g17(b.at(i, j).real()) + "," +
                 fmt_g17(b.at(i, j).imag()) + "\n";
        }
      }
      if (p < 2) continue;
      const MatrixOperator a = nilpotent_alpha(p, m0, m1);
      for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
          out += std::to_string(p) + ",alpha," + std::to_string(i) + "," +
                 std::to_string(j) + "," + fmt_g17(a.at(i, j).real()) + "," +
                 fmt_g17(a.at(i, j).imag()) + "\n";
        }
      }
    }
    out += "# beta_deviation = " + fmt_g17(beta_dev) + "\n";
    out += "# alpha_deviation = " + fmt_g17(alpha_dev) + "\n";
    out += std::string("# alpha4_exact_zero = ") +
           (alpha4_zero ? "true" : "false") + "\n";
    out += std::string("# status = ") + (ok ? "ok" : "closed_form_mismatch") +
           "\n";
  } else {
    out += "{\n  \"max_index\": " + std::to_string(opts.p) + ",\n";
    out += "  \"beta_deviation\": " + fmt_g17(beta_dev) + ",\n";
    out += "  \"alpha_deviation\": " + fmt_g17(alpha_dev) + ",\n";
    out += std::string("  \"alpha4_exact_zero\": ") +
           (alpha4_zero ? "true" : "false") + ",\n";
    out += "  \"tolerance\": " + fmt_g17(tol) + ",\n";
    out += std::string("  \"status\": \"") +
           (ok ? "ok" : "closed_form_mismatch") + "\"\n}\n";
  }
  std::cout << out;
  return ok ? kExitOk : kExitDisagreement;
}

struct DemoShiftOpts {
  double tau0 = 0.2;
  double tau1 = 0.3;
  std::string f0 = "exp(-t)";
  std::string f1 = "exp(t)";
  int p = 8;
  std::vector<double> samples = {0.0, 0.5, 1.0};
  std::optional<double> tol;
  bool csv = false;
};

int run_demo_shift(const DemoShiftOpts& opts) {
  if (opts.p < 0) throw ProblemFormatError("--p must be >= 0");
  const double tol = resolve_tolerance(opts.tol, std::nullopt);
  const ShiftSolution sol = solve_shift_problem(
      lookup_base_function(opts.f0), lookup_base_function(opts.f1), opts.tau0,
      opts.tau1, opts.p, opts.samples);
  const double worst =
      std::max({sol.binomial_vs_recurrence, sol.general_vs_binomial,
                sol.chebyshev_vs_general});
  const bool ok = worst <= tol;

  std::string out;
  if (opts.csv) {
    out += "t";
    for (int p = 0; p <= opts.p; ++p) {
      out += ",f" + std::to_string(p) + "_re,f" + std::to_string(p) + "_im";
    }
    out += "\n";
    for (std::size_t k = 0; k < opts.samples.size(); ++k) {
      out += fmt_g17(opts.samples[k]);
      for (int p = 0; p <= opts.p; ++p) {
        const cplx v = sol.general_values[static_cast<std::size_t>(p)][k];
        out += "," + fmt_g17(v.real()) + "," + fmt_g17(v.imag());
      }
      out += "\n";
    }
    out += "# binomial_vs_recurrence = " +
           fmt_g17(sol.binomial_vs_recurrence) + "\n";
    out += "# general_vs_binomial = " + fmt_g17(sol.general_vs_binomial) +
           "\n";
    out += "# chebyshev_vs_general = " + fmt_g17(sol.chebyshev_vs_general) +
           "\n";
    out += std::string("# status = ") + (ok ? "ok" : "route_mismatch") + "\n";
  } else {
    out += "{\n  \"max_index\": " + std::to_string(opts.p) + ",\n";
    out += "  \"tau0\": " + fmt_g17(opts.tau0) +
           ",\n  \"tau1\": " + fmt_g17(opts.tau1) + ",\n";
    out += "  \"samples\": [";
    for (std::size_t k = 0; k < opts.samples.size(); ++k) {
      if (k > 0) out += ", ";
      out += fmt_g17(opts.samples[k]);
    }
    out += "],\n";
    out += "  \"values\": " + json_value_table(sol.general_values) + ",\n";
    out += "  \"deviations\": {\"binomial_vs_recurrence\": " +
           fmt_g17(sol.binomial_vs_recurrence) +
           ", \"general_vs_binomial\": " + fmt_g17(sol.general_vs_binomial) +
           ", \"chebyshev_vs_general\": " + fmt_g17(sol.chebyshev_vs_general) +
           "},\n";
    out += "  \"tolerance\": " + fmt_g17(tol) + ",\n";
    out += std::string("  \"status\": \"") + (ok ? "ok" : "route_mismatch") +
           "\"\n}\n";
  }
  std::cout << out;
  return ok ? kExitOk : kExitDisagreement;
}

struct DemoVolterraOpts {
  double alpha = 0.0;
  double beta = 1.0;
  int p = 8;
  std::optional<double> tol;
  bool csv = false;
};

int run_demo_volterra(const DemoVolterraOpts& opts) {
  if (opts.p < 2) throw ProblemFormatError("--p must be >= 2");
  const double tol = resolve_tolerance(opts.tol, std::nullopt);
  const PolyFunction zero;
  const PolyFunction one = PolyFunction::constant(cplx(1.0, 0.0));
  const std::vector<cplx> boundary(static_cast<std::size_t>(opts.p - 1),
                                   cplx(0.0, 0.0));
  const VolterraSolution sol =
      solve_volterra_problem(cplx(opts.alpha, 0.0), cplx(opts.beta, 0.0),
                             zero, one, boundary, opts.p);

  // Appendix identity: iterated integration vs the Cauchy kernel on
  // monomials.
  double appendix_dev = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (int j = 0; j <= 6; ++j) {
      const PolyFunction f = PolyFunction::monomial(j);
      appendix_dev = std::max(
          appendix_dev, max_abs_diff(volterra_power(n, f), cauchy_kernel(n, f)));
    }
  }
  const double worst = std::max({sol.route_deviation, sol.derivative_residual,
                                 sol.boundary_error, appendix_dev});
  const bool ok = worst <= tol;

  std::string out;
  if (opts.csv) {
    std::vector<double> grid;
    for (int k = 0; k <= 10; ++k) grid.push_back(0.1 * k);
    out += "t";
    for (int p = 0; p <= opts.p; ++p) {
      out += ",f" + std::to_string(p) + "_re,f" + std::to_string(p) + "_im";
    }
    out += "\n";
    for (double t : grid) {
      out += fmt_g17(t);
      for (int p = 0; p <= opts.p; ++p) {
        const cplx v =
            sol.iterative[static_cast<std::size_t>(p)].evaluate(cplx(t, 0.0));
        out += "," + fmt_g17(v.real()) + "," + fmt_g17(v.imag());
      }
      out += "\n";
    }
    out += "# route_deviation = " + fmt_g17(sol.route_deviation) + "\n";
    out += "# derivative_residual = " + fmt_g17(sol.derivative_residual) +
           "\n";
    out += "# boundary_error = " + fmt_g17(sol.boundary_error) + "\n";
    out += "# appendix_deviation = " + fmt_g17(appendix_dev) + "\n";
    out += std::string("# status = ") + (ok ? "ok" : "route_mismatch") + "\n";
  } else {
    out += "{\n  \"max_index\": " + std::to_string(opts.p) + ",\n";
    out += "  \"alpha\": " + fmt_g17(opts.alpha) +
           ",\n  \"beta\": " + fmt_g17(opts.beta) + ",\n";
    out += "  \"values\": " + json_poly_list(sol.iterative) + ",\n";
    out += "  \"checks\": {\"route_deviation\": " +
           fmt_g17(sol.route_deviation) +
           ", \"derivative_residual\": " + fmt_g17(sol.derivative_residual) +
           ", \"boundary_error\": " + fmt_g17(sol.boundary_error) +
           ", \"appendix_deviation\": " + fmt_g17(appendix_dev) + "},\n";
    out += "  \"tolerance\": " + fmt_g17(tol) + ",\n";
    out += std::string("  \"status\": \"") + (ok ? "ok" : "route_mismatch") +
           "\"\n}\n";
  }
  std::cout << out;
  return ok ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Solver and checks for the operator recurrence "
      "Y_{p+2} = L0 Y_p + L1 Y_{p+1} + phi_{p+1}"};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve a problem file and compare solution methods");
  solve->add_option("file", solve_opts.path, "JSON problem file")->required();
  solve->add_option("--method", solve_opts.method_flag,
                    "iterative, closed_form, chebyshev or all (overrides the file)");
  solve->add_option("--tol", solve_opts.tol, "agreement tolerance");
  solve->add_flag("--csv", solve_opts.csv, "emit CSV instead of JSON");
  solve->add_option("--max-terms", solve_opts.max_terms,
                    "word-expansion term cap");
  solve->add_option("--max-dim", solve_opts.max_dim, "matrix dimension cap");
  solve->add_option("--max-p", solve_opts.max_p, "sequence length cap");

  WordsOpts words_opts;
  CLI::App* words = app.add_subcommand(
      "words", "Print symmetrized word expansions and term counts");
  words->add_option("-u", words_opts.u, "L0 multiplicity");
  words->add_option("-v", words_opts.v, "L1 multiplicity");
  words->add_option("--beta", words_opts.beta_p, "expand beta_p");
  words->add_option("--alpha", words_opts.alpha_p, "expand alpha_p");
  words->add_option("--max-terms", words_opts.max_terms, "term cap");

  CompanionOpts companion_opts;
  CLI::App* companion = app.add_subcommand(
      "companion", "Check the companion block power against alpha/beta");
  companion->add_option("file", companion_opts.path, "JSON problem file")
      ->required();
  companion->add_option("-p", companion_opts.p, "power to check");
  companion->add_option("--tol", companion_opts.tol, "residual tolerance");
  companion->add_flag("--csv", companion_opts.csv, "emit CSV");
  companion->add_option("--max-p", companion_opts.max_p,
                        "sequence length cap");

  GenfunOpts genfun_opts;
  CLI::App* genfun = app.add_subcommand(
      "genfun-check", "Truncated generating-function residuals");
  genfun->add_option("file", genfun_opts.path, "JSON problem file")
      ->required();
  genfun->add_option("-s", genfun_opts.s, "expansion point");
  genfun->add_option("-K", genfun_opts.k, "truncation order");
  genfun->add_flag("--chebyshev", genfun_opts.chebyshev_variant,
                   "check the L0 = -E Chebyshev variant");
  genfun->add_option("--tol", genfun_opts.tol, "residual tolerance");
  genfun->add_flag("--csv", genfun_opts.csv, "emit the K-sweep as CSV");

  DemoNilpotentOpts nilpotent_opts;
  CLI::App* demo_nilpotent = app.add_subcommand(
      "demo-nilpotent", "Index-2 nilpotent closed forms vs the general path");
  demo_nilpotent->add_option("--p", nilpotent_opts.p, "largest index");
  demo_nilpotent->add_option("--tol", nilpotent_opts.tol, "tolerance");
  demo_nilpotent->add_flag("--csv", nilpotent_opts.csv, "emit CSV");

  DemoShiftOpts shift_opts;
  CLI::App* demo_shift = app.add_subcommand(
      "demo-shift", "Delay recurrence via translation operators");
  demo_shift->add_option("--tau0", shift_opts.tau0, "backward delay");
  demo_shift->add_option("--tau1", shift_opts.tau1, "forward advance");
  demo_shift->add_option("--f0", shift_opts.f0, "base function f0");
  demo_shift->add_option("--f1", shift_opts.f1, "base function f1");
  demo_shift->add_option("--p", shift_opts.p, "largest index");
  demo_shift->add_option("--samples", shift_opts.samples, "sample points");
  demo_shift->add_option("--tol", shift_opts.tol, "tolerance");
  demo_shift->add_flag("--csv", shift_opts.csv, "emit CSV");

  DemoVolterraOpts volterra_opts;
  CLI::App* demo_volterra = app.add_subcommand(
      "demo-volterra", "Volterra integral recurrence on polynomials");
  demo_volterra->add_option("--alpha", volterra_opts.alpha, "alpha scalar");
  demo_volterra->add_option("--beta", volterra_opts.beta, "beta scalar");
  demo_volterra->add_option("--p", volterra_opts.p, "largest index");
  demo_volterra->add_option("--tol", volterra_opts.tol, "tolerance");
  demo_volterra->add_flag("--csv", volterra_opts.csv, "emit CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(solve_opts);
    if (app.got_subcommand(words)) return run_words(words_opts);
    if (app.got_subcommand(companion)) return run_companion(companion_opts);
    if (app.got_subcommand(genfun)) return run_genfun(genfun_opts);
    if (app.got_subcommand(demo_nilpotent)) {
      return run_demo_nilpotent(nilpotent_opts);
    }
    if (app.got_subcommand(demo_shift)) return run_demo_shift(shift_opts);
    if (app.got_subcommand(demo_volterra)) {
      return run_demo_volterra(volterra_opts);
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitBadInput;
  } catch (const ProblemFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
