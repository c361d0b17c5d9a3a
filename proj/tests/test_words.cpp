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

#include <cstdint>
#include <string>

#include "doctest.h"
#include "opseq/errors.hpp"
#include "opseq/scalar.hpp"
#include "opseq/words.hpp"
#include "support.hpp"

namespace opseq {
namespace {

// Builds a word from a digit string, e.g. "011" -> L0.L1.L1.
Word word_of(const std::string& digits) {
  Word w;
  for (char c : digits) w.append(c == '0' ? Letter::L0 : Letter::L1);
  return w;
}

WordSum sum_of(std::initializer_list<std::string> words) {
  WordSum s;
  for (const auto& d : words) s.add_term(word_of(d), 1);
  return s;
}

TEST_CASE("word basics and ordering") {
  Word e;
  CHECK(e.is_identity());
  CHECK(e.length() == 0);
  CHECK(e.str() == "E");

  Word w = word_of("011");
  CHECK(w.length() == 3);
  CHECK(w.letter(0) == Letter::L0);
  CHECK(w.letter(1) == Letter::L1);
  CHECK(w.count(Letter::L0) == 1);
  CHECK(w.count(Letter::L1) == 2);
  CHECK(w.str() == "L0.L1.L1");

  // Lexicographic with L0 < L1, prefixes first.
  CHECK(e < word_of("0"));
  CHECK(word_of("0") < word_of("1"));
  CHECK(word_of("01") < word_of("10"));
  CHECK(word_of("1") < word_of("10"));
  CHECK(word_of("10") == word_of("10"));

  Word c = word_of("01").concat(word_of("1"));
  CHECK(c == word_of("011"));
}

TEST_CASE("word sum arithmetic and printing") {
  WordSum zero;
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");

  WordSum s = sum_of({"01", "10"});
  CHECK(s.term_count() == 2);
  CHECK(s.str() == "L0.L1 + L1.L0");
  CHECK((s * 2).str() == "2 L0.L1 + 2 L1.L0");

  // Cancellation removes the entry entirely.
  WordSum t = s;
  t.add_term(word_of("01"), -1);
  t.add_term(word_of("10"), -1);
  CHECK(t.is_zero());

  WordSum u = WordSum::identity();
  CHECK(u.str() == "E");
  CHECK((u + s).term_count() == 3);
}

TEST_CASE("symmetrized word counts match binomial coefficients") {
  for (int u = 0; u + 0 <= 14; ++u) {
    for (int v = 0; u + v <= 14; ++v) {
      const WordSum s = symmetrized_words(u, v);
      const auto expected = binomial_capped(u + v, std::min(u, v), kDefaultWordCap);
      REQUIRE(expected.has_value());
      CHECK(static_cast<std::int64_t>(s.term_count()) == *expected);
      for (const auto& [w, coeff] : s.terms()) {
        CHECK(coeff == 1);
        CHECK(w.count(Letter::L0) == u);
        CHECK(w.count(Letter::L1) == v);
      }
    }
  }
}

TEST_CASE("symmetrized word examples") {
  CHECK(symmetrized_words(0, 0) == WordSum::identity());
  CHECK(symmetrized_words(1, 1).str() == "L0.L1 + L1.L0");
  CHECK(symmetrized_words(2, 1) == sum_of({"001", "010", "100"}));
  CHECK(symmetrized_words(2, 3).term_count() == 10);
}

TEST_CASE("beta and alpha expansions") {
  CHECK(beta_expansion(0).is_zero());
  CHECK(beta_expansion(1) == WordSum::identity());
  CHECK(beta_expansion(2) == sum_of({"1"}));
  CHECK(beta_expansion(3) == sum_of({"0", "11"}));
  CHECK(beta_expansion(4) == sum_of({"01", "10", "111"}));

  CHECK(alpha_expansion(0) == WordSum::identity());
  CHECK(alpha_expansion(1).is_zero());
  CHECK(alpha_expansion(2) == sum_of({"0"}));
  CHECK(alpha_expansion(3) == sum_of({"10"}));
  CHECK(alpha_expansion(4) == sum_of({"00", "110"}));
}

TEST_CASE("beta expansion satisfies the operator recurrence symbolically") {
  for (int p = 0; p + 2 <= 14; ++p) {
    const WordSum lhs = beta_expansion(p + 2);
    const WordSum rhs =
        beta_expansion(p).left_concat(Letter::L0) +
        beta_expansion(p + 1).left_concat(Letter::L1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("alpha expansion equals the shifted beta expansion symbolically") {
  for (int p = 2; p <= 14; ++p) {
    CHECK(alpha_expansion(p) == beta_expansion(p - 1).right_concat(Letter::L0));
  }
}

TEST_CASE("resource caps") {
  // C(24, 12) = 2704156 exceeds the default cap.
  CHECK_THROWS_AS(symmetrized_words(12, 12), ResourceLimitError);
  // Explicit tiny cap.
  CHECK_THROWS_AS(symmetrized_words(3, 3, 10), ResourceLimitError);
  CHECK(symmetrized_words(3, 3, 20).term_count() == 20);
  // Words longer than the fixed capacity are rejected up front.
  CHECK_THROWS_AS(symmetrized_words(129, 0), ResourceLimitError);
}

TEST_CASE("word sums evaluate against matrices") {
  auto gen = test::rng(41);
  const MatrixOperator g0 = test::random_matrix(gen, 3);
  const MatrixOperator g1 = test::random_matrix(gen, 3);
  const CVector x = test::random_vector(gen, 3);

  // Letters act right to left: L0.L1 applied to x is g0*(g1*x).
  const WordSum s = WordSum::single(word_of("01"));
  const CVector direct = g0 * (g1 * x);
  CHECK(max_abs_diff(evaluate_word_sum(s, g0, g1, x), direct) == 0.0);

  const MatrixOperator prod = evaluate_word_sum_op(s, g0, g1);
  CHECK(max_abs_diff(prod, g0 * g1) == 0.0);

  CHECK(max_abs(evaluate_word_sum(WordSum(), g0, g1, x)) == 0.0);
  const MatrixOperator ident = evaluate_word_sum_op(WordSum::identity(), g0, g1);
  CHECK(max_abs_diff(ident, identity_like(g0)) == 0.0);
}

}  // namespace
}  // namespace opseq
