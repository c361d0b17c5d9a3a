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

#ifndef OPSEQ_WORDS_HPP
#define OPSEQ_WORDS_HPP

// Free-monoid words over the two generators L0, L1 and integer-weighted
// sums of them. This layer is the brute-force oracle: the symmetrized sum
// {L0^(u) L1^(v)} of all distinct orderings of u copies of L0 and v copies
// of L1, and the expansions
//
//   beta_p  = sum_{t=0}^{floor((p-1)/2)} {L0^(t) L1^(p-1-2t)}      (p >= 2)
//   alpha_p = sum_{t=0}^{floor((p-2)/2)} {L0^(t) L1^(p-2-2t)} . L0 (p >= 2)
//
// with boundary values alpha_0 = E, alpha_1 = 0, beta_0 = 0, beta_1 = E.
// Enumeration is exponential; the production solver materializes the same
// operators by recurrence and is checked against this layer.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "opseq/errors.hpp"
#include "opseq/scalar.hpp"

namespace opseq {

enum class Letter : std::uint8_t { L0 = 0, L1 = 1 };

// A word over {L0, L1}, packed one bit per letter with explicit length.
// The empty word denotes the identity operator E. Capacity is 128 letters;
// enumeration hits the term cap long before realistic inputs get there.
class Word {
 public:
  static constexpr int kMaxLetters = 128;

  Word() = default;

  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  Letter letter(int k) const {
    return static_cast<Letter>((bits_[k >> 6] >> (k & 63)) & 1u);
  }

  // Number of occurrences of the given generator.
  int count(Letter g) const;

  Word& append(Letter g);
  Word& prepend(Letter g);

  // Concatenation: (*this) followed by rhs. Composition applies the
  // rightmost letter first.
  Word concat(const Word& rhs) const;

  // Lexicographic, L0 < L1, prefixes before their extensions. This is the
  // canonical term order of the whole module.
  bool operator<(const Word& rhs) const;
  bool operator==(const Word& rhs) const;

  // "E" for the empty word, else letters joined by dots: "L0.L1.L1".
  std::string str() const;

 private:
  void check_capacity(int extra) const;

  std::array<std::uint64_t, 2> bits_{};
  int len_ = 0;
};

// Integer combination of words, kept canonical: no zero coefficients,
// terms ordered by the word order above. The empty sum is the null
// operator; it is distinct from {E: 1}.
class WordSum {
 public:
  using Terms = std::map<Word, std::int64_t>;

  WordSum() = default;
  static WordSum identity() { return single(Word{}); }
  static WordSum single(const Word& w, std::int64_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Word& w, std::int64_t coeff);
  WordSum& operator+=(const WordSum& rhs);
  WordSum operator+(const WordSum& rhs) const;
  WordSum operator*(std::int64_t scale) const;

  // Concatenate a generator onto every term.
  WordSum left_concat(Letter g) const;
  WordSum right_concat(Letter g) const;

  bool operator==(const WordSum& rhs) const { return terms_ == rhs.terms_; }

  // "0" for the empty sum, else terms joined with signs, coefficient
  // magnitudes printed only when not 1: "L0.L1 + 2 L1.L0".
  std::string str() const;

 private:
  Terms terms_;
};

inline constexpr std::int64_t kDefaultWordCap = 1'000'000;

// {L0^(u) L1^(v)}: every distinct arrangement of the multiset with
// coefficient 1; binomial(u+v, min(u,v)) terms. {L0^(0) L1^(0)} = {E: 1}.
// Throws ResourceLimitError when the term count would exceed cap.
WordSum symmetrized_words(int u, int v, std::int64_t cap = kDefaultWordCap);

WordSum beta_expansion(int p, std::int64_t cap = kDefaultWordCap);
WordSum alpha_expansion(int p, std::int64_t cap = kDefaultWordCap);

// Applies a word sum to a backend value, rightmost letter first; the zero
// sum yields the zero vector. Linear in x and additive in ws.
template <class Op, class Vec>
Vec evaluate_word_sum(const WordSum& ws, const Op& g0, const Op& g1,
                      const Vec& x) {
  Vec acc = zero_like(x);
  for (const auto& [word, coeff] : ws.terms()) {
    Vec y = x;
    for (int k = word.length() - 1; k >= 0; --k) {
      y = (word.letter(k) == Letter::L0) ? g0 * y : g1 * y;
    }
    acc = acc + cplx(static_cast<double>(coeff), 0.0) * y;
  }
  return acc;
}

// Same contraction at the operator level: words become products of the
// generators, the empty word the identity operator.
template <class Op>
Op evaluate_word_sum_op(const WordSum& ws, const Op& g0, const Op& g1) {
  Op acc = zero_like(g0);
  for (const auto& [word, coeff] : ws.terms()) {
    Op prod = identity_like(g0);
    for (int k = 0; k < word.length(); ++k) {
      prod = prod * ((word.letter(k) == Letter::L0) ? g0 : g1);
    }
    acc = acc + static_cast<double>(coeff) * prod;
  }
  return acc;
}

}  // namespace opseq

#endif  // OPSEQ_WORDS_HPP
