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

#include "opseq/words.hpp"

#include <algorithm>
#include <vector>

namespace opseq {

int Word::count(Letter g) const {
  int c = 0;
  for (int k = 0; k < len_; ++k) {
    if (letter(k) == g) ++c;
  }
  return c;
}

void Word::check_capacity(int extra) const {
  if (len_ + extra > kMaxLetters) {
    throw ResourceLimitError("word length would exceed capacity of " +
                             std::to_string(kMaxLetters) + " letters");
  }
}

Word& Word::append(Letter g) {
  check_capacity(1);
  if (g == Letter::L1) bits_[len_ >> 6] |= std::uint64_t{1} << (len_ & 63);
  ++len_;
  return *this;
}

Word& Word::prepend(Letter g) {
  check_capacity(1);
  Word shifted;
  shifted.append(g);
  for (int k = 0; k < len_; ++k) shifted.append(letter(k));
  *this = shifted;
  return *this;
}

Word Word::concat(const Word& rhs) const {
  check_capacity(rhs.len_);
  Word out = *this;
  for (int k = 0; k < rhs.len_; ++k) out.append(rhs.letter(k));
  return out;
}

bool Word::operator<(const Word& rhs) const {
  const int common = std::min(len_, rhs.len_);
  for (int k = 0; k < common; ++k) {
    const auto a = letter(k);
    const auto b = rhs.letter(k);
    if (a != b) return a < b;
  }
  return len_ < rhs.len_;
}

bool Word::operator==(const Word& rhs) const {
  return len_ == rhs.len_ && bits_ == rhs.bits_;
}

std::string Word::str() const {
  if (len_ == 0) return "E";
  std::string out;
  for (int k = 0; k < len_; ++k) {
    if (k > 0) out += '.';
    out += (letter(k) == Letter::L0) ? "L0" : "L1";
  }
  return out;
}

WordSum WordSum::single(const Word& w, std::int64_t coeff) {
  WordSum s;
  s.add_term(w, coeff);
  return s;
}

void WordSum::add_term(const Word& w, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

WordSum& WordSum::operator+=(const WordSum& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

WordSum WordSum::operator+(const WordSum& rhs) const {
  WordSum out = *this;
  out += rhs;
  return out;
}

WordSum WordSum::operator*(std::int64_t scale) const {
  WordSum out;
  if (scale == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * scale);
  return out;
}

WordSum WordSum::left_concat(Letter g) const {
  WordSum out;
  for (const auto& [w, c] : terms_) {
    Word moved = w;
    moved.prepend(g);
    out.terms_.emplace(moved, c);
  }
  return out;
}

WordSum WordSum::right_concat(Letter g) const {
  WordSum out;
  for (const auto& [w, c] : terms_) {
    Word moved = w;
    moved.append(g);
    out.terms_.emplace(moved, c);
  }
  return out;
}

std::string WordSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const std::int64_t mag = (c < 0) ? -c : c;
    if (mag != 1) out += std::to_string(mag) + " ";
    out += w.str();
  }
  return out;
}

WordSum symmetrized_words(int u, int v, std::int64_t cap) {
  if (u < 0 || v < 0) {
    throw Error("symmetrized_words requires nonnegative multiplicities");
  }
  const auto count = binomial_capped(u + v, std::min(u, v), cap);
  if (!count) {
    throw ResourceLimitError(
        "symmetrized word count binomial(" + std::to_string(u + v) + ", " +
        std::to_string(std::min(u, v)) + ") exceeds cap of " +
        std::to_string(cap));
  }
  if (u + v > Word::kMaxLetters) {
    throw ResourceLimitError("word length " + std::to_string(u + v) +
                             " exceeds capacity of " +
                             std::to_string(Word::kMaxLetters) + " letters");
  }

  // next_permutation over the sorted multiset enumerates each distinct
  // arrangement exactly once, in the canonical order.
  std::vector<std::uint8_t> letters(static_cast<std::size_t>(u + v), 0);
  std::fill(letters.begin() + u, letters.end(), std::uint8_t{1});
  WordSum out;
  do {
    Word w;
    for (const auto l : letters) w.append(static_cast<Letter>(l));
    out.add_term(w, 1);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

WordSum beta_expansion(int p, std::int64_t cap) {
  if (p < 0) throw Error("beta_expansion requires p >= 0");
  if (p == 0) return WordSum{};
  if (p == 1) return WordSum::identity();
  WordSum out;
  for (int t = 0; 2 * t <= p - 1; ++t) {
    out += symmetrized_words(t, p - 1 - 2 * t, cap);
    if (static_cast<std::int64_t>(out.term_count()) > cap) {
      throw ResourceLimitError("beta expansion exceeds term cap of " +
                               std::to_string(cap));
    }
  }
  return out;
}

WordSum alpha_expansion(int p, std::int64_t cap) {
  if (p < 0) throw Error("alpha_expansion requires p >= 0");
  if (p == 0) return WordSum::identity();
  if (p == 1) return WordSum{};
  WordSum out;
  for (int t = 0; 2 * t <= p - 2; ++t) {
    out += symmetrized_words(t, p - 2 - 2 * t, cap).right_concat(Letter::L0);
    if (static_cast<std::int64_t>(out.term_count()) > cap) {
      throw ResourceLimitError("alpha expansion exceeds term cap of " +
                               std::to_string(cap));
    }
  }
  return out;
}

}  // namespace opseq
