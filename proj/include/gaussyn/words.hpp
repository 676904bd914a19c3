// Copyright 2026 The gaussyn Authors
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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gaussyn/matrix.hpp"

namespace gaussyn {

enum class GenKind : std::uint8_t { X, K, Phase };

/// One letter of the alphabet: the two-level X[j,l] and K[j,l] (j < l) or
/// the one-level i[j]. For Phase, `l` mirrors `j`.
struct Generator {
  GenKind kind = GenKind::Phase;
  std::size_t j = 0;
  std::size_t l = 0;

  static Generator X(std::size_t j, std::size_t l);
  static Generator K(std::size_t j, std::size_t l);
  static Generator Phase(std::size_t j);

  /// X[j,j+1], K[0,1] or i[0].
  bool is_basic() const;
  std::size_t max_index() const { return l; }
  bool touches(std::size_t row) const { return row == j || row == l; }

  std::string to_string() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::ostream& operator<<(std::ostream& os, const Generator& g);

/// A word g1 g2 ... gm. Its value is the matrix product g1 * g2 * ... * gm,
/// so the rightmost letter acts first on column vectors.
using Word = std::vector<Generator>;

/// Parses whitespace-separated tokens `X[j,k]`, `K[j,k]`, `Kd[j,k]` (= K^7)
/// and `i[j]`, each optionally followed by `^e`. Indices are checked against n.
Word parse_word(std::string_view text, std::size_t n);

/// Folds maximal runs into `^e`; parse_word(print_word(w)) == w.
std::string print_word(const Word& w);

UMat generator_matrix(const Generator& g, std::size_t n);

/// g * m, touching only the rows g acts on.
UMat apply_gen(const Generator& g, const UMat& m);
void apply_gen_inplace(const Generator& g, UMat& m);

UMat eval_word(const Word& w, std::size_t n);
/// eval_word(w) * m.
UMat apply_word(const Word& w, const UMat& m);

/// Reversed word with X -> X, i -> i^3, K -> K^7.
Word invert_word(const Word& w);

/// Rewrites into X[j,j+1], K[0,1], i[0] using conjugation by X.
Word expand_basic(const Word& w);

/// Returns w repeated `times` times.
Word power(const Word& w, std::size_t times);
Word concat(const Word& a, const Word& b);

void check_indices(const Word& w, std::size_t n);

/// `length` letters drawn uniformly by kind (X, K, i) and then by indices.
Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t length);
Word random_word(std::size_t n, std::size_t length, std::uint64_t seed);

}  // namespace gaussyn
