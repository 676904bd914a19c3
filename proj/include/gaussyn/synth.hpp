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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "gaussyn/matrix.hpp"
#include "gaussyn/words.hpp"

namespace gaussyn {

enum class SyllableKind { PhaseFix, MovePhaseFix, RowOp };

/// One reduction step of exact synthesis.
///
///   PhaseFix(j, e)         i[j]^e                 (pivot lde 0, entry already at p)
///   MovePhaseFix(j, p, e)  X[j,p] i[j]^e          (pivot lde 0, entry moved to p)
///   RowOp(j, l, q)         K[j,l]^7 i[l]^q        (pivot lde > 0)
///
/// The K^7 in RowOp is the adjoint K^dagger; it is only spelled as K^7 when
/// the syllable is rendered as a word.
struct Syllable {
  SyllableKind kind = SyllableKind::PhaseFix;
  std::size_t j = 0;
  std::size_t target = 0;  // p for MovePhaseFix, l for RowOp, j for PhaseFix
  int exponent = 0;        // e in {0..3}, or q in {0,1}

  static Syllable PhaseFix(std::size_t j, int e);
  static Syllable MovePhaseFix(std::size_t j, std::size_t p, int e);
  static Syllable RowOp(std::size_t j, std::size_t l, int q);

  Word to_word() const;
  std::string to_string() const;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

std::ostream& operator<<(std::ostream& os, const Syllable& s);

/// The syllable the synthesis algorithm emits for m. Throws NotUnitary or
/// IdentityMatrix.
Syllable syllable_at(const UMat& m);
/// As syllable_at, assuming m is unitary.
Syllable syllable_unchecked(const UMat& m);

UMat apply_syllable(const Syllable& s, const UMat& m);

struct NormalStep {
  UMat state;
  Level level;
  Syllable syllable;
};

/// The chain of normal edges from a state down to the identity.
struct NormalPath {
  std::vector<NormalStep> steps;

  /// N_m ... N_1: the latest syllable leftmost.
  Word word() const;
};

NormalPath normal_path(const UMat& u);

/// A word w with eval(w) * u = I.
Word normal_word(const UMat& u);

/// normal_word(eval(w)^-1); depends only on eval(w), and evaluates to it.
Word normal_form(const Word& w, std::size_t n);

bool equivalent(const Word& w, const Word& v, std::size_t n);

/// Word G with G v = e_p, built by the same step rule as the algorithm but
/// applied to a single unit column.
Word reduce_column(const Column& v, std::size_t p);

/// A unitary whose column p is v and whose columns after p are untouched.
/// v must be a unit vector supported on indices <= p.
UMat state_with_pivot_column(const Column& v, std::size_t p);

}  // namespace gaussyn
