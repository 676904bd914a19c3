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

#include "gaussyn/synth.hpp"

#include <cassert>
#include <ostream>

#include "gaussyn/error.hpp"

namespace gaussyn {

namespace {

int mod4(int e) { return ((e % 4) + 4) % 4; }

/// Step rule shared by matrices and bare columns: v is the column that must
/// be sent to e_p.
Syllable step_for_column(const Column& v, std::size_t p) {
  const unsigned k = lde_vec(v);
  if (k == 0) {
    std::size_t j = 0;
    while (j < v.size() && !v[j].num().is_odd()) ++j;
    if (j == v.size()) throw Error(ErrorCode::NotUnitary, "column has no unit entry");
    const int e = phase_exponent(v[j].num());
    if (j == p) {
      // e == 0 would mean v == e_p, which is not a pivot column.
      assert(e != 0);
      return Syllable::PhaseFix(j, e);
    }
    return Syllable::MovePhaseFix(j, p, e);
  }
  const auto odd = odd_indices(v, k);
  if (odd.size() < 2) throw Error(ErrorCode::NotUnitary, "pivot column has a single odd entry");
  const std::size_t j = odd[0], l = odd[1];
  return Syllable::RowOp(j, l, row_exponent(v[j].scaled(k), v[l].scaled(k)));
}

void apply_to_column(const Generator& g, Column& v) {
  switch (g.kind) {
    case GenKind::X:
      std::swap(v[g.j], v[g.l]);
      break;
    case GenKind::Phase:
      v[g.j] = v[g.j].times_i_pow(1);
      break;
    case GenKind::K: {
      DyadicGauss top = (v[g.j] + v[g.l]).div_gamma();
      DyadicGauss bottom = (v[g.j] - v[g.l]).div_gamma();
      v[g.j] = std::move(top);
      v[g.l] = std::move(bottom);
      break;
    }
  }
}

bool is_basis_vector(const Column& v, std::size_t p) {
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r] != (r == p ? DyadicGauss(1) : DyadicGauss())) return false;
  }
  return true;
}

}  // namespace

Syllable Syllable::PhaseFix(std::size_t j, int e) { return {SyllableKind::PhaseFix, j, j, mod4(e)}; }
Syllable Syllable::MovePhaseFix(std::size_t j, std::size_t p, int e) {
  return {SyllableKind::MovePhaseFix, j, p, mod4(e)};
}
Syllable Syllable::RowOp(std::size_t j, std::size_t l, int q) { return {SyllableKind::RowOp, j, l, q & 1}; }

Word Syllable::to_word() const {
  Word w;
  switch (kind) {
    case SyllableKind::PhaseFix:
      w.insert(w.end(), exponent, Generator::Phase(j));
      break;
    case SyllableKind::MovePhaseFix:
      w.push_back(j < target ? Generator::X(j, target) : Generator::X(target, j));
      w.insert(w.end(), exponent, Generator::Phase(j));
      break;
    case SyllableKind::RowOp:
      w.insert(w.end(), 7, Generator::K(j, target));
      w.insert(w.end(), exponent, Generator::Phase(target));
      break;
  }
  return w;
}

std::string Syllable::to_string() const {
  const auto num = [](auto x) { return std::to_string(x); };
  switch (kind) {
    case SyllableKind::PhaseFix:
      return "PhaseFix(" + num(j) + "," + num(exponent) + ")";
    case SyllableKind::MovePhaseFix:
      return "MovePhaseFix(" + num(j) + "," + num(target) + "," + num(exponent) + ")";
    case SyllableKind::RowOp:
      return "RowOp(" + num(j) + "," + num(target) + "," + num(exponent) + ")";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Syllable& s) { return os << s.to_string(); }

Syllable syllable_unchecked(const UMat& m) {
  const auto p = pivot_column(m);
  if (!p) throw Error(ErrorCode::IdentityMatrix, "the identity has no syllable");
  return step_for_column(m.column(*p), *p);
}

Syllable syllable_at(const UMat& m) {
  if (!is_unitary(m)) throw Error(ErrorCode::NotUnitary, "syllable of a non-unitary matrix");
  return syllable_unchecked(m);
}

UMat apply_syllable(const Syllable& s, const UMat& m) { return apply_word(s.to_word(), m); }

Word NormalPath::word() const {
  Word w;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const Word part = it->syllable.to_word();
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

NormalPath normal_path(const UMat& u) {
  if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "normal path of a non-unitary matrix");
  NormalPath path;
  UMat state = u;
  while (!state.is_identity()) {
    Syllable s = syllable_unchecked(state);
    Level level = level_unchecked(state);
    UMat next = apply_syllable(s, state);
    path.steps.push_back({std::move(state), level, s});
    state = std::move(next);
  }
  return path;
}

Word normal_word(const UMat& u) {
  if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "normal word of a non-unitary matrix");
  std::vector<Syllable> syllables;
  UMat state = u;
  while (!state.is_identity()) {
    syllables.push_back(syllable_unchecked(state));
    state = apply_syllable(syllables.back(), state);
  }
  Word w;
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
    const Word part = it->to_word();
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

Word normal_form(const Word& w, std::size_t n) {
  // eval(w) is unitary by construction, so its inverse is its adjoint.
  return normal_word(mat_dagger(eval_word(w, n)));
}

bool equivalent(const Word& w, const Word& v, std::size_t n) { return eval_word(w, n) == eval_word(v, n); }

Word reduce_column(const Column& v, std::size_t p) {
  if (p >= v.size()) throw Error(ErrorCode::IndexOutOfRange, "target index " + std::to_string(p));
  DyadicGauss norm;
  for (const auto& x : v) norm += x.conj() * x;
  if (norm != DyadicGauss(1)) throw Error(ErrorCode::NotUnitary, "column is not a unit vector");

  std::vector<Syllable> syllables;
  Column cur = v;
  while (!is_basis_vector(cur, p)) {
    syllables.push_back(step_for_column(cur, p));
    const Word part = syllables.back().to_word();
    for (auto it = part.rbegin(); it != part.rend(); ++it) apply_to_column(*it, cur);
  }
  Word w;
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
    const Word part = it->to_word();
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

UMat state_with_pivot_column(const Column& v, std::size_t p) {
  for (std::size_t r = p + 1; r < v.size(); ++r) {
    if (!v[r].is_zero()) throw Error(ErrorCode::IndexOutOfRange, "column has support beyond " + std::to_string(p));
  }
  return eval_word(invert_word(reduce_column(v, p)), v.size());
}

}  // namespace gaussyn
