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

#include <random>

#include "doctest.h"
#include "gaussyn/error.hpp"
#include "gaussyn/synth.hpp"
#include "oracle.hpp"

using namespace gaussyn;

namespace {

UMat ev(const char* text, std::size_t n) { return eval_word(parse_word(text, n), n); }

}  // namespace

TEST_CASE("syllable choice") {
  CHECK(syllable_at(ev("i[0]", 2)) == Syllable::PhaseFix(0, 3));
  CHECK(syllable_at(ev("K[0,1]", 2)) == Syllable::RowOp(0, 1, 0));
  CHECK(syllable_at(ev("X[0,1]", 2)) == Syllable::MovePhaseFix(0, 1, 0));
  CHECK(syllable_at(ev("X[0,1]", 2)).to_string() == "MovePhaseFix(0,1,0)");
  CHECK(oracle::error_of([] { syllable_at(UMat::identity(2)); }) == ErrorCode::IdentityMatrix);
  CHECK(oracle::error_of([] {
          syllable_at(UMat(2, {DyadicGauss(1), DyadicGauss(1), DyadicGauss(), DyadicGauss(1)}));
        }) == ErrorCode::NotUnitary);
}

TEST_CASE("syllable rendering") {
  CHECK(print_word(Syllable::RowOp(0, 2, 1).to_word()) == "K[0,2]^7 i[2]");
  CHECK(print_word(Syllable::MovePhaseFix(1, 3, 0).to_word()) == "X[1,3]");
  CHECK(print_word(Syllable::MovePhaseFix(1, 3, 2).to_word()) == "X[1,3] i[1]^2");
  CHECK(print_word(Syllable::PhaseFix(2, -1).to_word()) == "i[2]^3");
}

TEST_CASE("normal words") {
  CHECK(normal_word(UMat::identity(3)).empty());
  CHECK(print_word(normal_word(ev("K[0,1]", 2))) == "K[0,1]^7");
  CHECK(print_word(normal_word(ev("i[1]", 2))) == "i[1]^3");
}

TEST_CASE("normal forms") {
  CHECK(normal_form(parse_word("X[0,1] X[0,1]", 2), 2).empty());
  CHECK(print_word(normal_form(parse_word("i[0]", 2), 2)) == "i[0]");
  CHECK(normal_form(parse_word("K[0,1]^8", 2), 2).empty());
  CHECK(oracle::error_of([] { normal_form({Generator::Phase(4)}, 2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("equivalence") {
  CHECK(equivalent(parse_word("X[0,1]^2", 2), {}, 2));
  CHECK_FALSE(equivalent(parse_word("K[0,1]", 2), parse_word("Kd[0,1]", 2), 2));
  CHECK(equivalent(parse_word("i[0] i[1]", 2), parse_word("i[1] i[0]", 2), 2));
}

TEST_CASE("normal paths") {
  CHECK(normal_path(UMat::identity(2)).steps.empty());
  const NormalPath k = normal_path(ev("K[0,1]", 2));
  REQUIRE(k.steps.size() == 1);
  CHECK(k.steps[0].level == Level{1, 1, 2});
  CHECK(level_of(apply_syllable(k.steps[0].syllable, k.steps[0].state)) == Level{0, 0, 0});

  std::mt19937_64 rng(20);
  const UMat u = eval_word(oracle::random_word(rng, 4, 20), 4);
  const NormalPath path = normal_path(u);
  for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
    CHECK(path.steps[i + 1].level < path.steps[i].level);
    CHECK(path.steps[i + 1].state == apply_syllable(path.steps[i].syllable, path.steps[i].state));
  }
  CHECK(path.word() == normal_word(u));
}

TEST_CASE("round trip, determinism and idempotence") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 4;
    const Word w = oracle::random_word(rng, n, i % 40);
    const UMat u = eval_word(w, n);
    CHECK(mat_mul(eval_word(normal_word(u), n), u) == UMat::identity(n));
    const Word nf = normal_form(w, n);
    CHECK(eval_word(nf, n) == u);
    CHECK(normal_form(nf, n) == nf);
    // same matrix through a different word
    CHECK(normal_form(concat(w, parse_word("X[0,1]^2 K[0,1]^8", n)), n) == nf);
  }
}

TEST_CASE("syllables strictly lower the level") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 4;
    UMat s = eval_word(oracle::random_word(rng, n, 20), n);
    if (s.is_identity()) continue;
    const Syllable syl = syllable_at(s);
    const Level before = level_of(s);
    const UMat r = apply_syllable(syl, s);
    CHECK(level_of(r) < before);
    CHECK((syl.kind == SyllableKind::RowOp) == (before.k > 0));
    if (syl.kind == SyllableKind::RowOp) {
      const Column v = s.column(before.p);
      const Column w = r.column(before.p);
      for (std::size_t row = 0; row < n; ++row) {
        if (row == syl.j || row == syl.target) {
          CHECK(lde(w[row]) < lde(v[row]));
        } else {
          CHECK(w[row] == v[row]);
        }
      }
    }
  }
}

TEST_CASE("reducing a single column") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 4;
    const UMat u = eval_word(oracle::random_word(rng, n, 20), n);
    const std::size_t p = i % n;
    const Column v = u.column(p);
    const Word g = reduce_column(v, p);
    const UMat moved = apply_word(g, u);
    CHECK(moved.column(p) == UMat::identity(n).column(p));
  }

  Column padded{DyadicGauss(GaussInt(1), 1), DyadicGauss(GaussInt(0, 1), 1), DyadicGauss(), DyadicGauss()};
  const UMat s = state_with_pivot_column(padded, 1);
  CHECK(s.column(1) == padded);
  CHECK(pivot_column(s) == 1u);
  CHECK(oracle::error_of([] { reduce_column({DyadicGauss(1), DyadicGauss(1)}, 0); }) == ErrorCode::NotUnitary);
}
