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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "gaussyn/error.hpp"
#include "gaussyn/synth.hpp"
#include "gaussyn/words.hpp"
#include "oracle.hpp"

using namespace gaussyn;

TEST_CASE("parsing") {
  const Word w = parse_word("X[0,1] K[0,1]^2 i[2]", 3);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == Generator::X(0, 1));
  CHECK(w[1] == Generator::K(0, 1));
  CHECK(w[2] == Generator::K(0, 1));
  CHECK(w[3] == Generator::Phase(2));

  CHECK(parse_word("Kd[0,1]", 2) == Word(7, Generator::K(0, 1)));
  CHECK(parse_word("", 2).empty());
  CHECK(parse_word("  \n ", 2).empty());
  CHECK(parse_word("i[0]^0", 2).empty());

  CHECK(oracle::error_of([] { parse_word("K[1,0]", 2); }) == ErrorCode::IndicesNotOrdered);
  CHECK(oracle::error_of([] { parse_word("i[5]", 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(oracle::error_of([] { parse_word("Y[0,1]", 3); }) == ErrorCode::SyntaxError);
  CHECK(oracle::error_of([] { parse_word("X[0,1", 3); }) == ErrorCode::SyntaxError);
  CHECK(oracle::error_of([] { parse_word("X[0,1]^", 3); }) == ErrorCode::SyntaxError);
  CHECK(oracle::error_of([] { parse_word("i[-1]", 3); }) == ErrorCode::SyntaxError);
  CHECK(oracle::error_of([] { parse_word("i[0]x", 3); }) == ErrorCode::SyntaxError);
  CHECK(oracle::error_of([] { Generator::X(2, 2); }) == ErrorCode::IndicesNotOrdered);
}

TEST_CASE("printing") {
  CHECK(print_word({}) == "");
  CHECK(print_word(Word(7, Generator::K(0, 1))) == "K[0,1]^7");
  CHECK(print_word({Generator::X(0, 1), Generator::X(0, 1), Generator::Phase(0)}) == "X[0,1]^2 i[0]");

  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Word w = oracle::random_word(rng, 5, i % 30);
    CHECK(parse_word(print_word(w), 5) == w);
  }
}

TEST_CASE("evaluation") {
  CHECK(eval_word({}, 3) == UMat::identity(3));
  CHECK(eval_word(parse_word("K[0,1]", 2), 2) == generator_matrix(Generator::K(0, 1), 2));
  CHECK(eval_word(parse_word("X[0,1] X[0,1]", 2), 2) == UMat::identity(2));
  CHECK(oracle::error_of([] { eval_word({Generator::Phase(3)}, 2); }) == ErrorCode::IndexOutOfRange);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 4;
    const Word u = oracle::random_word(rng, n, 12);
    const Word v = oracle::random_word(rng, n, 12);
    CHECK(eval_word(concat(u, v), n) == mat_mul(eval_word(u, n), eval_word(v, n)));
  }
}

TEST_CASE("inversion") {
  CHECK(print_word(invert_word(parse_word("X[0,1]", 2))) == "X[0,1]");
  CHECK(print_word(invert_word(parse_word("i[0]", 2))) == "i[0]^3");
  CHECK(print_word(invert_word(parse_word("X[0,1] K[0,1]", 2))) == "K[0,1]^7 X[0,1]");

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 4;
    const Word w = oracle::random_word(rng, n, 15);
    const UMat m = eval_word(w, n);
    CHECK(mat_mul(eval_word(invert_word(w), n), m) == UMat::identity(n));
    CHECK(mat_mul(m, eval_word(invert_word(w), n)) == UMat::identity(n));
  }
}

TEST_CASE("apply_gen agrees with multiplication") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + i % 5;
    const UMat m = eval_word(oracle::random_word(rng, n, 8), n);
    const Generator g = oracle::random_word(rng, n, 1).front();
    CHECK(apply_gen(g, m) == mat_mul(generator_matrix(g, n), m));
  }
  const UMat d = apply_gen(Generator::Phase(0), UMat::identity(3));
  CHECK(d == one_level(3, 0, DyadicGauss(GaussInt(0, 1))));
  const UMat kd = eval_word(parse_word("Kd[0,1]", 2), 2);
  CHECK(apply_gen(Generator::K(0, 1), kd) == UMat::identity(2));
  CHECK(kd == mat_dagger(generator_matrix(Generator::K(0, 1), 2)));
}

TEST_CASE("basic expansion") {
  CHECK(print_word(expand_basic(parse_word("i[2]", 3))) == "X[0,1] X[1,2] X[0,1] i[0] X[0,1] X[1,2] X[0,1]");
  CHECK(print_word(expand_basic(parse_word("X[0,1]", 2))) == "X[0,1]");
  CHECK(print_word(expand_basic(parse_word("i[1]", 2))) == "X[0,1] i[0] X[0,1]");

  // K[2,4] needs 17 basic letters.
  const Word k24 = expand_basic(parse_word("K[2,4]", 5));
  CHECK(k24.size() == 17);
  CHECK(print_word(k24) ==
        "X[0,1] X[1,2] X[0,1] X[1,2] X[2,3] X[3,4] X[2,3] X[1,2] K[0,1] "
        "X[1,2] X[2,3] X[3,4] X[2,3] X[1,2] X[0,1] X[1,2] X[0,1]");

  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 5;
    const Word w = oracle::random_word(rng, n, 10);
    const Word b = expand_basic(w);
    CHECK(std::all_of(b.begin(), b.end(), [](const Generator& g) { return g.is_basic(); }));
    CHECK(eval_word(b, n) == eval_word(w, n));
  }
}

TEST_CASE("basic expansion does not raise the level") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 4;
    const UMat s = eval_word(oracle::random_word(rng, n, 12), n);
    const Generator g = oracle::random_word(rng, n, 1).front();
    const UMat r = apply_gen(g, s);
    const Level bound = std::max(level_of(s), level_of(r));
    const Word b = expand_basic({g});
    UMat state = s;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
      apply_gen_inplace(*it, state);
      CHECK(level_of(state) <= bound);
    }
    CHECK(state == r);
  }
}
