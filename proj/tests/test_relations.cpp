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
#include "gaussyn/relations.hpp"
#include "gaussyn/synth.hpp"
#include "oracle.hpp"

using namespace gaussyn;

namespace {

std::size_t count_schema(const std::vector<RelationInstance>& all, const std::string& id) {
  return static_cast<std::size_t>(
      std::count_if(all.begin(), all.end(), [&](const RelationInstance& r) { return r.schema_id == id; }));
}

RelationInstance instance_of(std::size_t n, const std::string& id, std::vector<std::size_t> assignment,
                             int param = 0) {
  for (const auto& r : instantiate(n, *find_schema(id))) {
    if (r.assignment == assignment && r.param == param) return r;
  }
  FAIL("no such instance");
  return {};
}

}  // namespace

TEST_CASE("schema tables") {
  CHECK(core_schemas().size() == 19);
  CHECK(derived_schemas().size() == 8);
  CHECK(find_schema("R11'") != nullptr);
  CHECK(find_schema("D24")->variables.size() == 4);
  CHECK(find_schema("R99") == nullptr);
}

TEST_CASE("instantiation counts") {
  const auto n2 = instantiate(2, RelationSet::Core);
  CHECK(count_schema(n2, "R2") == 1);
  CHECK(count_schema(n2, "R1") == 2);
  CHECK(count_schema(instantiate(3, RelationSet::Core), "R17") == 0);

  const RelationInstance r2 = instance_of(2, "R2", {0, 1});
  CHECK(print_word(r2.lhs) == "X[0,1]^2");
  CHECK(r2.rhs.empty());

  // Independent count for n=4: R17 needs j<k, l<m, j<l, k<m over distinct indices.
  std::size_t expected = 0;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t l = 0; l < 4; ++l)
        for (std::size_t m = 0; m < 4; ++m) {
          const bool distinct = j != k && j != l && j != m && k != l && k != m && l != m;
          if (distinct && j < k && l < m && j < l && k < m) ++expected;
        }
  CHECK(count_schema(instantiate(4, RelationSet::Core), "R17") == expected);

  const auto d = instantiate(4, RelationSet::Derived);
  CHECK(count_schema(d, "D24") == 1);
  CHECK(count_schema(d, "D21") == 4 * 4);  // j<k<l triples times q in 0..3
  const RelationInstance d24 = instance_of(4, "D24", {0, 1, 2, 3});
  CHECK(d24.key() == "D24 j=0 l=1 j'=2 l'=3");
  CHECK(d24.lhs.size() == 29);
}

TEST_CASE("instances respect ordering and distinctness") {
  for (const auto set : {RelationSet::Core, RelationSet::Derived}) {
    for (const auto& r : instantiate(5, set)) {
      auto a = r.assignment;
      std::sort(a.begin(), a.end());
      CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
      for (const auto* side : {&r.lhs, &r.rhs}) {
        for (const auto& g : *side) CHECK(g.j <= g.l);
      }
    }
  }
}

TEST_CASE("soundness of the presentation") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto core = verify_soundness(n, RelationSet::Core);
    CHECK(core.failed == 0);
    CHECK(core.checked == instantiate(n, RelationSet::Core).size());
  }
  const auto derived = verify_soundness(5, RelationSet::Derived, 2);
  CHECK(derived.failed == 0);
  CHECK(derived.checked > 0);
}

TEST_CASE("rewrite_once") {
  const RelationInstance r2 = instance_of(2, "R2", {0, 1});
  CHECK(rewrite_once(parse_word("X[0,1] X[0,1]", 2), {r2, 0, Direction::LhsToRhs}).empty());
  CHECK(print_word(rewrite_once({}, {r2, 0, Direction::RhsToLhs})) == "X[0,1]^2");

  const RelationInstance r4 = instance_of(2, "R4", {0, 1});
  CHECK(print_word(rewrite_once(parse_word("i[0] i[1]", 2), {r4, 0, Direction::LhsToRhs})) == "i[1] i[0]");

  CHECK(oracle::error_of([&] { rewrite_once(parse_word("X[0,1]", 2), {r2, 0, Direction::LhsToRhs}); }) ==
        ErrorCode::NoMatchAtPosition);
  CHECK(oracle::error_of([&] { rewrite_once({}, {r2, 1, Direction::RhsToLhs}); }) ==
        ErrorCode::NoMatchAtPosition);
}

TEST_CASE("find_rewrites") {
  const auto on_empty = find_rewrites({}, 2);
  REQUIRE(!on_empty.empty());
  for (const auto& s : on_empty) {
    CHECK(s.position == 0);
    CHECK(s.direction == Direction::RhsToLhs);
    CHECK(s.source().empty());
  }
  // every schema with an empty right side, over all its instances
  const auto has = [&](const std::string& id) {
    return std::any_of(on_empty.begin(), on_empty.end(), [&](const RewriteStep& s) { return s.instance.schema_id == id; });
  };
  CHECK(has("R2"));
  CHECK(has("R16"));
  CHECK(has("R1"));
  CHECK(has("R3"));
  CHECK(on_empty.size() == 2 + 1 + 1 + 1);

  const auto k8 = find_rewrites(parse_word("K[0,1]^8", 2), 2);
  CHECK(std::any_of(k8.begin(), k8.end(), [](const RewriteStep& s) {
    return s.instance.schema_id == "R3" && s.position == 0 && s.direction == Direction::LhsToRhs;
  }));

  const auto x = find_rewrites(parse_word("X[0,1]", 2), 2);
  CHECK(std::none_of(x.begin(), x.end(), [](const RewriteStep& s) {
    return s.instance.schema_id == "R2" && s.direction == Direction::LhsToRhs;
  }));

  // sorted by position, then schema order, then direction
  std::mt19937_64 rng(8);
  const Word w = oracle::random_word(rng, 3, 12);
  const auto steps = find_rewrites(w, 3);
  std::vector<std::string> order;
  for (const auto& s : core_schemas()) order.push_back(s.id);
  auto rank = [&](const RewriteStep& s) {
    return std::make_tuple(s.position,
                           std::find(order.begin(), order.end(), s.instance.schema_id) - order.begin(),
                           static_cast<int>(s.direction));
  };
  CHECK(std::is_sorted(steps.begin(), steps.end(), [&](const auto& a, const auto& b) { return rank(a) < rank(b); }));
}

TEST_CASE("rewrites preserve meaning and normal forms") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 3;
    const Word w = oracle::random_word(rng, n, 10);
    const auto steps = find_rewrites(w, n);
    REQUIRE(!steps.empty());
    const auto& step = steps[std::uniform_int_distribution<std::size_t>(0, steps.size() - 1)(rng)];
    const Word r = rewrite_once(w, step);
    CHECK(equivalent(w, r, n));
    CHECK(normal_form(r, n) == normal_form(w, n));
  }
}

TEST_CASE("derive") {
  const auto one = derive(parse_word("X[0,1]^2", 2), {}, 2);
  REQUIRE(one.has_value());
  CHECK(one->size() == 1);
  CHECK(one->front().instance.schema_id == "R2");

  const Word a = parse_word("i[0] i[1]", 2);
  const Word b = parse_word("i[1] i[0]", 2);
  const auto swap = derive(a, b, 2);
  REQUIRE(swap.has_value());
  CHECK(swap->size() == 1);
  CHECK(swap->front().instance.schema_id == "R4");
  CHECK(replay(a, *swap) == b);

  CHECK(derive(a, a, 2)->empty());

  // A longer chain: K^8 i[0] rewritten to i[0].
  const Word k8 = parse_word("K[0,1]^8 i[0]", 2);
  const auto chain = derive(k8, parse_word("i[0]", 2), 2);
  REQUIRE(chain.has_value());
  CHECK(replay(k8, *chain) == parse_word("i[0]", 2));

  DeriveBudget tiny;
  tiny.max_steps = 1;
  CHECK(oracle::error_of([&] { derive(parse_word("X[0,1] i[0] X[0,1]", 2), parse_word("i[1]", 2), 2, tiny); }) ==
        ErrorCode::BudgetExhausted);
}

TEST_CASE("derive on a derived relation is best effort") {
  const RelationInstance d19 = instance_of(2, "D19", {0, 1});
  DeriveBudget budget;
  budget.max_steps = 20000;
  try {
    const auto steps = derive(d19.lhs, d19.rhs, 2, budget);
    if (steps) CHECK(replay(d19.lhs, *steps) == d19.rhs);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExhausted);
  }
}
