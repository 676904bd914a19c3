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
#include <optional>
#include <string>
#include <vector>

#include "gaussyn/words.hpp"

namespace gaussyn {

enum class RelationSet { Core, Derived };

/// One letter of a parametric word: a generator over formal index
/// variables, raised to a fixed power or to the schema's exponent parameter.
struct TemplateLetter {
  GenKind kind = GenKind::Phase;
  std::size_t a = 0;  // variable slot
  std::size_t b = 0;  // variable slot; equals a for Phase
  int power = 1;
  bool power_is_param = false;
};

/// A relation lhs ~ rhs over formal indices. Admissible assignments are
/// injective and order every two-index generator as a < b.
struct RelationSchema {
  std::string id;
  std::vector<std::string> variables;
  int param_count = 1;  // number of values 0..param_count-1 for the exponent parameter
  std::vector<TemplateLetter> lhs;
  std::vector<TemplateLetter> rhs;
  std::string lhs_text;
  std::string rhs_text;
};

/// The 19 relations of the presentation (R1..R17 with R11' and R12').
const std::vector<RelationSchema>& core_schemas();
/// The 8 derived relations D18..D25.
const std::vector<RelationSchema>& derived_schemas();
const std::vector<RelationSchema>& schemas(RelationSet set);
/// Looks a schema up by id in either set; nullptr if unknown.
const RelationSchema* find_schema(const std::string& id);

struct RelationInstance {
  std::string schema_id;
  std::vector<std::size_t> assignment;  // one index per schema variable
  int param = 0;
  Word lhs;
  Word rhs;
  std::size_t n = 0;

  /// e.g. "R11 j=0 k=1 l=2" or "D21 j=0 k=1 l=2 q=3".
  std::string key() const;

  friend bool operator==(const RelationInstance&, const RelationInstance&) = default;
};

/// Every admissible instance, schema by schema in declaration order and
/// assignments in lexicographic order.
std::vector<RelationInstance> instantiate(std::size_t n, RelationSet set);
std::vector<RelationInstance> instantiate(std::size_t n, const RelationSchema& schema);

struct SoundnessReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // instance keys in instantiation order
};

/// Checks eval(lhs) == eval(rhs) for every instance. threads == 0 picks the
/// hardware concurrency. The report does not depend on the thread count.
SoundnessReport verify_soundness(std::size_t n, RelationSet set, unsigned threads = 0);

enum class Direction { LhsToRhs, RhsToLhs };

struct RewriteStep {
  RelationInstance instance;
  std::size_t position = 0;
  Direction direction = Direction::LhsToRhs;

  const Word& source() const { return direction == Direction::LhsToRhs ? instance.lhs : instance.rhs; }
  const Word& target() const { return direction == Direction::LhsToRhs ? instance.rhs : instance.lhs; }
  std::string to_string() const;
};

/// Replaces the source side at `position` by the target side. Throws
/// NoMatchAtPosition if the source does not occur there.
Word rewrite_once(const Word& w, const RewriteStep& step);

/// Every applicable step, ordered by position, then schema, then direction.
std::vector<RewriteStep> find_rewrites(const Word& w, std::size_t n, RelationSet set = RelationSet::Core);

struct DeriveBudget {
  std::size_t max_steps = 200000;   // word expansions across both frontiers
  std::size_t max_queue = 2000000;  // words stored across both frontiers
  std::size_t max_length = 0;       // longest intermediate word; 0 means max(|w|,|v|) + 8
};

/// Bidirectional breadth-first search for a chain of rewrites from w to v.
/// Returns nullopt when the bounded search space is exhausted without a
/// meeting point, and throws BudgetExhausted when a budget limit is hit.
std::optional<std::vector<RewriteStep>> derive(const Word& w, const Word& v, std::size_t n,
                                               const DeriveBudget& budget = {},
                                               RelationSet set = RelationSet::Core);

/// Applies the steps in order.
Word replay(const Word& w, const std::vector<RewriteStep>& steps);

}  // namespace gaussyn
