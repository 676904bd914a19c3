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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gaussyn/synth.hpp"

namespace gaussyn {

/// The cases of the square-completion argument for a basic edge s -G-> r
/// against the normal edge s => t. Grouped by G: i[0], K[0,1], X[a,a+1].
enum class CaseId : std::uint8_t {
  I_1,
  I_2,
  I_3,
  I_4,
  K_1_1,
  K_1_2,
  K_2_1a,
  K_2_1b,
  K_2_2,
  K_2_3,
  K_2_4_Disjoint,
  K_2_4_Retro,
  X_1_1,
  X_1_2_1,
  X_1_2_2,
  X_1_2_3,
  X_1_3_1,
  X_1_3_2,
  X_1_3_3,
  X_2_1,
  X_2_2_1,
  X_2_2_2a,
  X_2_2_2b,
  X_2_2_2c,
  X_2_2_3,
  X_2_2_4,
  X_2_2_5,
  X_2_2_6,
  X_2_2_7,
  X_2_2_8,
};

inline constexpr std::size_t kCaseCount = 30;

/// Every case, in declaration order.
const std::array<CaseId, kCaseCount>& all_cases();

/// "I.1", "K.2.4-retro", "X.2.2.2b", ...
std::string_view to_string(CaseId id);
std::optional<CaseId> case_from_string(std::string_view name);

/// True for cases completed by N' = [N], G' = [G].
bool is_disjoint(CaseId id);
/// True for cases where the normal edge from r undoes G.
bool is_retrograde(CaseId id);

/// Throws NotBasicGenerator or IdentityState; s is assumed unitary.
CaseId classify_case(const UMat& s, const Generator& g);

struct DiagramCompletion {
  CaseId case_id = CaseId::I_1;
  Syllable N;                        // normal edge from s
  std::vector<Syllable> N_prime;     // normal edges from r, in path order
  Word G_prime;                      // simple edges from t; q = eval(G_prime) t
  UMat q_state;
  std::vector<std::size_t> odd_rows;  // j, l, j', l' for the four-odd-entry cases
};

DiagramCompletion complete_diagram(const UMat& s, const Generator& g);

struct CompletionReport {
  bool syllable_ok = false;   // (a)
  bool chain_ok = false;      // (b)
  bool endpoint_ok = false;   // (c)
  bool level_ok = false;      // (d) on the simple path
  bool basic_level_ok = false;  // (d) on the basic expansion of the path
  bool table_ok = true;       // X.2.2.2b: two even entries among j, l, j', l' per path state
  std::vector<std::string> violations;

  bool ok() const {
    return syllable_ok && chain_ok && endpoint_ok && level_ok && basic_level_ok && table_ok;
  }
};

CompletionReport verify_completion(const UMat& s, const Generator& g, const DiagramCompletion& dc);

/// The N' syllables as a word (latest edge leftmost).
Word n_prime_word(const DiagramCompletion& dc);

struct Edge {
  UMat s;
  Generator g;
};

/// i[0], K[0,1] and X[a,a+1] for a < n - 1.
std::vector<Generator> basic_generators(std::size_t n);

/// Seeded random edges (s, G) with s != I and G basic.
std::vector<Edge> sample_edges(std::size_t n, std::size_t count, std::uint64_t seed);

/// Handcrafted witnesses that fit in dimension n, keyed by their case.
std::map<CaseId, Edge> handcrafted_fixtures(std::size_t n);

/// A witness for each target: handcrafted first, then seeded sampling of at
/// most `budget` edges. Throws BudgetExhausted naming any unmet target.
std::map<CaseId, Edge> fixture_states(std::size_t n, std::uint64_t seed, const std::set<CaseId>& targets,
                                      std::size_t budget);

struct MainLemmaReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::map<CaseId, std::size_t> coverage;
  std::vector<std::string> failures;

  std::vector<CaseId> unwitnessed() const;
};

/// Verifies `samples` sampled edges plus the handcrafted fixtures.
/// threads == 0 picks the hardware concurrency; the report is independent of it.
MainLemmaReport run_main_lemma(std::size_t n, std::size_t samples, std::uint64_t seed, unsigned threads = 0);

}  // namespace gaussyn
