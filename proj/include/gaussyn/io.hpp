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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gaussyn/matrix.hpp"
#include "json.hpp"

namespace gaussyn {

/// Matrix documents: {"n": int, "entries": [[e, ...], ...]} row-major.
/// Each entry is [a, b, k] meaning (a + bi) / gamma^k, or
/// {"a": ..., "b": ..., "pow2": m} meaning (a + bi) / 2^m. Parts may be JSON
/// integers or decimal strings for values beyond 64 bits.
nlohmann::json matrix_to_json(const UMat& m);

/// Throws InvalidDocument on malformed input or a non-unitary matrix.
UMat matrix_from_json(const nlohmann::json& doc);
UMat parse_matrix(std::string_view text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

struct RunReport {
  std::string command;
  std::string inputs;  // canonical description of the inputs
  std::uint64_t seed = 0;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double elapsed_ms = 0;
  std::vector<std::string> failures;
  std::map<std::string, std::size_t> coverage;
  std::vector<std::string> unwitnessed;

  std::uint64_t inputs_digest() const { return fnv1a(inputs); }
  nlohmann::json to_json() const;
};

}  // namespace gaussyn
