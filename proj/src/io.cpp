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


#include "gaussyn/io.hpp"

#include <cstdio>

#include "gaussyn/error.hpp"

namespace gaussyn {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidDocument, what); }

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

Integer integer_from_json(const json& v, const char* field) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) != 0) invalid(std::string("bad integer in ") + field);
    return z;
  }
  invalid(std::string("expected an integer for ") + field);
}

unsigned exponent_from_json(const json& v, const char* field) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 1000000) {
    invalid(std::string("expected a small non-negative integer for ") + field);
  }
  return static_cast<unsigned>(v.get<std::int64_t>());
}

DyadicGauss entry_from_json(const json& e) {
  if (e.is_array()) {
    if (e.size() != 3) invalid("entries must be [a, b, k]");
    return DyadicGauss(GaussInt(integer_from_json(e[0], "a"), integer_from_json(e[1], "b")),
                       exponent_from_json(e[2], "k"));
  }
  if (e.is_object()) {
    if (!e.contains("a") || !e.contains("b") || !e.contains("pow2")) invalid("entry objects need a, b and pow2");
    return DyadicGauss::from_pow2(GaussInt(integer_from_json(e["a"], "a"), integer_from_json(e["b"], "b")),
                                  exponent_from_json(e["pow2"], "pow2"));
  }
  invalid("unrecognised entry");
}

}  // namespace

json matrix_to_json(const UMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.n(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.n(); ++c) {
      const DyadicGauss& t = m(r, c);
      row.push_back(json::array({integer_to_json(t.num().re()), integer_to_json(t.num().im()), t.k()}));
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", m.n()}, {"entries", std::move(rows)}};
}

UMat matrix_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) invalid("expected {\"n\", \"entries\"}");
  const json& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 1) invalid("n must be a positive integer");
  const auto n = static_cast<std::size_t>(jn.get<std::int64_t>());
  const json& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != n) invalid("entries must have n rows");
  UMat m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) invalid("row " + std::to_string(r) + " must have n entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry_from_json(rows[r][c]);
  }
  if (!is_unitary(m)) invalid("matrix is not unitary");
  return m;
}

UMat parse_matrix(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) invalid("not valid JSON");
  return matrix_from_json(doc);
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

nlohmann::json RunReport::to_json() const {
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(inputs_digest()));
  json j{{"command", command},   {"inputs", inputs}, {"inputs_digest", digest}, {"seed", seed},
         {"checked", checked},   {"passed", passed}, {"failed", failed},        {"elapsed_ms", elapsed_ms},
         {"failures", failures}};
  if (!coverage.empty()) {
    j["coverage"] = coverage;
    j["unwitnessed"] = unwitnessed;
  }
  return j;
}

}  // namespace gaussyn
