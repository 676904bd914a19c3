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


#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gaussyn/cli.hpp"
#include "gaussyn/io.hpp"
#include "gaussyn/words.hpp"

using namespace gaussyn;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = std::string(GAUSSYN_TEST_TMPDIR) + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

std::string matrix_file(const std::string& name, const char* word, std::size_t n) {
  return temp_file(name, matrix_to_json(eval_word(parse_word(word, n), n)).dump());
}

}  // namespace

TEST_CASE("synth") {
  const auto id = run({"synth", matrix_file("id.json", "", 3), "--check"});
  CHECK(id.code == 0);
  CHECK(id.out == "\n");
  CHECK(run({"synth", matrix_file("k.json", "K[0,1]", 2)}).out == "K[0,1]^7\n");
  CHECK(run({"synth", matrix_file("x.json", "X[0,1]", 2), "--check"}).out == "X[0,1]\n");

  const auto bad = run({"synth", temp_file("bad.json", R"({"n":2,"entries":[[[1,0,0],[1,0,0]],[[0,0,0],[1,0,0]]]})")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("InvalidDocument") != std::string::npos);
  CHECK(run({"synth", temp_file("junk.json", "{")}).code == 2);
  CHECK(run({"synth", std::string(GAUSSYN_TEST_TMPDIR) + "/missing.json"}).code == 2);
}

TEST_CASE("eval, nf and eq") {
  const auto e = run({"eval", "--n", "2", "X[0,1]"});
  CHECK(e.code == 0);
  CHECK(parse_matrix(e.out) == eval_word(parse_word("X[0,1]", 2), 2));
  CHECK(run({"nf", "--n", "2", "K[0,1]^8"}).out == "\n");
  CHECK(run({"eq", "--n", "2", "X[0,1]^2", ""}).code == 0);
  CHECK(run({"eq", "--n", "2", "K[0,1]", "Kd[0,1]"}).code == 1);
  CHECK(run({"eq", "--n", "2", "K[0,2]", ""}).code == 2);
  CHECK(run({"nf", "--n", "2", "Q[0]"}).code == 2);
}

TEST_CASE("verification commands") {
  const auto vr = run({"verify-relations", "--n", "4", "--set", "core", "--jobs", "2"});
  CHECK(vr.code == 0);
  const auto j = nlohmann::json::parse(vr.out);
  CHECK(j["failed"] == 0);
  CHECK(j["checked"].get<std::size_t>() > 0);
  CHECK(run({"verify-relations", "--n", "4", "--set", "derived"}).code == 0);
  CHECK(run({"verify-relations", "--n", "4", "--set", "other"}).code == 2);

  const auto ml = run({"mainlemma", "--n", "4", "--samples", "500", "--seed", "7", "--require-coverage"});
  CHECK(ml.code == 0);
  const auto m = nlohmann::json::parse(ml.out);
  CHECK(m["seed"] == 7);
  CHECK(m["failed"] == 0);
  CHECK(m["unwitnessed"].empty());
  CHECK(m["coverage"].size() == 30);

  // Several cases need four rows, so coverage cannot be complete at n=3.
  const auto small = run({"mainlemma", "--n", "3", "--samples", "50", "--require-coverage"});
  CHECK(small.code == 3);
  CHECK(nlohmann::json::parse(small.out)["failed"] == 0);
}

TEST_CASE("random words are reproducible") {
  const auto a = run({"random-word", "--n", "3", "--length", "10", "--seed", "1"});
  const auto b = run({"random-word", "--n", "3", "--length", "10", "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(parse_word(a.out.substr(0, a.out.size() - 1), 3).size() == 10);
}

TEST_CASE("derive") {
  const auto d = run({"derive", "--n", "2", "i[0] i[1]", "i[1] i[0]"});
  CHECK(d.code == 0);
  CHECK(d.out.find("R4") != std::string::npos);
  CHECK(run({"derive", "--n", "2", "K[0,1]", ""}).code == 1);
  CHECK(run({"derive", "--n", "2", "X[0,1] i[0] X[0,1]", "i[1]", "--max-steps", "1"}).code == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"nf", "--n", "1", ""}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
