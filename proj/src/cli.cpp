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


#include "gaussyn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "gaussyn/error.hpp"
#include "gaussyn/io.hpp"
#include "gaussyn/mainlemma.hpp"
#include "gaussyn/relations.hpp"
#include "gaussyn/synth.hpp"

namespace gaussyn {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidDocument, "cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

struct Options {
  std::size_t n = 2;
  bool check = false;
  std::string set = "core";
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::size_t length = 10;
  bool require_coverage = false;
  std::size_t max_steps = DeriveBudget{}.max_steps;
  unsigned jobs = 0;
  std::string file;
  std::string w;
  std::string v;
};

RelationSet relation_set(const std::string& name) {
  return name == "derived" ? RelationSet::Derived : RelationSet::Core;
}

int cmd_synth(const Options& o, std::ostream& out, std::ostream& err) {
  const UMat u = parse_matrix(read_input(o.file));
  const Word w = normal_word(u);
  if (o.check && !mat_mul(eval_word(w, u.n()), u).is_identity()) {
    err << "check failed: eval(word) * U != I\n";
    return kExitVerificationFailed;
  }
  out << print_word(w) << '\n';
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  out << matrix_to_json(eval_word(parse_word(o.w, o.n), o.n)).dump() << '\n';
  return kExitOk;
}

int cmd_nf(const Options& o, std::ostream& out) {
  out << print_word(normal_form(parse_word(o.w, o.n), o.n)) << '\n';
  return kExitOk;
}

int cmd_eq(const Options& o, std::ostream& out) {
  const bool same = equivalent(parse_word(o.w, o.n), parse_word(o.v, o.n), o.n);
  out << (same ? "equivalent" : "not equivalent") << '\n';
  return same ? kExitOk : kExitNotEquivalent;
}

int finish(RunReport& report, Clock::time_point start, std::ostream& out, bool extra_failure = false) {
  report.passed = report.checked - report.failed;
  report.elapsed_ms = ms_since(start);
  out << report.to_json().dump(2) << '\n';
  return report.failed == 0 && !extra_failure ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_relations(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const SoundnessReport s = verify_soundness(o.n, relation_set(o.set), o.jobs);
  RunReport report;
  report.command = "verify-relations";
  report.inputs = "n=" + std::to_string(o.n) + " set=" + o.set;
  report.checked = s.checked;
  report.failed = s.failed;
  report.failures = s.failures;
  return finish(report, start, out);
}

int cmd_mainlemma(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const MainLemmaReport m = run_main_lemma(o.n, o.samples, o.seed, o.jobs);
  RunReport report;
  report.command = "mainlemma";
  report.inputs = "n=" + std::to_string(o.n) + " samples=" + std::to_string(o.samples);
  report.seed = o.seed;
  report.checked = m.checked;
  report.failed = m.failed;
  report.failures = m.failures;
  for (const CaseId id : all_cases()) {
    const auto it = m.coverage.find(id);
    report.coverage[std::string(to_string(id))] = it == m.coverage.end() ? 0 : it->second;
  }
  for (const CaseId id : m.unwitnessed()) report.unwitnessed.emplace_back(to_string(id));
  return finish(report, start, out, o.require_coverage && !report.unwitnessed.empty());
}

int cmd_random_word(const Options& o, std::ostream& out) {
  out << print_word(random_word(o.n, o.length, o.seed)) << '\n';
  return kExitOk;
}

int cmd_derive(const Options& o, std::ostream& out, std::ostream& err) {
  const Word w = parse_word(o.w, o.n), v = parse_word(o.v, o.n);
  if (!equivalent(w, v, o.n)) {
    out << "not equivalent\n";
    return kExitNotEquivalent;
  }
  DeriveBudget budget;
  budget.max_steps = o.max_steps;
  const auto steps = derive(w, v, o.n, budget, relation_set(o.set));
  if (!steps) {
    err << "no derivation within the length bound\n";
    return kExitVerificationFailed;
  }
  for (const auto& step : *steps) out << step.to_string() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact synthesis and relation checking for Gaussian dyadic unitaries", "gaussyn"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "dimension")->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  };
  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", o.jobs, "worker threads, 0 for all cores"); };

  auto* synth = app.add_subcommand("synth", "print the normal word of a matrix document");
  synth->add_option("file", o.file, "matrix JSON file, - for stdin")->required();
  synth->add_flag("--check", o.check, "re-multiply and verify the result");

  auto* eval = app.add_subcommand("eval", "print the matrix of a word");
  add_n(eval);
  eval->add_option("word", o.w)->required();

  auto* nf = app.add_subcommand("nf", "print the normal form of a word");
  add_n(nf);
  nf->add_option("word", o.w)->required();

  auto* eq = app.add_subcommand("eq", "exit 0 if two words are equal, 1 if not");
  add_n(eq);
  eq->add_option("w", o.w)->required();
  eq->add_option("v", o.v)->required();

  auto* vr = app.add_subcommand("verify-relations", "check every relation instance exactly");
  add_n(vr);
  vr->add_option("--set", o.set)->check(CLI::IsMember({"core", "derived"}));
  add_jobs(vr);

  auto* ml = app.add_subcommand("mainlemma", "verify square completions on sampled edges");
  add_n(ml);
  ml->add_option("--samples", o.samples);
  ml->add_option("--seed", o.seed);
  ml->add_flag("--require-coverage", o.require_coverage, "exit 3 unless every case is witnessed");
  add_jobs(ml);

  auto* rw = app.add_subcommand("random-word", "print a seeded random word");
  add_n(rw);
  rw->add_option("--length", o.length);
  rw->add_option("--seed", o.seed);

  auto* dv = app.add_subcommand("derive", "search for a rewrite chain between two words");
  add_n(dv);
  dv->add_option("w", o.w)->required();
  dv->add_option("v", o.v)->required();
  dv->add_option("--set", o.set)->check(CLI::IsMember({"core", "derived"}));
  dv->add_option("--max-steps", o.max_steps);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInvalidInput;
  }

  const std::vector<std::pair<CLI::App*, std::function<int()>>> handlers = {
      {synth, [&] { return cmd_synth(o, out, err); }},
      {eval, [&] { return cmd_eval(o, out); }},
      {nf, [&] { return cmd_nf(o, out); }},
      {eq, [&] { return cmd_eq(o, out); }},
      {vr, [&] { return cmd_verify_relations(o, out); }},
      {ml, [&] { return cmd_mainlemma(o, out); }},
      {rw, [&] { return cmd_random_word(o, out); }},
      {dv, [&] { return cmd_derive(o, out, err); }},
  };
  try {
    for (const auto& [sub, run] : handlers) {
      if (sub->parsed()) return run();
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (e.code() == ErrorCode::BudgetExhausted) return kExitVerificationFailed;
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace gaussyn
