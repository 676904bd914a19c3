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

#include "gaussyn/mainlemma.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "gaussyn/error.hpp"

namespace gaussyn {

namespace {

constexpr std::array<std::string_view, kCaseCount> kNames = {
    "I.1",     "I.2",      "I.3",      "I.4",      "K.1.1",   "K.1.2",   "K.2.1a",  "K.2.1b",
    "K.2.2",   "K.2.3",    "K.2.4-disjoint",        "K.2.4-retro",        "X.1.1",   "X.1.2.1",
    "X.1.2.2", "X.1.2.3",  "X.1.3.1",  "X.1.3.2",  "X.1.3.3", "X.2.1",   "X.2.2.1", "X.2.2.2a",
    "X.2.2.2b", "X.2.2.2c", "X.2.2.3", "X.2.2.4",  "X.2.2.5", "X.2.2.6", "X.2.2.7", "X.2.2.8",
};

int mod4(int e) { return ((e % 4) + 4) % 4; }

Word phases(std::size_t j, int e) { return Word(static_cast<std::size_t>(mod4(e)), Generator::Phase(j)); }

Word x_power(std::size_t a, std::size_t b, int q) {
  return q & 1 ? Word{Generator::X(a, b)} : Word{};
}

Word k_dagger(std::size_t a, std::size_t b) { return Word(7, Generator::K(a, b)); }

/// What the case analysis reads off the pivot column of s.
struct PivotData {
  std::size_t p = 0;
  unsigned k = 0;
  std::vector<GaussInt> w;          // gamma^k times the pivot column
  std::vector<std::size_t> odd;     // odd rows of w, ascending
  std::size_t j = 0;                // first odd row
  std::size_t l = 0;                // second odd row (k > 0)
  int e = 0;                        // phase fix exponent (k == 0)
  int q = 0;                        // row exponent (k > 0)
};

PivotData analyse(const UMat& s) {
  const auto p = pivot_column(s);
  if (!p) throw Error(ErrorCode::IdentityState, "the identity has no normal edge");
  PivotData d;
  d.p = *p;
  const Column v = s.column(d.p);
  d.k = lde_vec(v);
  for (const auto& x : v) d.w.push_back(x.scaled(d.k));
  for (std::size_t r = 0; r < d.w.size(); ++r) {
    if (d.w[r].is_odd()) d.odd.push_back(r);
  }
  if (d.odd.empty()) throw Error(ErrorCode::NotUnitary, "pivot column has no odd entry");
  d.j = d.odd[0];
  if (d.k == 0) {
    d.e = phase_exponent(d.w[d.j]);
  } else {
    if (d.odd.size() < 2) throw Error(ErrorCode::NotUnitary, "pivot column has a single odd entry");
    d.l = d.odd[1];
    d.q = row_exponent(d.w[d.j], d.w[d.l]);
  }
  return d;
}

Syllable algorithm_syllable(const PivotData& d) {
  if (d.k > 0) return Syllable::RowOp(d.j, d.l, d.q);
  return d.j == d.p ? Syllable::PhaseFix(d.j, d.e) : Syllable::MovePhaseFix(d.j, d.p, d.e);
}

struct FourRows {
  std::size_t j, l, jp, lp;
  int e, f, g, h;
};

FourRows four_rows(const PivotData& d) {
  if (d.odd.size() < 4) throw Error(ErrorCode::NotUnitary, "expected a fourth odd entry");
  FourRows f{d.odd[0], d.odd[1], d.odd[2], d.odd[3], 0, 0, 0, 0};
  f.e = residue_exponent_gamma3(d.w[f.j]);
  f.f = residue_exponent_gamma3(d.w[f.l]);
  f.g = residue_exponent_gamma3(d.w[f.jp]);
  f.h = residue_exponent_gamma3(d.w[f.lp]);
  return f;
}

/// Bottom edge of the all-residues-one case, as a word (latest edge leftmost).
Word four_row_bottom(const FourRows& f) {
  Word w;
  for (const auto& part : {Word{Generator::K(f.jp, f.lp)}, Word{Generator::K(f.j, f.jp)},
                           Word{Generator::K(f.l, f.lp)}, Word{Generator::X(f.l, f.jp)}, k_dagger(f.l, f.lp),
                           k_dagger(f.j, f.jp), k_dagger(f.jp, f.lp)}) {
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

CaseId classify(const PivotData& d, const UMat& s, const Generator& g) {
  switch (g.kind) {
    case GenKind::Phase:
      if (d.j > 0) return CaseId::I_1;
      if (d.k == 0) return d.p == 0 ? CaseId::I_2 : CaseId::I_3;
      return CaseId::I_4;

    case GenKind::K: {
      if (d.k == 0) return d.j < 2 ? CaseId::K_1_1 : CaseId::K_1_2;
      if (d.j == 0 && d.l == 1) return d.q == 0 ? CaseId::K_2_1a : CaseId::K_2_1b;
      if (d.j == 0) return CaseId::K_2_2;
      if (d.j == 1) return CaseId::K_2_3;
      const UMat r = apply_gen(g, s);
      const Column v = r.column(d.p);
      const unsigned k01 = std::max(lde(v[0]), lde(v[1]));
      return k01 == d.k ? CaseId::K_2_4_Retro : CaseId::K_2_4_Disjoint;
    }

    case GenKind::X: {
      const std::size_t a = g.j;
      if (d.k == 0) {
        if (a >= d.p) return CaseId::X_1_1;
        if (a + 1 == d.p) {
          if (d.j == a + 1) return CaseId::X_1_2_1;
          if (d.j == a) return CaseId::X_1_2_2;
          return CaseId::X_1_2_3;
        }
        if (d.j == a) return CaseId::X_1_3_1;
        if (d.j == a + 1) return CaseId::X_1_3_2;
        return CaseId::X_1_3_3;
      }
      if (a >= d.p) return CaseId::X_2_1;
      if (d.l < a) return CaseId::X_2_2_1;
      if (d.l == a) {
        if (!d.w[a + 1].is_odd()) return CaseId::X_2_2_2a;
        const FourRows f = four_rows(d);
        return f.e == 0 && f.f == 0 && f.g == 0 && f.h == 0 ? CaseId::X_2_2_2b : CaseId::X_2_2_2c;
      }
      if (d.l == a + 1) return d.j == a ? CaseId::X_2_2_3 : CaseId::X_2_2_4;
      if (d.j < a) return CaseId::X_2_2_5;
      if (d.j == a) return CaseId::X_2_2_6;
      if (d.j == a + 1) return CaseId::X_2_2_7;
      return CaseId::X_2_2_8;
    }
  }
  throw Error(ErrorCode::NotBasicGenerator, g.to_string());
}

void require_basic(const Generator& g) {
  if (!g.is_basic()) throw Error(ErrorCode::NotBasicGenerator, g.to_string() + " is not basic");
}

}  // namespace

const std::array<CaseId, kCaseCount>& all_cases() {
  static const std::array<CaseId, kCaseCount> cases = [] {
    std::array<CaseId, kCaseCount> out{};
    for (std::size_t i = 0; i < kCaseCount; ++i) out[i] = static_cast<CaseId>(i);
    return out;
  }();
  return cases;
}

std::string_view to_string(CaseId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<CaseId> case_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kCaseCount; ++i) {
    if (kNames[i] == name) return static_cast<CaseId>(i);
  }
  return std::nullopt;
}

bool is_disjoint(CaseId id) {
  switch (id) {
    case CaseId::I_1:
    case CaseId::K_1_2:
    case CaseId::K_2_4_Disjoint:
    case CaseId::X_1_3_3:
    case CaseId::X_2_2_1:
    case CaseId::X_2_2_5:
    case CaseId::X_2_2_8:
      return true;
    default:
      return false;
  }
}

bool is_retrograde(CaseId id) {
  switch (id) {
    case CaseId::K_1_1:
    case CaseId::K_2_2:
    case CaseId::K_2_3:
    case CaseId::K_2_4_Retro:
    case CaseId::X_1_1:
    case CaseId::X_2_1:
      return true;
    default:
      return false;
  }
}

CaseId classify_case(const UMat& s, const Generator& g) {
  require_basic(g);
  if (g.max_index() >= s.n()) throw Error(ErrorCode::IndexOutOfRange, g.to_string());
  const PivotData d = analyse(s);
  return classify(d, s, g);
}

DiagramCompletion complete_diagram(const UMat& s, const Generator& g) {
  require_basic(g);
  if (g.max_index() >= s.n()) throw Error(ErrorCode::IndexOutOfRange, g.to_string());
  const PivotData d = analyse(s);

  DiagramCompletion dc;
  dc.case_id = classify(d, s, g);
  dc.N = algorithm_syllable(d);
  const std::size_t a = g.j;  // alpha for X[a,a+1]

  if (is_disjoint(dc.case_id)) {
    dc.N_prime = {dc.N};
    dc.G_prime = {g};
  } else if (is_retrograde(dc.case_id)) {
    const Syllable undo = g.kind == GenKind::K ? Syllable::RowOp(0, 1, 0) : Syllable::MovePhaseFix(a, a + 1, 0);
    dc.N_prime = {undo, dc.N};
  } else {
    switch (dc.case_id) {
      case CaseId::I_2:
        if (mod4(d.e - 1) != 0) dc.N_prime = {Syllable::PhaseFix(0, d.e - 1)};
        break;
      case CaseId::I_3:
        dc.N_prime = {Syllable::MovePhaseFix(0, d.p, d.e - 1)};
        break;
      case CaseId::I_4:
        dc.N_prime = {Syllable::RowOp(0, d.l, 1 - d.q)};
        dc.G_prime = concat(Word{Generator::Phase(0), Generator::Phase(d.l)}, x_power(0, d.l, d.q));
        break;
      case CaseId::K_2_1a:
        dc.G_prime = concat(phases(0, 3), phases(1, 3));
        break;
      case CaseId::K_2_1b:
        dc.N_prime = {Syllable::RowOp(0, 1, 1)};
        dc.G_prime = concat(phases(1, 3), Word{Generator::X(0, 1)});
        break;
      case CaseId::X_1_2_1:
        dc.N_prime = {Syllable::MovePhaseFix(a, a + 1, d.e)};
        break;
      case CaseId::X_1_2_2:
        if (d.e != 0) dc.N_prime = {Syllable::PhaseFix(a + 1, d.e)};
        break;
      case CaseId::X_1_2_3:
        dc.N_prime = {dc.N};
        dc.G_prime = {Generator::X(d.j, a)};
        break;
      case CaseId::X_1_3_1:
        dc.N_prime = {Syllable::MovePhaseFix(a + 1, d.p, d.e)};
        dc.G_prime = {g};
        break;
      case CaseId::X_1_3_2:
        dc.N_prime = {Syllable::MovePhaseFix(a, d.p, d.e)};
        dc.G_prime = {g};
        break;
      case CaseId::X_2_2_2a:
        dc.N_prime = {Syllable::RowOp(d.j, a + 1, d.q)};
        dc.G_prime = {g};
        break;
      case CaseId::X_2_2_2b: {
        const FourRows f = four_rows(d);
        dc.odd_rows = {f.j, f.l, f.jp, f.lp};
        dc.N_prime = {dc.N};
        dc.G_prime = four_row_bottom(f);
        break;
      }
      case CaseId::X_2_2_2c: {
        const FourRows f = four_rows(d);
        dc.odd_rows = {f.j, f.l, f.jp, f.lp};
        const int q = mod4(f.e - f.f) % 2;
        const int qp = mod4(f.e - f.g) % 2;
        const int qpp = mod4(f.e - f.f - q) == 2 ? 1 : 0;
        const int qppp = mod4(f.e - f.g - qp) == 2 ? 1 : 0;
        dc.N_prime = {Syllable::RowOp(f.j, f.l, qp)};
        // left and right descents to the all-residues-one square
        Word left = concat(concat(phases(f.j, -f.e), phases(f.l, -f.e)), x_power(f.j, f.l, qpp));
        left = concat(concat(left, phases(f.jp, -f.g)), phases(f.lp, -f.h));
        Word right = concat(concat(phases(f.j, -f.e), phases(f.l, -f.e)), x_power(f.j, f.l, qppp));
        right = concat(concat(right, phases(f.jp, -f.f)), phases(f.lp, -f.h));
        dc.G_prime = concat(concat(invert_word(right), four_row_bottom(f)), left);
        break;
      }
      case CaseId::X_2_2_3:
        dc.N_prime = {dc.N};
        dc.G_prime = concat(concat(x_power(a, a + 1, d.q), phases(a, -d.q)), phases(a + 1, 2 - d.q));
        break;
      case CaseId::X_2_2_4:
        dc.N_prime = {Syllable::RowOp(d.j, a, d.q)};
        dc.G_prime = {g};
        break;
      case CaseId::X_2_2_6:
        dc.N_prime = {Syllable::RowOp(a + 1, d.l, d.q)};
        dc.G_prime = {g};
        break;
      case CaseId::X_2_2_7:
        dc.N_prime = {Syllable::RowOp(a, d.l, d.q)};
        dc.G_prime = {g};
        break;
      default:
        break;
    }
  }
  dc.q_state = apply_word(dc.G_prime, apply_syllable(dc.N, s));
  return dc;
}

Word n_prime_word(const DiagramCompletion& dc) {
  Word w;
  for (auto it = dc.N_prime.rbegin(); it != dc.N_prime.rend(); ++it) {
    const Word part = it->to_word();
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

CompletionReport verify_completion(const UMat& s, const Generator& g, const DiagramCompletion& dc) {
  CompletionReport rep;
  auto fail = [&](std::string what) { rep.violations.push_back(std::move(what)); };
  const std::string tag = std::string(to_string(dc.case_id)) + ": ";

  if (!is_unitary(s) || s.is_identity()) {
    fail(tag + "source state is not a non-identity unitary");
    return rep;
  }
  const Level top = level_unchecked(s);

  // (a)
  const Syllable actual = syllable_unchecked(s);
  rep.syllable_ok = actual == dc.N;
  if (!rep.syllable_ok) fail(tag + "N is " + dc.N.to_string() + ", algorithm gives " + actual.to_string());

  // (b)
  UMat state = apply_gen(g, s);
  rep.chain_ok = true;
  for (std::size_t i = 0; i < dc.N_prime.size(); ++i) {
    if (state.is_identity()) {
      rep.chain_ok = false;
      fail(tag + "N' step " + std::to_string(i) + " starts at the identity");
      break;
    }
    const Syllable genuine = syllable_unchecked(state);
    if (genuine != dc.N_prime[i]) {
      rep.chain_ok = false;
      fail(tag + "N' step " + std::to_string(i) + " is " + dc.N_prime[i].to_string() + ", algorithm gives " +
           genuine.to_string());
      break;
    }
    state = apply_syllable(genuine, state);
  }

  // (c)
  const UMat t = apply_syllable(dc.N, s);
  const UMat via_g_prime = apply_word(dc.G_prime, t);
  const UMat via_n_prime = apply_word(n_prime_word(dc), apply_gen(g, s));
  rep.endpoint_ok = via_g_prime == dc.q_state && via_n_prime == dc.q_state;
  if (!rep.endpoint_ok) fail(tag + "N' G and G' N disagree at q");

  // (d) on the simple path, then on its basic expansion
  auto walk = [&](const Word& w, bool& ok, const char* label) {
    ok = true;
    UMat cur = t;
    auto check = [&](std::size_t step) {
      const Level lv = level_unchecked(cur);
      if (lv < top) return true;
      ok = false;
      fail(tag + label + " state " + std::to_string(step) + " has level " + lv.to_string() + " >= " +
           top.to_string());
      return false;
    };
    if (!check(0)) return;
    std::size_t step = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      apply_gen_inplace(*it, cur);
      if (!check(++step)) return;
    }
  };
  walk(dc.G_prime, rep.level_ok, "G' path");
  walk(expand_basic(dc.G_prime), rep.basic_level_ok, "basic G' path");

  if (dc.case_id == CaseId::X_2_2_2b && dc.odd_rows.size() == 4) {
    // The eight states below s: t, then one per edge of G' (a run of seven
    // K letters is one K-dagger edge).
    UMat cur = t;
    const std::size_t p = *pivot_column(s);
    auto two_even = [&](const UMat& m) {
      int even = 0;
      for (std::size_t r : dc.odd_rows) {
        const DyadicGauss& x = m(r, p);
        if (x.k() <= top.k && !x.scaled(top.k).is_odd()) ++even;
      }
      return even >= 2;
    };
    std::size_t states = 1;
    rep.table_ok = two_even(cur);
    for (std::size_t i = dc.G_prime.size(); i > 0;) {
      std::size_t run = 1;
      while (run < i && dc.G_prime[i - 1 - run] == dc.G_prime[i - 1]) ++run;
      for (std::size_t r = 0; r < run; ++r) apply_gen_inplace(dc.G_prime[i - 1], cur);
      i -= run;
      ++states;
      rep.table_ok = rep.table_ok && two_even(cur);
    }
    if (states != 8) rep.table_ok = false;
    if (!rep.table_ok) fail(tag + "eight-state table check failed");
  }
  return rep;
}

std::vector<Generator> basic_generators(std::size_t n) {
  std::vector<Generator> out;
  if (n < 2) return out;
  out.push_back(Generator::Phase(0));
  out.push_back(Generator::K(0, 1));
  for (std::size_t a = 0; a + 1 < n; ++a) out.push_back(Generator::X(a, a + 1));
  return out;
}

std::vector<Edge> sample_edges(std::size_t n, std::size_t count, std::uint64_t seed) {
  const auto gens = basic_generators(n);
  if (gens.empty()) throw Error(ErrorCode::IndexOutOfRange, "edges need n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, 10 * n);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::vector<Edge> out;
  out.reserve(count);
  while (out.size() < count) {
    const Word w = random_word(rng, n, length(rng));
    UMat s = eval_word(w, n);
    const Generator g = gens[pick(rng)];
    if (s.is_identity()) continue;
    out.push_back({std::move(s), g});
  }
  return out;
}

namespace {

using Builder = std::function<std::optional<Edge>(std::size_t)>;

Builder word_fixture(const char* state, Generator g, std::size_t need) {
  return [=](std::size_t n) -> std::optional<Edge> {
    if (n < need) return std::nullopt;
    return Edge{eval_word(parse_word(state, n), n), g};
  };
}

Builder column_fixture(std::vector<std::array<long, 3>> entries, std::size_t p, Generator g) {
  return [=](std::size_t n) -> std::optional<Edge> {
    if (n < std::max(entries.size(), g.max_index() + 1)) return std::nullopt;
    Column v(n);
    for (std::size_t r = 0; r < entries.size(); ++r) {
      v[r] = DyadicGauss(GaussInt(entries[r][0], entries[r][1]), static_cast<unsigned>(entries[r][2]));
    }
    return Edge{state_with_pivot_column(v, p), g};
  };
}

const std::vector<std::pair<CaseId, Builder>>& fixture_table() {
  using G = Generator;
  static const std::vector<std::pair<CaseId, Builder>> table = {
      {CaseId::I_1, word_fixture("i[1]", G::Phase(0), 2)},
      {CaseId::I_2, word_fixture("i[0]", G::Phase(0), 2)},
      {CaseId::I_3, word_fixture("X[0,1]", G::Phase(0), 2)},
      {CaseId::I_4, word_fixture("K[0,1]", G::Phase(0), 2)},
      {CaseId::K_1_1, word_fixture("X[0,1]", G::K(0, 1), 2)},
      {CaseId::K_1_2, word_fixture("X[2,3]", G::K(0, 1), 4)},
      {CaseId::K_2_1a, word_fixture("K[0,1]", G::K(0, 1), 2)},
      {CaseId::K_2_1b, column_fixture({{1, 0, 1}, {0, 1, 1}}, 1, G::K(0, 1))},
      {CaseId::K_2_2, word_fixture("K[0,2]", G::K(0, 1), 3)},
      {CaseId::K_2_3, word_fixture("K[1,2]", G::K(0, 1), 3)},
      {CaseId::K_2_4_Disjoint, word_fixture("K[2,3]", G::K(0, 1), 4)},
      {CaseId::K_2_4_Retro, column_fixture({{1, 0, 1}, {0, 0, 0}, {1, 0, 2}, {1, 0, 2}}, 3, G::K(0, 1))},
      {CaseId::X_1_1, word_fixture("i[0]", G::X(0, 1), 2)},
      {CaseId::X_1_2_1, word_fixture("i[1]", G::X(0, 1), 2)},
      {CaseId::X_1_2_2, word_fixture("X[0,1]", G::X(0, 1), 2)},
      {CaseId::X_1_2_3, word_fixture("X[0,2]", G::X(1, 2), 3)},
      {CaseId::X_1_3_1, word_fixture("X[0,2]", G::X(0, 1), 3)},
      {CaseId::X_1_3_2, word_fixture("X[1,2]", G::X(0, 1), 3)},
      {CaseId::X_1_3_3, word_fixture("i[3]", G::X(0, 1), 4)},
      {CaseId::X_2_1, word_fixture("K[0,1]", G::X(1, 2), 3)},
      {CaseId::X_2_2_1, column_fixture({{1, 0, 1}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 0}}, 3, G::X(2, 3))},
      {CaseId::X_2_2_2a, column_fixture({{1, 0, 1}, {1, 0, 1}, {0, 0, 0}}, 2, G::X(1, 2))},
      {CaseId::X_2_2_2b, column_fixture({{1, 0, 4}, {-1, 2, 4}, {-1, 2, 4}, {-1, -2, 4}}, 3, G::X(1, 2))},
      // w_l = i(-1+2i), w_j' = -(-1+2i): residues 0, 1, 2, 0
      {CaseId::X_2_2_2c, column_fixture({{1, 0, 4}, {-2, -1, 4}, {1, -2, 4}, {-1, -2, 4}}, 3, G::X(1, 2))},
      {CaseId::X_2_2_3, word_fixture("K[0,1]", G::X(0, 1), 2)},
      {CaseId::X_2_2_4, word_fixture("K[0,2]", G::X(1, 2), 3)},
      {CaseId::X_2_2_5, word_fixture("K[0,3]", G::X(1, 2), 4)},
      {CaseId::X_2_2_6, word_fixture("K[0,2]", G::X(0, 1), 3)},
      {CaseId::X_2_2_7, word_fixture("K[1,3]", G::X(0, 1), 4)},
      {CaseId::X_2_2_8, word_fixture("K[2,3]", G::X(0, 1), 4)},
  };
  return table;
}

}  // namespace

std::map<CaseId, Edge> handcrafted_fixtures(std::size_t n) {
  std::map<CaseId, Edge> out;
  for (const auto& [id, build] : fixture_table()) {
    auto edge = build(n);
    if (!edge) continue;
    if (classify_case(edge->s, edge->g) != id) {
      throw Error(ErrorCode::InvalidDocument,
                  "fixture for " + std::string(to_string(id)) + " classifies as " +
                      std::string(to_string(classify_case(edge->s, edge->g))));
    }
    out.emplace(id, std::move(*edge));
  }
  return out;
}

std::map<CaseId, Edge> fixture_states(std::size_t n, std::uint64_t seed, const std::set<CaseId>& targets,
                                      std::size_t budget) {
  std::map<CaseId, Edge> out;
  for (auto& [id, edge] : handcrafted_fixtures(n)) {
    if (targets.count(id)) out.emplace(id, std::move(edge));
  }
  if (out.size() < targets.size()) {
    for (auto& edge : sample_edges(n, budget, seed)) {
      const CaseId id = classify_case(edge.s, edge.g);
      if (targets.count(id) && !out.count(id)) out.emplace(id, std::move(edge));
      if (out.size() == targets.size()) break;
    }
  }
  if (out.size() < targets.size()) {
    std::string missing;
    for (const CaseId id : targets) {
      if (!out.count(id)) missing += (missing.empty() ? "" : ", ") + std::string(to_string(id));
    }
    throw Error(ErrorCode::BudgetExhausted, "no witness for " + missing);
  }
  return out;
}

std::vector<CaseId> MainLemmaReport::unwitnessed() const {
  std::vector<CaseId> out;
  for (const CaseId id : all_cases()) {
    const auto it = coverage.find(id);
    if (it == coverage.end() || it->second == 0) out.push_back(id);
  }
  return out;
}

MainLemmaReport run_main_lemma(std::size_t n, std::size_t samples, std::uint64_t seed, unsigned threads) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (auto& [id, edge] : handcrafted_fixtures(n)) {
    labels.push_back("fixture " + std::string(to_string(id)));
    edges.push_back(std::move(edge));
  }
  std::size_t sample_no = 0;
  for (auto& edge : sample_edges(n, samples, seed)) {
    labels.push_back("sample " + std::to_string(sample_no++));
    edges.push_back(std::move(edge));
  }

  struct Outcome {
    std::optional<CaseId> id;
    std::vector<std::string> violations;
  };
  std::vector<Outcome> outcomes(edges.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < edges.size(); i = next++) {
      try {
        const DiagramCompletion dc = complete_diagram(edges[i].s, edges[i].g);
        outcomes[i].id = dc.case_id;
        outcomes[i].violations = verify_completion(edges[i].s, edges[i].g, dc).violations;
      } catch (const Error& e) {
        outcomes[i].violations.push_back(e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  MainLemmaReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.checked = edges.size();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (outcomes[i].id) ++rep.coverage[*outcomes[i].id];
    if (outcomes[i].violations.empty()) continue;
    ++rep.failed;
    for (const auto& v : outcomes[i].violations) rep.failures.push_back(labels[i] + ": " + v);
  }
  return rep;
}

}  // namespace gaussyn
