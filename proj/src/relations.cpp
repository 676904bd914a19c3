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

#include "gaussyn/relations.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <thread>
#include <unordered_map>

#include "gaussyn/error.hpp"

namespace gaussyn {

namespace {

/// Parses the template notation used in the schema tables below:
/// space-separated `X[a,b]`, `K[a,b]`, `Kd[a,b]` or `i[a]`, optionally
/// `^digits` or `^q`; `eps` is the empty word. Index names are looked up in
/// the schema's variable list.
class TemplateParser {
 public:
  TemplateParser(const std::vector<std::string>& vars, std::string_view text) : vars_(vars), text_(text) {}

  std::vector<TemplateLetter> parse() {
    std::vector<TemplateLetter> out;
    skip_space();
    if (text_.substr(pos_) == "eps") return out;
    while (pos_ < text_.size()) {
      out.push_back(letter());
      skip_space();
    }
    return out;
  }

 private:
  TemplateLetter letter() {
    TemplateLetter t;
    int multiplier = 1;
    if (eat("Kd[")) {
      t.kind = GenKind::K;
      multiplier = 7;
    } else if (eat("K[")) {
      t.kind = GenKind::K;
    } else if (eat("X[")) {
      t.kind = GenKind::X;
    } else if (eat("i[")) {
      t.kind = GenKind::Phase;
    } else {
      throw Error(ErrorCode::SyntaxError, "bad relation template '" + std::string(text_) + "'");
    }
    t.a = variable();
    t.b = t.a;
    if (t.kind != GenKind::Phase) {
      expect(',');
      t.b = variable();
    }
    expect(']');
    if (eat("^")) {
      if (eat("q")) {
        t.power_is_param = true;
      } else {
        int p = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          p = 10 * p + (text_[pos_++] - '0');
        }
        t.power = p;
      }
    }
    t.power *= multiplier;
    return t;
  }

  std::size_t variable() {
    std::size_t end = pos_;
    while (end < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[end])) || text_[end] == '\'')) {
      ++end;
    }
    const std::string name(text_.substr(pos_, end - pos_));
    pos_ = end;
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw Error(ErrorCode::SyntaxError, "unknown index variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  bool eat(std::string_view s) {
    if (text_.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw Error(ErrorCode::SyntaxError, "bad relation template '" + std::string(text_) + "'");
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  const std::vector<std::string>& vars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct SchemaRow {
  const char* id;
  const char* vars;
  int params;
  const char* lhs;
  const char* rhs;
};

std::vector<RelationSchema> build(std::initializer_list<SchemaRow> rows) {
  std::vector<RelationSchema> out;
  for (const auto& row : rows) {
    RelationSchema s;
    s.id = row.id;
    std::string_view vars = row.vars;
    while (!vars.empty()) {
      const auto space = vars.find(' ');
      s.variables.emplace_back(vars.substr(0, space));
      vars = space == std::string_view::npos ? std::string_view{} : vars.substr(space + 1);
    }
    s.param_count = row.params;
    s.lhs_text = row.lhs;
    s.rhs_text = row.rhs;
    s.lhs = TemplateParser(s.variables, s.lhs_text).parse();
    s.rhs = TemplateParser(s.variables, s.rhs_text).parse();
    out.push_back(std::move(s));
  }
  return out;
}

Word realize(const std::vector<TemplateLetter>& side, const std::vector<std::size_t>& assignment, int param) {
  Word w;
  for (const auto& t : side) {
    const std::size_t a = assignment[t.a];
    const std::size_t b = assignment[t.b];
    Generator g;
    switch (t.kind) {
      case GenKind::X: g = Generator::X(a, b); break;
      case GenKind::K: g = Generator::K(a, b); break;
      case GenKind::Phase: g = Generator::Phase(a); break;
    }
    const int power = t.power_is_param ? param : t.power;
    w.insert(w.end(), static_cast<std::size_t>(power), g);
  }
  return w;
}

bool ordered(const std::vector<TemplateLetter>& side, const std::vector<std::size_t>& assignment) {
  return std::all_of(side.begin(), side.end(), [&](const TemplateLetter& t) {
    return t.kind == GenKind::Phase || assignment[t.a] < assignment[t.b];
  });
}

void assignments(std::size_t n, std::size_t vars, std::vector<std::size_t>& cur, std::vector<bool>& used,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == vars) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    used[v] = true;
    cur.push_back(v);
    assignments(n, vars, cur, used, out);
    cur.pop_back();
    used[v] = false;
  }
}

}  // namespace

const std::vector<RelationSchema>& core_schemas() {
  static const std::vector<RelationSchema> table = build({
      {"R1", "j", 1, "i[j]^4", "eps"},
      {"R2", "j k", 1, "X[j,k]^2", "eps"},
      {"R3", "j k", 1, "K[j,k]^8", "eps"},
      {"R4", "j k", 1, "i[j] i[k]", "i[k] i[j]"},
      {"R5", "j k l", 1, "i[j] X[k,l]", "X[k,l] i[j]"},
      {"R6", "j k l", 1, "i[j] K[k,l]", "K[k,l] i[j]"},
      {"R7", "j k l m", 1, "X[j,k] X[l,m]", "X[l,m] X[j,k]"},
      {"R8", "j k l m", 1, "X[j,k] K[l,m]", "K[l,m] X[j,k]"},
      {"R9", "j k l m", 1, "K[j,k] K[l,m]", "K[l,m] K[j,k]"},
      {"R10", "j k", 1, "i[k] X[j,k]", "X[j,k] i[j]"},
      {"R11", "j k l", 1, "X[k,l] X[j,k]", "X[j,k] X[j,l]"},
      {"R11'", "j k l", 1, "X[j,l] X[k,l]", "X[k,l] X[j,k]"},
      {"R12", "j k l", 1, "K[k,l] X[j,k]", "X[j,k] K[j,l]"},
      {"R12'", "j k l", 1, "K[j,l] X[k,l]", "X[k,l] K[j,k]"},
      {"R13", "j k", 1, "K[j,k] i[k]^2", "X[j,k] K[j,k]"},
      {"R14", "j k", 1, "K[j,k] i[k]^3", "i[k] K[j,k] i[k] K[j,k]"},
      {"R15", "j k", 1, "K[j,k] i[j] i[k]", "i[j] i[k] K[j,k]"},
      {"R16", "j k", 1, "K[j,k]^2 i[j] i[k]", "eps"},
      {"R17", "j k l m", 1, "K[j,k] K[l,m] K[j,l] K[k,m]", "K[j,l] K[k,m] K[j,k] K[l,m]"},
  });
  return table;
}

const std::vector<RelationSchema>& derived_schemas() {
  static const std::vector<RelationSchema> table = build({
      {"D18", "j l", 1, "Kd[j,l] i[j]", "i[j] i[l] X[j,l] Kd[j,l] i[l]"},
      {"D19", "j l", 1, "K[j,l]", "i[j]^3 i[l]^3 Kd[j,l]"},
      {"D20", "j l", 1, "Kd[j,l] i[l] K[j,l]", "i[l]^3 X[j,l] Kd[j,l] i[l]"},
      {"D21", "j k l", 4, "X[j,l] i[j]^q X[k,l]", "X[j,k] X[j,l] i[j]^q"},
      {"D22", "j k l", 4, "X[k,l] i[k]^q X[j,k]", "X[j,k] X[j,l] i[j]^q"},
      {"D23", "j k l", 4, "K[j,l] i[l]^q X[k,l]", "X[k,l] K[j,k] i[k]^q"},
      {"D24", "j l j' l'", 1, "Kd[l,l'] Kd[j,j'] Kd[j',l'] Kd[j,l] X[l,j']",
       "X[l,j'] Kd[l,l'] Kd[j,j'] Kd[j',l'] Kd[j,l]"},
      {"D25", "j l", 1, "Kd[j,l] i[l] X[j,l]", "X[j,l] i[j]^3 i[l] Kd[j,l] i[l]"},
  });
  return table;
}

const std::vector<RelationSchema>& schemas(RelationSet set) {
  return set == RelationSet::Core ? core_schemas() : derived_schemas();
}

const RelationSchema* find_schema(const std::string& id) {
  for (const auto* table : {&core_schemas(), &derived_schemas()}) {
    for (const auto& s : *table) {
      if (s.id == id) return &s;
    }
  }
  return nullptr;
}

std::string RelationInstance::key() const {
  std::string out = schema_id;
  const RelationSchema* schema = find_schema(schema_id);
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    out += " " + (schema ? schema->variables[v] : "x" + std::to_string(v)) + "=" + std::to_string(assignment[v]);
  }
  if (schema && schema->param_count > 1) out += " q=" + std::to_string(param);
  return out;
}

std::vector<RelationInstance> instantiate(std::size_t n, const RelationSchema& schema) {
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> cur;
  std::vector<bool> used(n, false);
  if (schema.variables.size() <= n) assignments(n, schema.variables.size(), cur, used, all);

  std::vector<RelationInstance> out;
  for (const auto& a : all) {
    if (!ordered(schema.lhs, a) || !ordered(schema.rhs, a)) continue;
    for (int q = 0; q < schema.param_count; ++q) {
      out.push_back({schema.id, a, q, realize(schema.lhs, a, q), realize(schema.rhs, a, q), n});
    }
  }
  return out;
}

std::vector<RelationInstance> instantiate(std::size_t n, RelationSet set) {
  std::vector<RelationInstance> out;
  for (const auto& schema : schemas(set)) {
    auto part = instantiate(n, schema);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

SoundnessReport verify_soundness(std::size_t n, RelationSet set, unsigned threads) {
  const auto instances = instantiate(n, set);
  std::vector<char> ok(instances.size(), 0);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, instances.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      ok[i] = eval_word(instances[i].lhs, n) == eval_word(instances[i].rhs, n);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SoundnessReport report;
  report.checked = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (ok[i]) continue;
    ++report.failed;
    report.failures.push_back(instances[i].key());
  }
  return report;
}

std::string RewriteStep::to_string() const {
  return instance.key() + " @" + std::to_string(position) +
         (direction == Direction::LhsToRhs ? " lhs->rhs" : " rhs->lhs");
}

Word rewrite_once(const Word& w, const RewriteStep& step) {
  const Word& src = step.source();
  if (step.position > w.size() || w.size() - step.position < src.size() ||
      !std::equal(src.begin(), src.end(), w.begin() + static_cast<std::ptrdiff_t>(step.position))) {
    throw Error(ErrorCode::NoMatchAtPosition, step.to_string() + " does not match '" + print_word(w) + "'");
  }
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(step.position));
  out.insert(out.end(), step.target().begin(), step.target().end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(step.position + src.size()), w.end());
  return out;
}

Word replay(const Word& w, const std::vector<RewriteStep>& steps) {
  Word cur = w;
  for (const auto& s : steps) cur = rewrite_once(cur, s);
  return cur;
}

namespace {

/// Instances indexed by the first letter of each directed source side, so
/// matching a position only scans sides that can start there.
class RewriteIndex {
 public:
  struct Entry {
    std::size_t instance;
    std::size_t schema_rank;
    Direction direction;
  };

  RewriteIndex(std::size_t n, RelationSet set) : instances_(instantiate(n, set)) {
    std::map<std::string, std::size_t> rank;
    for (const auto& s : schemas(set)) rank.emplace(s.id, rank.size());
    for (std::size_t i = 0; i < instances_.size(); ++i) {
      const std::size_t r = rank.at(instances_[i].schema_id);
      for (const Direction d : {Direction::LhsToRhs, Direction::RhsToLhs}) {
        const Word& src = d == Direction::LhsToRhs ? instances_[i].lhs : instances_[i].rhs;
        if (src.empty()) {
          empty_.push_back({i, r, d});
        } else {
          by_first_[src.front()].push_back({i, r, d});
        }
      }
    }
  }

  const std::vector<RelationInstance>& instances() const { return instances_; }

  /// Matches at pos in (schema, direction, instance) order.
  void matches_at(const Word& w, std::size_t pos, std::vector<Entry>& out) const {
    out.clear();
    out.insert(out.end(), empty_.begin(), empty_.end());
    if (pos < w.size()) {
      const auto it = by_first_.find(w[pos]);
      if (it != by_first_.end()) {
        for (const auto& e : it->second) {
          const Word& src = source(e);
          if (w.size() - pos >= src.size() &&
              std::equal(src.begin(), src.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
            out.push_back(e);
          }
        }
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) {
      if (x.schema_rank != y.schema_rank) return x.schema_rank < y.schema_rank;
      if (x.direction != y.direction) return x.direction < y.direction;
      return x.instance < y.instance;
    });
  }

  const Word& source(const Entry& e) const {
    return e.direction == Direction::LhsToRhs ? instances_[e.instance].lhs : instances_[e.instance].rhs;
  }
  const Word& target(const Entry& e) const {
    return e.direction == Direction::LhsToRhs ? instances_[e.instance].rhs : instances_[e.instance].lhs;
  }

 private:
  std::vector<RelationInstance> instances_;
  std::vector<Entry> empty_;
  std::map<Generator, std::vector<Entry>> by_first_;
};

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size() * 3);
  for (const auto& g : w) {
    key.push_back(static_cast<char>(g.kind));
    key.push_back(static_cast<char>(g.j));
    key.push_back(static_cast<char>(g.l));
  }
  return key;
}

}  // namespace

std::vector<RewriteStep> find_rewrites(const Word& w, std::size_t n, RelationSet set) {
  const RewriteIndex index(n, set);
  std::vector<RewriteStep> out;
  std::vector<RewriteIndex::Entry> hits;
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    index.matches_at(w, pos, hits);
    for (const auto& e : hits) out.push_back({index.instances()[e.instance], pos, e.direction});
  }
  return out;
}

std::optional<std::vector<RewriteStep>> derive(const Word& w, const Word& v, std::size_t n,
                                               const DeriveBudget& budget, RelationSet set) {
  check_indices(w, n);
  check_indices(v, n);
  if (w == v) return std::vector<RewriteStep>{};

  const RewriteIndex index(n, set);
  const std::size_t max_length = budget.max_length ? budget.max_length : std::max(w.size(), v.size()) + 8;

  struct Node {
    Word word;
    std::string parent;  // empty key marks the root only when root == true
    bool root = false;
    std::size_t instance = 0;
    std::size_t position = 0;
    Direction direction = Direction::LhsToRhs;
  };
  struct Side {
    std::unordered_map<std::string, Node> seen;
    std::vector<std::string> frontier;
  };

  Side sides[2];
  for (int s = 0; s < 2; ++s) {
    const Word& start = s == 0 ? w : v;
    const std::string key = word_key(start);
    sides[s].seen.emplace(key, Node{start, {}, true});
    sides[s].frontier.push_back(key);
  }

  // Steps leading from the side's root to `key`, in root-to-key order.
  auto chain = [&](const Side& side, std::string key) {
    std::vector<RewriteStep> steps;
    for (;;) {
      const Node& node = side.seen.at(key);
      if (node.root) break;
      steps.push_back({index.instances()[node.instance], node.position, node.direction});
      key = node.parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  };

  auto join = [&](int side, const std::string& from, const std::string& meet, const RewriteStep& step) {
    std::vector<RewriteStep> fw, bw;
    if (side == 0) {
      fw = chain(sides[0], from);
      fw.push_back(step);
      bw = chain(sides[1], meet);
    } else {
      fw = chain(sides[0], meet);
      bw = chain(sides[1], from);
      bw.push_back(step);
    }
    // bw runs v -> meet; walk it backwards with flipped directions.
    for (auto it = bw.rbegin(); it != bw.rend(); ++it) {
      RewriteStep back = *it;
      back.direction = back.direction == Direction::LhsToRhs ? Direction::RhsToLhs : Direction::LhsToRhs;
      fw.push_back(std::move(back));
    }
    return fw;
  };

  std::size_t expansions = 0;
  std::vector<RewriteIndex::Entry> hits;
  while (!sides[0].frontier.empty() && !sides[1].frontier.empty()) {
    const int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& side = sides[s];
    const Side& other = sides[1 - s];
    std::vector<std::string> next;
    for (const auto& key : side.frontier) {
      if (++expansions > budget.max_steps) {
        throw Error(ErrorCode::BudgetExhausted, "derive: " + std::to_string(budget.max_steps) + " expansions");
      }
      const Word cur = side.seen.at(key).word;
      for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
        index.matches_at(cur, pos, hits);
        for (const auto& e : hits) {
          const Word& src = index.source(e);
          const Word& dst = index.target(e);
          if (cur.size() - src.size() + dst.size() > max_length) continue;
          Word nw(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
          nw.insert(nw.end(), dst.begin(), dst.end());
          nw.insert(nw.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos + src.size()), cur.end());
          std::string nk = word_key(nw);
          if (side.seen.count(nk)) continue;
          const RewriteStep step{index.instances()[e.instance], pos, e.direction};
          if (other.seen.count(nk)) return join(s, key, nk, step);
          if (sides[0].seen.size() + sides[1].seen.size() >= budget.max_queue) {
            throw Error(ErrorCode::BudgetExhausted, "derive: " + std::to_string(budget.max_queue) + " stored words");
          }
          side.seen.emplace(nk, Node{std::move(nw), key, false, e.instance, pos, e.direction});
          next.push_back(std::move(nk));
        }
      }
    }
    side.frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace gaussyn
