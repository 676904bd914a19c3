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

#include "gaussyn/words.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <utility>

#include "gaussyn/error.hpp"

namespace gaussyn {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

Generator two_index(GenKind kind, std::size_t j, std::size_t l) {
  if (j >= l) throw Error(ErrorCode::IndicesNotOrdered, pair_str(j, l));
  return {kind, j, l};
}

class TokenParser {
 public:
  TokenParser(std::string_view tok, std::size_t n) : tok_(tok), n_(n) {}

  void parse_into(Word& out) {
    Generator g;
    int repeat = 1;
    if (eat("Kd[")) {
      g = pair(GenKind::K);
      repeat = 7;
    } else if (eat("K[")) {
      g = pair(GenKind::K);
    } else if (eat("X[")) {
      g = pair(GenKind::X);
    } else if (eat("i[")) {
      g = Generator::Phase(index());
    } else {
      fail("unknown generator");
    }
    expect(']');
    std::size_t exponent = 1;
    if (eat("^")) exponent = number();
    if (pos_ != tok_.size()) fail("trailing characters");
    if (g.max_index() >= n_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "'" + std::string(tok_) + "' needs dimension > " + std::to_string(g.max_index()) +
                      ", have " + std::to_string(n_));
    }
    out.insert(out.end(), exponent * repeat, g);
  }

 private:
  bool eat(std::string_view prefix) {
    if (tok_.substr(pos_).starts_with(prefix)) {
      pos_ += prefix.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= tok_.size() || tok_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    std::size_t value = 0;
    const char* first = tok_.data() + pos_;
    const char* last = tok_.data() + tok_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::size_t index() { return number(); }

  Generator pair(GenKind kind) {
    const std::size_t j = index();
    expect(',');
    const std::size_t l = index();
    return two_index(kind, j, l);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError, why + " in token '" + std::string(tok_) + "' at offset " +
                                            std::to_string(pos_));
  }

  std::string_view tok_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Generator Generator::X(std::size_t j, std::size_t l) { return two_index(GenKind::X, j, l); }
Generator Generator::K(std::size_t j, std::size_t l) { return two_index(GenKind::K, j, l); }
Generator Generator::Phase(std::size_t j) { return {GenKind::Phase, j, j}; }

bool Generator::is_basic() const {
  switch (kind) {
    case GenKind::X: return l == j + 1;
    case GenKind::K: return j == 0 && l == 1;
    case GenKind::Phase: return j == 0;
  }
  return false;
}

std::string Generator::to_string() const {
  switch (kind) {
    case GenKind::X: return "X" + pair_str(j, l);
    case GenKind::K: return "K" + pair_str(j, l);
    case GenKind::Phase: return "i[" + std::to_string(j) + "]";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Generator& g) { return os << g.to_string(); }

Word parse_word(std::string_view text, std::size_t n) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    TokenParser(text.substr(i, end - i), n).parse_into(out);
    i = end;
  }
  return out;
}

std::string print_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out += ' ';
    out += w[i].to_string();
    if (run > 1) out += "^" + std::to_string(run);
    i += run;
  }
  return out;
}

void check_indices(const Word& w, std::size_t n) {
  for (const auto& g : w) {
    if (g.max_index() >= n) {
      throw Error(ErrorCode::IndexOutOfRange, g.to_string() + " for n=" + std::to_string(n));
    }
  }
}

UMat generator_matrix(const Generator& g, std::size_t n) {
  switch (g.kind) {
    case GenKind::X:
      return two_level(n, {DyadicGauss(), DyadicGauss(1), DyadicGauss(1), DyadicGauss()}, g.j, g.l);
    case GenKind::K: {
      const DyadicGauss h(GaussInt(1), 1);
      return two_level(n, {h, h, h, -h}, g.j, g.l);
    }
    case GenKind::Phase:
      return one_level(n, g.j, DyadicGauss(GaussInt(0, 1)));
  }
  return UMat::identity(n);
}

void apply_gen_inplace(const Generator& g, UMat& m) {
  if (g.max_index() >= m.n()) {
    throw Error(ErrorCode::IndexOutOfRange, g.to_string() + " for n=" + std::to_string(m.n()));
  }
  const std::size_t n = m.n();
  switch (g.kind) {
    case GenKind::X:
      for (std::size_t c = 0; c < n; ++c) std::swap(m(g.j, c), m(g.l, c));
      break;
    case GenKind::Phase:
      for (std::size_t c = 0; c < n; ++c) m(g.j, c) = m(g.j, c).times_i_pow(1);
      break;
    case GenKind::K:
      // rows (a, b) -> ((a + b) / gamma, (a - b) / gamma)
      for (std::size_t c = 0; c < n; ++c) {
        const DyadicGauss& a = m(g.j, c);
        const DyadicGauss& b = m(g.l, c);
        if (a.is_zero() && b.is_zero()) continue;
        DyadicGauss top = (a + b).div_gamma();
        DyadicGauss bottom = (a - b).div_gamma();
        m(g.j, c) = std::move(top);
        m(g.l, c) = std::move(bottom);
      }
      break;
  }
}

UMat apply_gen(const Generator& g, const UMat& m) {
  UMat out = m;
  apply_gen_inplace(g, out);
  return out;
}

UMat apply_word(const Word& w, const UMat& m) {
  UMat out = m;
  for (auto it = w.rbegin(); it != w.rend(); ++it) apply_gen_inplace(*it, out);
  return out;
}

UMat eval_word(const Word& w, std::size_t n) {
  check_indices(w, n);
  return apply_word(w, UMat::identity(n));
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size() * 7);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const std::size_t copies = it->kind == GenKind::X ? 1 : it->kind == GenKind::Phase ? 3 : 7;
    out.insert(out.end(), copies, *it);
  }
  return out;
}

namespace {

void expand_into(const Generator& g, Word& out) {
  auto conj = [&](const Generator& outer, const Generator& inner) {
    expand_into(outer, out);
    expand_into(inner, out);
    expand_into(outer, out);
  };
  switch (g.kind) {
    case GenKind::Phase:
      if (g.j >= 1) return conj(Generator::X(0, g.j), Generator::Phase(0));
      break;
    case GenKind::K:
      if (g.j > 0) return conj(Generator::X(0, g.j), Generator::K(0, g.l));
      if (g.l > 1) return conj(Generator::X(1, g.l), Generator::K(0, 1));
      break;
    case GenKind::X:
      if (g.l > g.j + 1) return conj(Generator::X(g.j, g.j + 1), Generator::X(g.j + 1, g.l));
      break;
  }
  out.push_back(g);
}

}  // namespace

Word expand_basic(const Word& w) {
  Word out;
  for (const auto& g : w) expand_into(g, out);
  return out;
}

Word power(const Word& w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t length) {
  if (n == 0) throw Error(ErrorCode::IndexOutOfRange, "random word needs n >= 1");
  Word w;
  w.reserve(length);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  while (w.size() < length) {
    const int k = kind(rng);
    if (k == 2 || n < 2) {
      w.push_back(Generator::Phase(idx(rng)));
      continue;
    }
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    w.push_back(k == 0 ? Generator::X(a, b) : Generator::K(a, b));
  }
  return w;
}

Word random_word(std::size_t n, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_word(rng, n, length);
}

}  // namespace gaussyn
