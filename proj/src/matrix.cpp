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

#include "gaussyn/matrix.hpp"

#include <ostream>
#include <sstream>

#include "gaussyn/error.hpp"

namespace gaussyn {

UMat::UMat(std::size_t n, std::vector<DyadicGauss> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
  }
}

UMat UMat::identity(std::size_t n) {
  UMat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = DyadicGauss(1);
  return m;
}

Column UMat::column(std::size_t c) const {
  Column v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool UMat::is_identity() const { return !pivot_column(*this).has_value(); }

std::ostream& operator<<(std::ostream& os, const UMat& m) {
  os << "[";
  for (std::size_t r = 0; r < m.n(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.n(); ++c) os << (c ? ", " : "") << m(r, c);
  }
  return os << "]";
}

UMat mat_mul(const UMat& a, const UMat& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
  const std::size_t n = a.n();
  UMat out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      DyadicGauss acc;
      for (std::size_t i = 0; i < n; ++i) {
        if (a(r, i).is_zero() || b(i, c).is_zero()) continue;
        acc += a(r, i) * b(i, c);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

UMat mat_dagger(const UMat& a) {
  UMat out(a.n());
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) out(c, r) = a(r, c).conj();
  return out;
}

bool is_unitary(const UMat& a) { return mat_mul(mat_dagger(a), a) == UMat::identity(a.n()); }

UMat one_level(std::size_t n, std::size_t j, const DyadicGauss& z) {
  if (j >= n) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(j) + " >= " + std::to_string(n));
  UMat m = UMat::identity(n);
  m(j, j) = z;
  return m;
}

UMat two_level(std::size_t n, const Block2& u, std::size_t j, std::size_t k) {
  if (j >= n || k >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "indices [" + std::to_string(j) + "," + std::to_string(k) + "] for n=" + std::to_string(n));
  }
  if (j >= k) {
    throw Error(ErrorCode::IndicesNotOrdered, "[" + std::to_string(j) + "," + std::to_string(k) + "]");
  }
  UMat m = UMat::identity(n);
  m(j, j) = u[0];
  m(j, k) = u[1];
  m(k, j) = u[2];
  m(k, k) = u[3];
  return m;
}

std::optional<std::size_t> pivot_column(const UMat& m) {
  const DyadicGauss one(1);
  for (std::size_t c = m.n(); c-- > 0;) {
    for (std::size_t r = 0; r < m.n(); ++r) {
      if (m(r, c) != (r == c ? one : DyadicGauss())) return c;
    }
  }
  return std::nullopt;
}

std::string Level::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
}

std::ostream& operator<<(std::ostream& os, const Level& l) { return os << l.to_string(); }

Level level_unchecked(const UMat& m) {
  const auto p = pivot_column(m);
  if (!p) return {};
  const Column v = m.column(*p);
  const unsigned k = lde_vec(v);
  return {*p, k, odd_indices(v, k).size()};
}

Level level_of(const UMat& m) {
  if (!is_unitary(m)) throw Error(ErrorCode::NotUnitary, "level of a non-unitary matrix");
  return level_unchecked(m);
}

std::vector<std::size_t> odd_indices(std::span<const DyadicGauss> v, unsigned k) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    // gamma^k v_j = num * gamma^(k - lde), odd only when the exponents agree.
    if (v[j].k() == k && v[j].num().is_odd()) out.push_back(j);
  }
  return out;
}

}  // namespace gaussyn
