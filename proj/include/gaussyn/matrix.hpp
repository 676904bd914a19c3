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
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaussyn/ring.hpp"

namespace gaussyn {

using Column = std::vector<DyadicGauss>;

/// Dense n x n matrix over Z[1/2, i], row-major, indices from zero.
/// Unitarity is not an invariant of the type; check it with is_unitary().
class UMat {
 public:
  UMat() = default;
  explicit UMat(std::size_t n) : n_(n), entries_(n * n) {}
  UMat(std::size_t n, std::vector<DyadicGauss> entries);

  static UMat identity(std::size_t n);

  std::size_t n() const { return n_; }

  const DyadicGauss& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  DyadicGauss& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

  std::span<const DyadicGauss> entries() const { return entries_; }

  Column column(std::size_t c) const;
  bool is_identity() const;

  friend bool operator==(const UMat&, const UMat&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<DyadicGauss> entries_;
};

std::ostream& operator<<(std::ostream& os, const UMat& m);

inline UMat mat_identity(std::size_t n) { return UMat::identity(n); }
UMat mat_mul(const UMat& a, const UMat& b);
UMat mat_dagger(const UMat& a);
bool is_unitary(const UMat& a);

using Block2 = std::array<DyadicGauss, 4>;  // [[a, b], [c, d]] row-major

UMat one_level(std::size_t n, std::size_t j, const DyadicGauss& z);
UMat two_level(std::size_t n, const Block2& u, std::size_t j, std::size_t k);

/// Greatest p with M e_p != e_p, or nullopt for the identity.
std::optional<std::size_t> pivot_column(const UMat& m);

/// Level (p, k, m): pivot index, lde of the pivot column v, and the number of
/// odd entries of gamma^k v. Compared lexicographically; the identity is (0,0,0).
struct Level {
  std::size_t p = 0;
  unsigned k = 0;
  std::size_t m = 0;

  friend auto operator<=>(const Level&, const Level&) = default;
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Level& l);

/// Throws NotUnitary if m is not unitary.
Level level_of(const UMat& m);
/// As level_of without the O(n^3) unitarity check.
Level level_unchecked(const UMat& m);

/// Ascending indices j with gamma^k v_j odd.
std::vector<std::size_t> odd_indices(std::span<const DyadicGauss> v, unsigned k);

}  // namespace gaussyn
