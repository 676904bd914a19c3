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

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gaussyn {

using Integer = mpz_class;

/// A Gaussian integer a + bi with arbitrary-precision parts.
///
/// Parity is taken with respect to gamma = 1 + i: z is even when gamma
/// divides z, which happens exactly when a + b is even.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(Integer re, Integer im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussInt(long re, long im = 0) : re_(re), im_(im) {}

  const Integer& re() const { return re_; }
  const Integer& im() const { return im_; }

  Integer norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_odd() const;

  GaussInt conj() const { return {re_, -im_}; }

  /// Multiplies by i^e; e may be any integer.
  GaussInt times_i_pow(long e) const;
  /// Multiplies by gamma^m.
  GaussInt times_gamma_pow(unsigned m) const;

  static GaussInt i_pow(long e) { return GaussInt(1).times_i_pow(e); }
  static GaussInt gamma() { return {1, 1}; }

  friend GaussInt operator+(const GaussInt& x, const GaussInt& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussInt operator-(const GaussInt& x, const GaussInt& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  GaussInt operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussInt& x, const GaussInt& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  std::string to_string() const;

 private:
  Integer re_{0};
  Integer im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussInt& z);

bool gi_is_odd(const GaussInt& z);

/// Exact division by gamma. Throws OddArgument when gamma does not divide z.
GaussInt gi_div_gamma(const GaussInt& z);

/// True iff gamma^m divides z.
bool gamma_divides(const GaussInt& z, unsigned m);

/// The e in {0,1,2,3} with z = i^e (mod gamma^3). Requires z odd.
int residue_exponent_gamma3(const GaussInt& z);

/// The q in {0,1} with wj = i^q wl (mod gamma^2). Both arguments must be odd.
int row_exponent(const GaussInt& wj, const GaussInt& wl);

/// The e with i^e z = 1 for a unit z in {1, i, -1, -i}.
int phase_exponent(const GaussInt& z);

/// An element num / gamma^k of Z[1/2, i], always kept canonical: either
/// k == 0 or num is odd. Equality of values is therefore equality of fields.
class DyadicGauss {
 public:
  DyadicGauss() = default;
  DyadicGauss(GaussInt num, unsigned k = 0);
  DyadicGauss(long re) : DyadicGauss(GaussInt(re)) {}

  /// (num) / 2^m, using 1/2^m = i^m / gamma^(2m).
  static DyadicGauss from_pow2(const GaussInt& num, unsigned m);

  const GaussInt& num() const { return num_; }
  unsigned k() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  /// gamma^target * value as a Gaussian integer; requires target >= k().
  GaussInt scaled(unsigned target) const;

  DyadicGauss conj() const;
  /// Multiplication by a unit i^e keeps the canonical exponent.
  DyadicGauss times_i_pow(long e) const;
  DyadicGauss div_gamma() const { return DyadicGauss(num_, k_ + 1); }

  friend DyadicGauss operator+(const DyadicGauss& x, const DyadicGauss& y);
  friend DyadicGauss operator-(const DyadicGauss& x, const DyadicGauss& y);
  friend DyadicGauss operator*(const DyadicGauss& x, const DyadicGauss& y);
  DyadicGauss operator-() const;
  DyadicGauss& operator+=(const DyadicGauss& y) { return *this = *this + y; }

  friend bool operator==(const DyadicGauss& x, const DyadicGauss& y) {
    return x.k_ == y.k_ && x.num_ == y.num_;
  }

  std::string to_string() const;

 private:
  GaussInt num_;
  unsigned k_ = 0;
};

std::ostream& operator<<(std::ostream& os, const DyadicGauss& t);

DyadicGauss di_canonical(const GaussInt& num, unsigned k);
inline DyadicGauss di_add(const DyadicGauss& x, const DyadicGauss& y) { return x + y; }
inline DyadicGauss di_mul(const DyadicGauss& x, const DyadicGauss& y) { return x * y; }
inline DyadicGauss di_neg(const DyadicGauss& x) { return -x; }
inline DyadicGauss di_conj(const DyadicGauss& x) { return x.conj(); }

inline unsigned lde(const DyadicGauss& t) { return t.k(); }
unsigned lde_vec(std::span<const DyadicGauss> v);

}  // namespace gaussyn
