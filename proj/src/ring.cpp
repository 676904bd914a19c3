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

#include "gaussyn/ring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "gaussyn/error.hpp"

namespace gaussyn {

namespace {

bool is_even_integer(const Integer& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

long mod4(long e) { return ((e % 4) + 4) % 4; }

}  // namespace

bool GaussInt::is_odd() const {
  // a + b odd  <=>  exactly one of a, b odd.
  return is_even_integer(re_) != is_even_integer(im_);
}

GaussInt GaussInt::times_i_pow(long e) const {
  switch (mod4(e)) {
    case 0:
      return *this;
    case 1:
      return {-im_, re_};
    case 2:
      return {-re_, -im_};
    default:
      return {im_, -re_};
  }
}

GaussInt GaussInt::times_gamma_pow(unsigned m) const {
  // gamma^2 = 2i
  GaussInt out = times_i_pow(static_cast<long>(m / 2));
  if (m / 2 > 0) {
    Integer a = out.re_, b = out.im_;
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), m / 2);
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), m / 2);
    out = GaussInt(a, b);
  }
  if (m % 2 == 1) out = out * GaussInt::gamma();
  return out;
}

std::string GaussInt::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
  if (z.im() == 0) return os << z.re().get_str();
  if (z.re() == 0) return os << z.im().get_str() << "i";
  os << z.re().get_str();
  if (z.im() > 0) os << "+";
  return os << z.im().get_str() << "i";
}

bool gi_is_odd(const GaussInt& z) { return z.is_odd(); }

GaussInt gi_div_gamma(const GaussInt& z) {
  if (z.is_odd()) throw Error(ErrorCode::OddArgument, "gamma does not divide " + z.to_string());
  Integer sum = z.re() + z.im();
  Integer diff = z.im() - z.re();
  mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), 2);
  mpz_divexact_ui(diff.get_mpz_t(), diff.get_mpz_t(), 2);
  return {sum, diff};
}

bool gamma_divides(const GaussInt& z, unsigned m) {
  GaussInt cur = z;
  for (unsigned i = 0; i < m; ++i) {
    if (cur.is_zero()) return true;
    if (cur.is_odd()) return false;
    cur = gi_div_gamma(cur);
  }
  return true;
}

int residue_exponent_gamma3(const GaussInt& z) {
  if (!z.is_odd()) throw Error(ErrorCode::EvenArgument, "residue of even " + z.to_string());
  for (int e = 0; e < 4; ++e) {
    if (gamma_divides(z - GaussInt::i_pow(e), 3)) return e;
  }
  // Unreachable: the odd classes modulo gamma^3 are exactly the four units.
  throw Error(ErrorCode::EvenArgument, "no unit residue for " + z.to_string());
}

int row_exponent(const GaussInt& wj, const GaussInt& wl) {
  if (!wj.is_odd() || !wl.is_odd()) {
    throw Error(ErrorCode::EvenArgument,
                "row exponent needs odd entries, got " + wj.to_string() + ", " + wl.to_string());
  }
  return gamma_divides(wj - wl, 2) ? 0 : 1;
}

int phase_exponent(const GaussInt& z) {
  for (int e = 0; e < 4; ++e) {
    if (z.times_i_pow(e) == GaussInt(1)) return e;
  }
  throw Error(ErrorCode::NotAUnit, z.to_string() + " is not a power of i");
}

DyadicGauss::DyadicGauss(GaussInt num, unsigned k) : num_(std::move(num)), k_(k) {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  // Strip factors of 2 = -i gamma^2 two exponents at a time, then a last gamma.
  while (k_ >= 2 && is_even_integer(num_.re()) && is_even_integer(num_.im())) {
    Integer a = num_.re(), b = num_.im();
    mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), 2);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), 2);
    // x / gamma^2 = x / (2i) = -i (x / 2)
    num_ = GaussInt(a, b).times_i_pow(3);
    k_ -= 2;
  }
  while (k_ > 0 && !num_.is_odd()) {
    num_ = gi_div_gamma(num_);
    --k_;
  }
}

DyadicGauss DyadicGauss::from_pow2(const GaussInt& num, unsigned m) {
  return DyadicGauss(num.times_i_pow(m), 2 * m);
}

GaussInt DyadicGauss::scaled(unsigned target) const {
  if (target < k_) {
    throw Error(ErrorCode::OddArgument,
                "exponent " + std::to_string(target) + " below lde " + std::to_string(k_));
  }
  return num_.times_gamma_pow(target - k_);
}

DyadicGauss DyadicGauss::conj() const {
  // conj(num / gamma^k) = conj(num) / (-i gamma)^k = i^k conj(num) / gamma^k
  return DyadicGauss(num_.conj().times_i_pow(k_), k_);
}

DyadicGauss DyadicGauss::times_i_pow(long e) const {
  DyadicGauss out;
  out.num_ = num_.times_i_pow(e);
  out.k_ = k_;
  return out;
}

DyadicGauss operator+(const DyadicGauss& x, const DyadicGauss& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const unsigned k = std::max(x.k_, y.k_);
  return DyadicGauss(x.scaled(k) + y.scaled(k), k);
}

DyadicGauss operator-(const DyadicGauss& x, const DyadicGauss& y) { return x + (-y); }

DyadicGauss operator*(const DyadicGauss& x, const DyadicGauss& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return DyadicGauss(x.num_ * y.num_, x.k_ + y.k_);
}

DyadicGauss DyadicGauss::operator-() const {
  DyadicGauss out;
  out.num_ = -num_;
  out.k_ = k_;
  return out;
}

std::string DyadicGauss::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DyadicGauss& t) {
  if (t.k() == 0) return os << t.num();
  return os << "(" << t.num() << ")/g^" << t.k();
}

DyadicGauss di_canonical(const GaussInt& num, unsigned k) { return DyadicGauss(num, k); }

unsigned lde_vec(std::span<const DyadicGauss> v) {
  unsigned k = 0;
  for (const auto& t : v) k = std::max(k, t.k());
  return k;
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddArgument: return "OddArgument";
    case ErrorCode::EvenArgument: return "EvenArgument";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IndicesNotOrdered: return "IndicesNotOrdered";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::IdentityMatrix: return "IdentityMatrix";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NoMatchAtPosition: return "NoMatchAtPosition";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NotBasicGenerator: return "NotBasicGenerator";
    case ErrorCode::IdentityState: return "IdentityState";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

}  // namespace gaussyn
