/*
   Copyright 2026 The exactreal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace exactreal {

using Integer = mpz_class;

/// Raised when a literal or argument is malformed (maps to CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a mathematical precondition fails (maps to CLI exit code 3).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arbitrary-precision fraction kept in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class.  Arithmetic returns Rational rather
/// than GMP expression templates so that generic polynomial and matrix code can
/// use `auto` safely.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}               // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(const Integer& v) : v_(v) {}     // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "[+-]digits[/digits]".  Throws InputError on anything else.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  Integer floor() const;
  Integer ceil() const;

  /// Exact text form: "n" or "n/d".
  std::string to_string() const;
  /// Rounded decimal with `digits` digits after the point.
  std::string to_decimal(int digits) const;
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline int sign(const Rational& r) { return r.sign(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^e as a rational (e may be negative).
Rational pow2(long e);
/// r^e for e >= 0.
Rational pow(const Rational& r, unsigned long e);
/// Number of bits of |n| (0 for n = 0).
std::size_t bit_length(const Integer& n);

/// Largest dyadic q = k/2^bits with q <= sqrt(r), r >= 0.
Rational sqrt_floor_dyadic(const Rational& r, unsigned bits);
/// Smallest dyadic q = k/2^bits with q >= sqrt(r), r >= 0.
Rational sqrt_ceil_dyadic(const Rational& r, unsigned bits);

}  // namespace exactreal
