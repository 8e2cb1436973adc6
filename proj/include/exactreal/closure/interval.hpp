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

#include <algorithm>

#include "exactreal/core/poly.hpp"

namespace exactreal {

/// Closed rational interval [lo, hi] used for enclosures.
struct RInterval {
  Rational lo, hi;

  RInterval() = default;
  RInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit RInterval(const Rational& point) : lo(point), hi(point) {}

  Rational width() const { return hi - lo; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  /// +1 or -1 when the whole interval lies strictly on one side of zero, else 0.
  int strict_sign() const { return lo.sign() > 0 ? 1 : (hi.sign() < 0 ? -1 : 0); }
  Rational mid() const { return (lo + hi) / Rational(2); }
};

inline RInterval operator+(const RInterval& a, const RInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline RInterval operator-(const RInterval& a, const RInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline RInterval operator-(const RInterval& a) { return {-a.hi, -a.lo}; }
inline RInterval operator*(const RInterval& a, const RInterval& b) {
  const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

/// Horner evaluation of a rational polynomial over an interval.
inline RInterval eval_interval(const QPoly& p, const RInterval& x) {
  RInterval acc(Rational(0));
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + RInterval(p[i]);
  return acc;
}

/// Rectangular complex enclosure.
struct CInterval {
  RInterval re, im;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

inline CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
inline CInterval operator*(const CInterval& a, const CInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace exactreal
