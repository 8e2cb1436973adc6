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
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exactreal/closure/interval.hpp"
#include "exactreal/core/poly.hpp"
#include "exactreal/roots/isolate.hpp"

namespace exactreal {

/// Exact real algebraic number.
///
/// Rationals are stored directly.  Irrational values carry their minimal
/// polynomial (monic, irreducible, degree >= 2) and an isolating interval
/// (lo, hi) containing exactly one of its roots.  The interval is refined by
/// deterministic bisection; refinements are cached in a node shared between
/// copies, so copies are cheap and refinement work is reused.
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  AlgebraicReal(int v) : rat_(v) {}                  // NOLINT(google-explicit-constructor)
  AlgebraicReal(const Rational& v) : rat_(v) {}      // NOLINT(google-explicit-constructor)

  /// The (k+1)-st smallest real root of p, or nothing when p is zero or has
  /// at most k distinct real roots.
  static std::optional<AlgebraicReal> from_root_index(const QPoly& p, std::size_t k);
  /// The unique root of p in (lo, hi].  p must have exactly one distinct root there.
  static AlgebraicReal from_isolating(const QPoly& p, const Rational& lo, const Rational& hi);
  /// Builds the value directly from an irreducible monic polynomial and an
  /// interval (lo, hi) containing exactly one of its roots, neither endpoint a root.
  static AlgebraicReal from_irreducible(const QPoly& minpoly, const Rational& lo, const Rational& hi);
  /// All distinct real roots of p in increasing order (p nonzero).
  static std::vector<AlgebraicReal> real_roots(const QPoly& p);

  bool is_rational() const { return node_ == nullptr; }
  /// Throws unless the value is rational.
  const Rational& rational_value() const;
  QPoly minimal_polynomial() const;
  std::size_t degree() const { return minimal_polynomial().deg(); }
  /// Position of the value among the real roots of its minimal polynomial.
  std::size_t root_index() const;

  /// Closed interval containing the value; width at most w0 * 2^-level where
  /// w0 is the construction width.  Points for rationals.
  RInterval enclosure(std::size_t level) const;
  /// Closed enclosure of width <= w (w > 0).
  RInterval enclosure_of_width(const Rational& w) const;

  int sign() const;
  /// |approx(k) - value| <= 2^-k; successive values form a fast Cauchy sequence.
  Rational approx(unsigned k) const;

  /// Exact text: "p/q" or {"poly":[...],"root":k}.
  std::string to_string() const;
  /// Decimal rendering with the given number of fractional digits.
  std::string to_decimal(int digits) const;

  friend AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b);
  friend AlgebraicReal operator-(const AlgebraicReal& a);
  AlgebraicReal& operator+=(const AlgebraicReal& o) { return *this = *this + o; }
  AlgebraicReal& operator-=(const AlgebraicReal& o) { return *this = *this - o; }
  AlgebraicReal& operator*=(const AlgebraicReal& o) { return *this = *this * o; }
  AlgebraicReal& operator/=(const AlgebraicReal& o) { return *this = *this / o; }

  friend std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b); }

 private:
  struct Node;
  explicit AlgebraicReal(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static AlgebraicReal make_node(const QPoly& minpoly, const Rational& lo, const Rational& hi);
  const Node& node() const { return *node_; }

  friend AlgebraicReal invert(const AlgebraicReal& a);
  friend AlgebraicReal shift(const AlgebraicReal& a, const Rational& r);
  friend AlgebraicReal scale(const AlgebraicReal& a, const Rational& r);

  Rational rat_;
  std::shared_ptr<const Node> node_;
};

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);

enum class FieldOp { add, sub, mul };

/// a op b through resultant elimination (with rational fast paths).
AlgebraicReal field_op(const AlgebraicReal& a, const AlgebraicReal& b, FieldOp op);
/// Resultant eliminant res_y(P(x, y), q(y)) whose roots include (root of p) op (root of q).
QPoly eliminant(const QPoly& p, const QPoly& q, FieldOp op);

AlgebraicReal invert(const AlgebraicReal& a);
AlgebraicReal shift(const AlgebraicReal& a, const Rational& r);
AlgebraicReal scale(const AlgebraicReal& a, const Rational& r);
/// Non-negative square root; throws MathError for negative input.
AlgebraicReal sqrt(const AlgebraicReal& a);

inline int sign(const AlgebraicReal& a) { return a.sign(); }
inline bool is_zero(const AlgebraicReal& a) { return a.is_rational() && a.rational_value().is_zero(); }

/// Sign of q evaluated at a.
int sign_of_poly_at(const QPoly& q, const AlgebraicReal& a);
Integer floor(const AlgebraicReal& a);
/// First n terms of the canonical continued fraction, zero-padded after termination.
std::vector<Integer> continued_fraction(const AlgebraicReal& a, std::size_t n);

/// The root of r selected by a shrinking family of closed windows: window(l)
/// must contain the target for every l and its width must tend to zero.
AlgebraicReal locate_root(const QPoly& r, const std::function<RInterval(std::size_t)>& window);

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace exactreal
