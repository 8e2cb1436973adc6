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

#include <cstddef>
#include <vector>

#include "exactreal/core/poly.hpp"

namespace exactreal {

/// Half-open rational interval (lo, hi].
struct IsolatingInterval {
  Rational lo, hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x <= hi; }
};

/// All real roots of the associated polynomial lie in (-bound, bound).
struct RootBound {
  Rational bound;
};

/// bound = 1 + max|a_i| / |a_m| over the lower coefficients.
RootBound root_bound(const QPoly& p);

/// Signed remainder chain p, p', -rem(p0, p1), ... up to the last nonzero entry.
/// Entries past the first two are rescaled by positive rationals to keep
/// coefficients small; sign patterns are unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& p);

  const std::vector<QPoly>& polys() const { return polys_; }
  /// Number of sign alternations in (p0(c), ..., pk(c)), zeros skipped.
  std::size_t variations(const Rational& c) const;
  /// Number of distinct real roots in (a, b].
  std::size_t count(const Rational& a, const Rational& b) const;
  /// Number of distinct real roots on the whole line.
  std::size_t count_all() const;

 private:
  std::vector<QPoly> polys_;
};

/// Real roots of square-free p in (a, b].  Requires a < b.
std::size_t sturm_count(const QPoly& p, const Rational& a, const Rational& b);

/// Positive rational strictly below the smallest distance between distinct
/// roots of p (after passing to the square-free part).  Requires degree >= 2.
Rational separation_lower_bound(const QPoly& p);

/// Ordered, disjoint intervals of width <= eps, one per distinct real root.
std::vector<IsolatingInterval> isolate_real_roots(const QPoly& p, const Rational& eps);

/// Positive rational multiple of p with primitive integer coefficients.
QPoly positive_primitive(const QPoly& p);

/// Sign alternations in a sequence of signs, zeros skipped.
std::size_t sign_variations(const std::vector<int>& signs);

/// Sturm count over any ordered coefficient field.  `sign_at(poly, c)` must
/// return the exact sign of poly evaluated at the rational point c.
template <class F, class SignAt>
std::size_t generic_sturm_count(const Poly<F>& p, const Rational& a, const Rational& b, SignAt sign_at) {
  if (!(a < b)) throw std::domain_error("sturm count needs a < b");
  std::vector<Poly<F>> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly<F> r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  std::vector<int> sa, sb;
  for (const auto& q : seq) {
    sa.push_back(sign_at(q, a));
    sb.push_back(sign_at(q, b));
  }
  return sign_variations(sa) - sign_variations(sb);
}

}  // namespace exactreal
