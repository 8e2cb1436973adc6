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

#include "exactreal/roots/isolate.hpp"

#include "exactreal/core/factor.hpp"

namespace exactreal {

namespace {

int sign_at(const QPoly& p, const Rational& c) { return p(c).sign(); }

struct Isolator {
  const QPoly& q;
  SturmSequence sturm;
  Rational width;
  std::vector<IsolatingInterval> out;

  // (a, b] with precomputed variation counts; emits intervals left to right
  void run(const Rational& a, std::size_t va, const Rational& b, std::size_t vb) {
    const std::size_t count = va - vb;
    if (count == 0) return;
    if (count == 1 && b - a <= width) {
      out.push_back({a, b});
      return;
    }
    const Rational mid = (a + b) / Rational(2);
    if (q(mid).is_zero()) {
      // root exactly at the split point: pinch interval ending at it
      const Rational left = mid - width / Rational(2);
      const std::size_t vl = sturm.variations(left), vm = sturm.variations(mid);
      run(a, va, left, vl);
      out.push_back({left, mid});
      run(mid, vm, b, vb);
      return;
    }
    const std::size_t vm = sturm.variations(mid);
    run(a, va, mid, vm);
    run(mid, vm, b, vb);
  }
};

}  // namespace

QPoly positive_primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  QPoly z = primitive_integer_form(p);
  return p.leading().sign() > 0 ? z : -z;
}

std::size_t sign_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

RootBound root_bound(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rational a(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) a = std::max(a, p[i].abs());
  return {Rational(1) + a / p.leading().abs()};
}

SturmSequence::SturmSequence(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  polys_.push_back(p);
  QPoly d = p.derivative();
  if (d.is_zero()) return;
  polys_.push_back(d);
  for (;;) {
    QPoly r = divmod(polys_[polys_.size() - 2], polys_.back()).second;
    if (r.is_zero()) break;
    polys_.push_back(positive_primitive(-r));
  }
}

std::size_t SturmSequence::variations(const Rational& c) const {
  std::vector<int> s;
  s.reserve(polys_.size());
  for (const auto& q : polys_) s.push_back(sign_at(q, c));
  return sign_variations(s);
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw std::domain_error("sturm count needs a < b");
  return variations(a) - variations(b);
}

std::size_t SturmSequence::count_all() const {
  std::vector<int> lo, hi;
  for (const auto& q : polys_) {
    const int s = q.leading().sign();
    hi.push_back(s);
    lo.push_back(q.deg() % 2 == 0 ? s : -s);
  }
  return sign_variations(lo) - sign_variations(hi);
}

std::size_t sturm_count(const QPoly& p, const Rational& a, const Rational& b) {
  return SturmSequence(p).count(a, b);
}

Rational separation_lower_bound(const QPoly& p) {
  if (p.is_zero() || p.deg() < 2) throw std::domain_error("separation bound needs degree >= 2");
  const QPoly q = primitive_integer_form(square_free_part(p));
  if (q.deg() < 2) throw std::domain_error("separation bound needs at least two distinct roots");
  const std::size_t m = q.deg();
  Rational l1(0);
  for (const auto& c : q.coefficients()) l1 += c.abs();
  const Rational root_d = sqrt_floor_dyadic(discriminant(q).abs(), 16);
  const Rational mm = pow(Rational(static_cast<long>(m)), m + 2);
  return root_d / (mm * pow(l1, m - 1));
}

std::vector<IsolatingInterval> isolate_real_roots(const QPoly& p, const Rational& eps) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  if (eps.sign() <= 0) throw std::domain_error("root isolation needs eps > 0");
  if (p.is_constant()) return {};
  const QPoly q = positive_primitive(square_free_part(p));
  Rational width = eps;
  if (q.deg() >= 2) width = std::min(width, separation_lower_bound(q));
  Isolator iso{q, SturmSequence(q), width, {}};
  const Rational b = root_bound(q).bound;
  iso.run(-b, iso.sturm.variations(-b), b, iso.sturm.variations(b));
  return std::move(iso.out);
}

}  // namespace exactreal
