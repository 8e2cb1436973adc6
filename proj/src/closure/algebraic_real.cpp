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

#include "exactreal/closure/algebraic_real.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "exactreal/core/factor.hpp"

namespace exactreal {

namespace {

constexpr std::size_t kMaxLevels = 200000;

QPoly linear_root_poly(const Rational& r) { return QPoly({-r, Rational(1)}); }

Rational root_of_linear(const QPoly& p) { return -p[0] / p[1]; }

}  // namespace

struct AlgebraicReal::Node {
  QPoly minpoly;
  int sign_lo = 0;
  mutable std::mutex mu;
  mutable std::vector<RInterval> levels;

  Node(QPoly p, const Rational& lo, const Rational& hi) : minpoly(std::move(p)) {
    sign_lo = minpoly(lo).sign();
    levels.emplace_back(lo, hi);
  }

  RInterval level(std::size_t j) const {
    std::lock_guard<std::mutex> lock(mu);
    while (levels.size() <= j) {
      const RInterval last = levels.back();
      const Rational m = last.mid();
      if (minpoly(m).sign() == sign_lo) {
        levels.emplace_back(m, last.hi);
      } else {
        levels.emplace_back(last.lo, m);
      }
    }
    return levels[j];
  }
};

AlgebraicReal AlgebraicReal::make_node(const QPoly& minpoly, const Rational& lo, const Rational& hi) {
  return AlgebraicReal(std::make_shared<const Node>(minpoly, lo, hi));
}

AlgebraicReal AlgebraicReal::from_irreducible(const QPoly& minpoly, const Rational& lo, const Rational& hi) {
  const QPoly m = minpoly.monic();
  if (m.deg() == 1) return AlgebraicReal(root_of_linear(m));
  return make_node(m, lo, hi);
}

AlgebraicReal AlgebraicReal::from_isolating(const QPoly& p, const Rational& lo, const Rational& hi) {
  const QPoly q = square_free_part(p);
  if (q.deg() == 1) return AlgebraicReal(root_of_linear(q));
  for (const auto& f : irreducible_factors(q)) {
    if (sturm_count(f, lo, hi) != 1) continue;
    if (f.deg() == 1) return AlgebraicReal(root_of_linear(f));
    return make_node(f, lo, hi);
  }
  throw std::logic_error("interval does not isolate a root of the polynomial");
}

std::vector<AlgebraicReal> AlgebraicReal::real_roots(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("real roots of the zero polynomial");
  std::vector<AlgebraicReal> out;
  if (p.is_constant()) return out;
  for (const auto& f : irreducible_factors(square_free_part(p))) {
    if (f.deg() == 1) {
      out.emplace_back(root_of_linear(f));
      continue;
    }
    for (const auto& iv : isolate_real_roots(f, Rational(1))) out.push_back(make_node(f, iv.lo, iv.hi));
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return a < b; });
  return out;
}

std::optional<AlgebraicReal> AlgebraicReal::from_root_index(const QPoly& p, std::size_t k) {
  if (p.is_zero() || p.is_constant()) return std::nullopt;
  auto roots = real_roots(p);
  if (k >= roots.size()) return std::nullopt;
  return roots[k];
}

const Rational& AlgebraicReal::rational_value() const {
  if (node_) throw std::logic_error("algebraic number is not rational");
  return rat_;
}

QPoly AlgebraicReal::minimal_polynomial() const {
  if (!node_) return linear_root_poly(rat_);
  return node_->minpoly;
}

std::size_t AlgebraicReal::root_index() const {
  if (!node_) return 0;
  const QPoly& p = node_->minpoly;
  const RInterval base = node_->level(0);
  const Rational b = root_bound(p).bound;
  if (base.lo <= -b) return 0;
  return sturm_count(p, -b, base.lo);
}

RInterval AlgebraicReal::enclosure(std::size_t level) const {
  if (!node_) return RInterval(rat_);
  return node_->level(level);
}

RInterval AlgebraicReal::enclosure_of_width(const Rational& w) const {
  if (!node_) return RInterval(rat_);
  Rational width = node_->level(0).width();
  std::size_t j = 0;
  while (width > w) {
    width /= Rational(2);
    ++j;
  }
  return node_->level(j);
}

int AlgebraicReal::sign() const {
  if (!node_) return rat_.sign();
  for (std::size_t j = 0; j < kMaxLevels; ++j) {
    const int s = node_->level(j).strict_sign();
    if (s != 0) return s;
  }
  throw std::logic_error("sign refinement did not terminate");
}

Rational AlgebraicReal::approx(unsigned k) const {
  if (!node_) return rat_;
  return enclosure_of_width(pow2(-static_cast<long>(k))).mid();
}

std::string AlgebraicReal::to_string() const {
  if (!node_) return rat_.to_string();
  std::ostringstream os;
  os << "{\"poly\":[";
  const QPoly& p = node_->minpoly;
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].to_string();
  os << "],\"root\":" << root_index() << "}";
  return os.str();
}

std::string AlgebraicReal::to_decimal(int digits) const {
  // 10^-digits / 4 > 2^-(3.33 digits + 3)
  const unsigned k = static_cast<unsigned>(digits < 0 ? 0 : digits) * 4U + 3U;
  return approx(k).to_decimal(digits);
}

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  const auto from_sign = [](int s) {
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  };
  if (a.is_rational() && b.is_rational()) return a.rat_ <=> b.rat_;
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (b.is_rational() || a.is_rational()) {
    const bool flip = a.is_rational();
    const AlgebraicReal& x = flip ? b : a;
    const Rational& r = flip ? a.rat_ : b.rat_;
    for (std::size_t j = 0; j < kMaxLevels; ++j) {
      const RInterval e = x.enclosure(j);
      if (r < e.lo) return from_sign(flip ? -1 : 1);
      if (r > e.hi) return from_sign(flip ? 1 : -1);
    }
    throw std::logic_error("comparison refinement did not terminate");
  }
  if (a.node_->minpoly == b.node_->minpoly) {
    const RInterval ia = a.enclosure(0), ib = b.enclosure(0);
    const Rational lo = std::max(ia.lo, ib.lo), hi = std::min(ia.hi, ib.hi);
    if (lo < hi && sturm_count(a.node_->minpoly, lo, hi) == 1) return std::strong_ordering::equal;
  }
  for (std::size_t j = 0; j < kMaxLevels; ++j) {
    const RInterval ea = a.enclosure(j), eb = b.enclosure(j);
    if (ea.hi < eb.lo) return std::strong_ordering::less;
    if (eb.hi < ea.lo) return std::strong_ordering::greater;
  }
  throw std::logic_error("comparison refinement did not terminate");
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> c = ys;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - k]);
  }
  QPoly p;
  for (std::size_t i = n; i-- > 0;) p = p * QPoly({-xs[i], Rational(1)}) + QPoly::constant(c[i]);
  return p;
}

QPoly eliminant(const QPoly& p, const QPoly& q, FieldOp op) {
  const std::size_t m = p.deg(), n = q.deg();
  const std::size_t points = m * n + 1;
  std::vector<Rational> xs, ys;
  xs.reserve(points);
  ys.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const Rational x0(static_cast<long>(i));
    QPoly px;
    switch (op) {
      case FieldOp::add:
        px = compose(p, QPoly({x0, Rational(-1)}));
        break;
      case FieldOp::sub:
        px = compose(p, QPoly({x0, Rational(1)}));
        break;
      case FieldOp::mul: {
        // y^m p(x0 / y) = sum_i p_i x0^i y^(m-i)
        std::vector<Rational> c(m + 1);
        Rational power(1);
        for (std::size_t k = 0; k <= m; ++k) {
          c[m - k] = p[k] * power;
          power *= x0;
        }
        px = QPoly(std::move(c));
        break;
      }
    }
    xs.push_back(x0);
    ys.push_back(resultant(px, q));
  }
  return interpolate(xs, ys);
}

AlgebraicReal locate_root(const QPoly& r, const std::function<RInterval(std::size_t)>& window) {
  if (r.is_zero() || r.is_constant()) throw std::logic_error("locate_root needs a polynomial of positive degree");
  const QPoly q = positive_primitive(square_free_part(r));
  if (q.deg() == 1) return AlgebraicReal(root_of_linear(q));
  const SturmSequence sturm(q);
  for (std::size_t l = 0; l < kMaxLevels; ++l) {
    const RInterval w = window(l);
    const Rational width = w.width();
    if (width.is_zero()) {
      if (!q(w.lo).is_zero()) throw std::logic_error("point window is not a root");
      return AlgebraicReal(w.lo);
    }
    const Rational lo = w.lo - width;
    if (sturm.count(lo, w.hi) == 1) return AlgebraicReal::from_isolating(q, lo, w.hi);
  }
  throw std::logic_error("root location did not terminate");
}

AlgebraicReal shift(const AlgebraicReal& a, const Rational& r) {
  if (a.is_rational()) return AlgebraicReal(a.rat_ + r);
  if (r.is_zero()) return a;
  const RInterval e = a.enclosure(0);
  return AlgebraicReal::make_node(taylor_shift(a.node_->minpoly, -r), e.lo + r, e.hi + r);
}

AlgebraicReal scale(const AlgebraicReal& a, const Rational& r) {
  if (a.is_rational()) return AlgebraicReal(a.rat_ * r);
  if (r.is_zero()) return AlgebraicReal(0);
  const RInterval e = a.enclosure(0);
  const QPoly p = scale_argument(a.node_->minpoly, r.inverse()).monic();
  if (r.sign() > 0) return AlgebraicReal::make_node(p, e.lo * r, e.hi * r);
  return AlgebraicReal::make_node(p, e.hi * r, e.lo * r);
}

AlgebraicReal operator-(const AlgebraicReal& a) { return scale(a, Rational(-1)); }

AlgebraicReal field_op(const AlgebraicReal& a, const AlgebraicReal& b, FieldOp op) {
  if (b.is_rational()) {
    const Rational& r = b.rational_value();
    switch (op) {
      case FieldOp::add: return shift(a, r);
      case FieldOp::sub: return shift(a, -r);
      case FieldOp::mul: return scale(a, r);
    }
  }
  if (a.is_rational()) {
    const Rational& r = a.rational_value();
    switch (op) {
      case FieldOp::add: return shift(b, r);
      case FieldOp::sub: return shift(-b, r);
      case FieldOp::mul: return scale(b, r);
    }
  }
  if (op == FieldOp::sub && a == b) return AlgebraicReal(0);
  const QPoly r = eliminant(a.minimal_polynomial(), b.minimal_polynomial(), op);
  return locate_root(r, [&](std::size_t l) {
    const RInterval ea = a.enclosure(l), eb = b.enclosure(l);
    switch (op) {
      case FieldOp::add: return ea + eb;
      case FieldOp::sub: return ea - eb;
      case FieldOp::mul: break;
    }
    return ea * eb;
  });
}

AlgebraicReal operator+(const AlgebraicReal& a, const AlgebraicReal& b) { return field_op(a, b, FieldOp::add); }
AlgebraicReal operator-(const AlgebraicReal& a, const AlgebraicReal& b) { return field_op(a, b, FieldOp::sub); }
AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) { return field_op(a, b, FieldOp::mul); }
AlgebraicReal operator/(const AlgebraicReal& a, const AlgebraicReal& b) { return a * invert(b); }

AlgebraicReal invert(const AlgebraicReal& a) {
  if (a.is_rational()) {
    if (a.rat_.is_zero()) throw MathError("inverse of zero");
    return AlgebraicReal(a.rat_.inverse());
  }
  const QPoly p = a.node_->minpoly.reversed().monic();
  for (std::size_t j = 0; j < kMaxLevels; ++j) {
    const RInterval e = a.enclosure(j);
    if (e.strict_sign() != 0) return AlgebraicReal::make_node(p, e.hi.inverse(), e.lo.inverse());
  }
  throw std::logic_error("inverse refinement did not terminate");
}

AlgebraicReal sqrt(const AlgebraicReal& a) {
  const int s = a.sign();
  if (s < 0) throw MathError("square root of a negative number");
  if (s == 0) return AlgebraicReal(0);
  if (a.is_rational()) {
    const Rational& r = a.rational_value();
    Integer n = r.numerator(), d = r.denominator(), rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (rn * rn == n && rd * rd == d) return AlgebraicReal(Rational(rn, rd));
    return AlgebraicReal::from_irreducible(QPoly({-r, Rational(0), Rational(1)}), Rational(0),
                                           std::max(r, Rational(1)) + Rational(1));
  }
  std::size_t base = 0;
  while (a.enclosure(base).lo.sign() <= 0) ++base;
  const QPoly p = compose(a.minimal_polynomial(), QPoly({Rational(0), Rational(0), Rational(1)}));
  return locate_root(p, [&](std::size_t l) {
    const RInterval e = a.enclosure(base + l);
    const unsigned bits = static_cast<unsigned>(l) + 4;
    return RInterval(sqrt_floor_dyadic(e.lo, bits), sqrt_ceil_dyadic(e.hi, bits));
  });
}

int sign_of_poly_at(const QPoly& q, const AlgebraicReal& a) {
  if (q.is_zero()) return 0;
  if (a.is_rational()) return q(a.rational_value()).sign();
  if ((q % a.minimal_polynomial()).is_zero()) return 0;
  for (std::size_t j = 0; j < kMaxLevels; ++j) {
    const int s = eval_interval(q, a.enclosure(j)).strict_sign();
    if (s != 0) return s;
  }
  throw std::logic_error("sign refinement did not terminate");
}

Integer floor(const AlgebraicReal& a) {
  if (a.is_rational()) return a.rational_value().floor();
  for (std::size_t j = 0; j < kMaxLevels; ++j) {
    const RInterval e = a.enclosure(j);
    const Integer f = e.lo.floor();
    if (f == e.hi.floor()) return f;
  }
  throw std::logic_error("floor refinement did not terminate");
}

std::vector<Integer> continued_fraction(const AlgebraicReal& a, std::size_t n) {
  std::vector<Integer> out;
  AlgebraicReal x = a;
  bool done = false;
  while (out.size() < n) {
    if (done) {
      out.emplace_back(0);
      continue;
    }
    const Integer f = floor(x);
    out.push_back(f);
    const AlgebraicReal d = shift(x, -Rational(f));
    if (is_zero(d)) {
      done = true;
    } else {
      x = invert(d);
    }
  }
  return out;
}

}  // namespace exactreal
