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

#include "exactreal/closure/number_field.hpp"

#include <sstream>
#include <stdexcept>

#include "exactreal/core/factor.hpp"

namespace exactreal {

namespace {

constexpr std::size_t kMaxLevels = 200000;

NFElem eval_in(const QPoly& rep, const NFElem& x) {
  NFElem acc;
  for (std::size_t i = rep.size(); i-- > 0;) acc = acc * x + NFElem(rep[i]);
  return acc;
}

// Validity of theta + s*g as a primitive element: gcd over Q(phi) of the minimal
// polynomial of g and p_theta(phi - s*y) must be linear.  On success returns the
// image of g in the new context.
bool try_multiplier(const AlgebraicReal& theta, const AlgebraicReal& g, long s, NFContext& out_ctx,
                    NFElem& g_image) {
  const AlgebraicReal phi = theta + scale(g, Rational(s));
  NFContext ctx = make_context(phi);
  const NFElem gen = NFElem::generator(ctx);
  const Poly<NFElem> q = lift(g.minimal_polynomial());
  const Poly<NFElem> shifted = compose(lift(theta.minimal_polynomial()), Poly<NFElem>({gen, NFElem(Rational(-s))}));
  const Poly<NFElem> h = gcd(q, shifted);
  if (h.deg() != 1) return false;
  out_ctx = ctx;
  g_image = -h[0];
  return true;
}

struct Builder {
  AlgebraicReal theta;
  NFContext ctx;
  std::vector<NFElem> images;
};

Builder build(const std::vector<AlgebraicReal>& gens) {
  if (gens.empty()) throw std::invalid_argument("primitive element of an empty generator list");
  Builder b;
  b.images.resize(gens.size());
  std::size_t first = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_rational()) {
      first = i;
      break;
    }
  }
  if (first == gens.size()) {
    // all rational: theta = sum of generators
    Rational sum(0);
    for (const auto& g : gens) sum += g.rational_value();
    b.theta = AlgebraicReal(sum);
    b.ctx = make_context(b.theta);
    for (std::size_t i = 0; i < gens.size(); ++i) b.images[i] = NFElem(b.ctx, QPoly::constant(gens[i].rational_value()));
    return b;
  }
  b.theta = gens[first];
  b.ctx = make_context(b.theta);
  b.images[first] = NFElem::generator(b.ctx);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i == first) continue;
    const AlgebraicReal& g = gens[i];
    if (g.is_rational()) {
      b.images[i] = NFElem(g.rational_value());
      continue;
    }
    const long limit = static_cast<long>(b.theta.degree() * g.degree()) + 1;
    bool found = false;
    for (long s = 1; s <= limit && !found; ++s) {
      NFContext ctx;
      NFElem g_img;
      if (!try_multiplier(b.theta, g, s, ctx, g_img)) continue;
      const NFElem theta_img = NFElem::generator(ctx) - NFElem(Rational(s)) * g_img;
      for (std::size_t j = 0; j < i; ++j) {
        if (b.images[j].context()) b.images[j] = eval_in(b.images[j].rep(), theta_img);
      }
      b.images[i] = g_img;
      b.theta = ctx->theta();
      b.ctx = ctx;
      found = true;
    }
    if (!found) throw std::logic_error("no valid primitive element multiplier in the bounded range");
  }
  for (auto& img : b.images) img = NFElem(b.ctx, img.rep());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(b.images[i].to_algebraic() == gens[i])) throw std::logic_error("primitive element expression check failed");
  }
  return b;
}

}  // namespace

NumberFieldContext::NumberFieldContext(AlgebraicReal theta)
    : minpoly_(theta.minimal_polynomial()), theta_(std::move(theta)) {}

NFContext make_context(const AlgebraicReal& theta) { return std::make_shared<const NumberFieldContext>(theta); }

NFElem::NFElem(NFContext ctx, QPoly rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {
  if (ctx_ && rep_.size() > ctx_->degree()) rep_ = rep_ % ctx_->minpoly();
}

NFElem NFElem::generator(const NFContext& ctx) { return NFElem(ctx, QPoly::x()); }

Rational NFElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("number field element is not rational");
  return rep_.coeff(0);
}

NFContext common_context(const NFElem& a, const NFElem& b) {
  if (!a.context()) return b.context();
  if (!b.context() || a.context() == b.context()) return a.context();
  throw std::logic_error("arithmetic between different number field contexts");
}

NFElem operator+(const NFElem& a, const NFElem& b) { return NFElem(common_context(a, b), a.rep_ + b.rep_); }
NFElem operator-(const NFElem& a, const NFElem& b) { return NFElem(common_context(a, b), a.rep_ - b.rep_); }
NFElem operator*(const NFElem& a, const NFElem& b) {
  if (a.is_rational() && b.is_rational()) return NFElem(common_context(a, b), QPoly::constant(a.rep_.coeff(0) * b.rep_.coeff(0)));
  return NFElem(common_context(a, b), a.rep_ * b.rep_);
}

RInterval NFElem::enclosure(std::size_t level) const {
  if (is_rational()) return RInterval(rep_.coeff(0));
  return eval_interval(rep_, ctx_->theta().enclosure(level));
}

int NFElem::sign() const {
  if (is_rational()) return rep_.coeff(0).sign();
  for (std::size_t j = 0; j < kMaxLevels; ++j) {
    const int s = enclosure(j).strict_sign();
    if (s != 0) return s;
  }
  throw std::logic_error("sign refinement did not terminate");
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero number field element");
  if (is_rational()) return NFElem(ctx_, QPoly::constant(rep_.coeff(0).inverse()));
  const auto eg = extended_gcd(rep_, ctx_->minpoly());
  return NFElem(ctx_, eg.s);
}

QPoly NFElem::char_poly() const {
  const std::size_t n = ctx_ ? ctx_->degree() : 1;
  if (is_rational()) {
    QPoly out = QPoly::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) out *= QPoly({-rep_.coeff(0), Rational(1)});
    return out;
  }
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational x0(static_cast<long>(i));
    xs.push_back(x0);
    ys.push_back(resultant(ctx_->minpoly(), QPoly::constant(x0) - rep_));
  }
  return interpolate(xs, ys);
}

AlgebraicReal NFElem::to_algebraic() const {
  if (is_rational()) return AlgebraicReal(rep_.coeff(0));
  return locate_root(char_poly(), [this](std::size_t l) { return enclosure(l); });
}

std::string NFElem::to_string() const {
  std::ostringstream os;
  os << "[";
  const std::size_t n = ctx_ ? ctx_->degree() : 1;
  for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << rep_.coeff(i).to_string();
  os << "]";
  return os.str();
}

Poly<NFElem> lift(const QPoly& p) {
  std::vector<NFElem> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return Poly<NFElem>(std::move(v));
}

QPoly norm_poly(const Poly<NFElem>& p, const NFContext& ctx) {
  if (p.is_zero()) return QPoly();
  if (!ctx || ctx->degree() == 1) {
    std::vector<Rational> v;
    for (const auto& c : p.coefficients()) v.push_back(c.rep().coeff(0));
    return QPoly(std::move(v));
  }
  const std::size_t n = ctx->degree();
  const std::size_t points = p.deg() * n + 1;
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i < points; ++i) {
    const Rational x0(static_cast<long>(i));
    QPoly h;
    Rational power(1);
    for (const auto& c : p.coefficients()) {
      h += c.rep().scaled(power);
      power *= x0;
    }
    xs.push_back(x0);
    ys.push_back(resultant(ctx->minpoly(), h));
  }
  return interpolate(xs, ys);
}

std::vector<Poly<NFElem>> factor_over(const Poly<NFElem>& f, const NFContext& ctx) {
  if (f.is_zero() || f.is_constant()) throw std::domain_error("factorization needs a polynomial of positive degree");
  for (const auto& c : f.coefficients()) {
    if (c.context() && c.context() != ctx) throw std::logic_error("coefficient outside the factorization field");
  }
  std::vector<Poly<NFElem>> out;
  if (!ctx || ctx->degree() == 1) {
    for (const auto& g : irreducible_factors(norm_poly(f, ctx))) {
      std::vector<NFElem> v;
      for (const auto& c : g.coefficients()) v.emplace_back(ctx, QPoly::constant(c));
      out.emplace_back(std::move(v));
    }
    return out;
  }
  const Poly<NFElem> fm = f.monic();
  const NFElem theta = NFElem::generator(ctx);
  for (long s = 0;; ++s) {
    const NFElem st = NFElem(Rational(s)) * theta;
    const Poly<NFElem> g = compose(fm, Poly<NFElem>({-st, NFElem(1)}));
    const QPoly nrm = norm_poly(g, ctx);
    if (square_free_part(nrm).deg() != nrm.deg()) continue;
    for (const auto& h : irreducible_factors(nrm)) {
      const Poly<NFElem> part = gcd(lift(h), g);
      if (part.deg() == 0) continue;
      out.push_back(compose(part, Poly<NFElem>({st, NFElem(1)})).monic());
    }
    return out;
  }
}

PrimitiveElement primitive_element(const std::vector<AlgebraicReal>& gens) {
  Builder b = build(gens);
  PrimitiveElement out{b.theta, {}};
  for (const auto& img : b.images) out.exprs.push_back(img.rep());
  return out;
}

NumberFieldEmbedding as_number_field(const std::vector<AlgebraicReal>& gens) {
  Builder b = build(gens);
  return {b.ctx, b.images};
}

}  // namespace exactreal
