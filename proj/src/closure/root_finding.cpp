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

#include "exactreal/closure/root_finding.hpp"

#include <algorithm>
#include <stdexcept>

#include "exactreal/core/factor.hpp"

namespace exactreal {

namespace {

constexpr std::size_t kMaxLevels = 200000;

CInterval enclosure_of(const NFComplex& z, std::size_t level) { return {z.re.enclosure(level), z.im.enclosure(level)}; }

CInterval eval_enclosure(const Poly<NFComplex>& p, const CInterval& x, std::size_t level) {
  CInterval acc{RInterval(Rational(0)), RInterval(Rational(0))};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + enclosure_of(p[i], level);
  return acc;
}

int sign_at(const Poly<NFElem>& q, const Rational& c) { return q.eval<NFElem>(NFElem(c)).sign(); }

template <class T, class Less>
void sort_by_value(std::vector<T>& v, Less less) {
  std::sort(v.begin(), v.end(), [&](const T& a, const T& b) { return less(a.value, b.value); });
}

}  // namespace

std::string to_string(const AlgebraicComplex& z) {
  if (z.is_real()) return z.re.to_string();
  return "{\"re\":" + z.re.to_string() + ",\"im\":" + z.im.to_string() + "}";
}

Annihilators real_imag_annihilators(const QPoly& r) {
  if (r.is_zero()) throw MathError("annihilators of the zero polynomial");
  if (r.is_constant()) return {QPoly::constant(Rational(1)), QPoly::constant(Rational(1))};
  const QPoly s = square_free_part(r);
  // (b_j + b_k) / 2 covers Re(b) = (b + conj b) / 2
  QPoly q1 = scale_argument(eliminant(s, s, FieldOp::add), Rational(2)).monic();
  // b_j - b_k covers 2i Im(b); substitute x -> 2i t and split real and imaginary parts
  const QPoly diff = eliminant(s, s, FieldOp::sub);
  std::vector<Rational> even(diff.size()), odd(diff.size());
  Rational power(1);
  for (std::size_t k = 0; k < diff.size(); ++k) {
    const Rational c = diff[k] * power;
    const bool negate = (k / 2) % 2 == 1;
    (k % 2 == 0 ? even : odd)[k] = negate ? -c : c;
    power *= Rational(2);
  }
  const QPoly re_part(std::move(even)), im_part(std::move(odd));
  QPoly q2;
  if (re_part.is_zero()) {
    q2 = im_part;
  } else if (im_part.is_zero()) {
    q2 = re_part;
  } else {
    q2 = gcd(re_part, im_part);
  }
  return {std::move(q1), q2.monic()};
}

LiftedPoly lift_to_number_field(const Poly<AlgebraicReal>& p) {
  if (p.is_zero()) return {nullptr, Poly<NFElem>()};
  const auto nf = as_number_field(p.coefficients());
  return {nf.ctx, Poly<NFElem>(nf.images)};
}

std::vector<RealRoot> real_roots_of(const Poly<NFElem>& p, const NFContext& ctx) {
  if (p.is_zero()) throw MathError("real roots of the zero polynomial");
  std::vector<RealRoot> out;
  const auto parts = square_free_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Poly<NFElem>& s = parts[k];
    if (s.is_constant()) continue;
    if (s.deg() == 1) {
      out.push_back({(-s[0] / s[1]).to_algebraic(), k + 1});
      continue;
    }
    const QPoly n = positive_primitive(square_free_part(norm_poly(s, ctx)));
    const Rational width = root_bound(n).bound * Rational(2);
    for (const auto& iv : isolate_real_roots(n, width)) {
      if (generic_sturm_count(s, iv.lo, iv.hi, sign_at) == 1) {
        out.push_back({AlgebraicReal::from_isolating(n, iv.lo, iv.hi), k + 1});
      }
    }
  }
  sort_by_value(out, [](const AlgebraicReal& a, const AlgebraicReal& b) { return a < b; });
  return out;
}

std::vector<RealRoot> real_roots_of(const Poly<AlgebraicReal>& p) {
  if (p.is_zero()) throw MathError("real roots of the zero polynomial");
  const LiftedPoly l = lift_to_number_field(p);
  return real_roots_of(l.poly, l.ctx);
}

std::vector<ComplexRoot> complex_roots_of(const Poly<NFComplex>& p, const NFContext& ctx) {
  if (p.is_zero()) throw MathError("complex roots of the zero polynomial");
  std::vector<ComplexRoot> out;
  const auto parts = square_free_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Poly<NFComplex>& s = parts[k];
    if (s.is_constant()) continue;
    if (s.deg() == 1) {
      out.push_back({to_algebraic(-s[0] / s[1]), k + 1});
      continue;
    }
    // s * conj(s) has coefficients in the real field
    std::vector<NFComplex> conj_coeffs;
    for (const auto& c : s.coefficients()) conj_coeffs.push_back(c.conj());
    const Poly<NFComplex> t = s * Poly<NFComplex>(std::move(conj_coeffs));
    std::vector<NFElem> real_coeffs;
    for (const auto& c : t.coefficients()) {
      if (!c.is_real()) throw std::logic_error("s * conj(s) is not real");
      real_coeffs.push_back(c.re);
    }
    const QPoly r = square_free_part(norm_poly(Poly<NFElem>(std::move(real_coeffs)), ctx));
    const Annihilators ann = real_imag_annihilators(r);
    const auto res = AlgebraicReal::real_roots(ann.q1);
    const auto ims = AlgebraicReal::real_roots(ann.q2);
    std::vector<AlgebraicComplex> cands;
    for (const auto& a : res) {
      for (const auto& b : ims) cands.emplace_back(a, b);
    }
    // every root of s is a candidate and s has exactly deg s distinct roots, so
    // excluding candidates whose enclosure of s(z) avoids zero is a complete test
    const std::size_t need = s.deg();
    std::vector<bool> alive(cands.size(), true);
    std::size_t count = cands.size();
    for (std::size_t level = 0; count > need; ++level) {
      if (level >= kMaxLevels) throw std::logic_error("complex root filtering did not terminate");
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!alive[i]) continue;
        const CInterval z{cands[i].re.enclosure(level), cands[i].im.enclosure(level)};
        if (!eval_enclosure(s, z, level).contains_zero()) {
          alive[i] = false;
          --count;
        }
      }
    }
    if (count != need) throw std::logic_error("complex root candidates lost a root");
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (alive[i]) out.push_back({cands[i], k + 1});
    }
  }
  sort_by_value(out, complex_less<AlgebraicReal>);
  return out;
}

std::vector<ComplexRoot> complex_roots_of(const Poly<AlgebraicComplex>& p) {
  if (p.is_zero()) throw MathError("complex roots of the zero polynomial");
  std::vector<AlgebraicReal> gens;
  for (const auto& c : p.coefficients()) {
    gens.push_back(c.re);
    gens.push_back(c.im);
  }
  const auto nf = as_number_field(gens);
  std::vector<NFComplex> coeffs;
  for (std::size_t i = 0; i < p.size(); ++i) coeffs.emplace_back(nf.images[2 * i], nf.images[2 * i + 1]);
  return complex_roots_of(Poly<NFComplex>(std::move(coeffs)), nf.ctx);
}

}  // namespace exactreal
