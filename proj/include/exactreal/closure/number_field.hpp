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

#include <memory>
#include <string>
#include <vector>

#include "exactreal/closure/algebraic_real.hpp"

namespace exactreal {

/// A real number field Q(theta) fixed by the minimal polynomial of theta and
/// the isolating data of theta itself.
class NumberFieldContext {
 public:
  explicit NumberFieldContext(AlgebraicReal theta);

  const QPoly& minpoly() const { return minpoly_; }
  const AlgebraicReal& theta() const { return theta_; }
  std::size_t degree() const { return minpoly_.deg(); }

 private:
  QPoly minpoly_;
  AlgebraicReal theta_;
};

using NFContext = std::shared_ptr<const NumberFieldContext>;

NFContext make_context(const AlgebraicReal& theta);

/// Element of a number field: a rational polynomial in theta reduced modulo
/// the minimal polynomial.  A null context denotes a plain rational, which
/// combines freely with elements of any context.  Mixing two different
/// non-null contexts is a logic error.
class NFElem {
 public:
  NFElem() = default;
  NFElem(int v) : rep_(QPoly::constant(Rational(v))) {}            // NOLINT(google-explicit-constructor)
  NFElem(const Rational& v) : rep_(QPoly::constant(v)) {}          // NOLINT(google-explicit-constructor)
  NFElem(NFContext ctx, QPoly rep);

  static NFElem generator(const NFContext& ctx);

  const NFContext& context() const { return ctx_; }
  const QPoly& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_constant(); }
  /// Throws unless the element is rational.
  Rational rational_value() const;

  int sign() const;
  NFElem inverse() const;
  /// Closed enclosure obtained from theta's enclosure at the given level.
  RInterval enclosure(std::size_t level) const;
  /// Characteristic polynomial over Q of multiplication by this element.
  QPoly char_poly() const;
  AlgebraicReal to_algebraic() const;
  /// Coefficient vector in the power basis, e.g. "[1,-1/2]".
  std::string to_string() const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }
  friend NFElem operator-(const NFElem& a) { return NFElem(a.ctx_, -a.rep_); }
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }

  friend bool operator==(const NFElem& a, const NFElem& b) { return (a - b).is_zero(); }
  friend std::strong_ordering operator<=>(const NFElem& a, const NFElem& b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  NFContext ctx_;
  QPoly rep_;
};

inline bool is_zero(const NFElem& a) { return a.is_zero(); }
inline int sign(const NFElem& a) { return a.sign(); }

/// Context shared by a and b (null when both are rational).
NFContext common_context(const NFElem& a, const NFElem& b);

/// Embeds a rational polynomial coefficientwise.
Poly<NFElem> lift(const QPoly& p);

/// Rational polynomial prod_sigma p^sigma(x) over the conjugates of ctx;
/// its roots contain every root of p.
QPoly norm_poly(const Poly<NFElem>& p, const NFContext& ctx);

/// Monic irreducible factors over ctx (or over Q when ctx is null) of a
/// square-free polynomial whose coefficients lie in ctx.  Norm-based splitting
/// with a shift search over small integers.
std::vector<Poly<NFElem>> factor_over(const Poly<NFElem>& f, const NFContext& ctx);

struct PrimitiveElement {
  AlgebraicReal theta;
  /// gens[i] = exprs[i](theta)
  std::vector<QPoly> exprs;
};

PrimitiveElement primitive_element(const std::vector<AlgebraicReal>& gens);

struct NumberFieldEmbedding {
  NFContext ctx;
  std::vector<NFElem> images;
};

NumberFieldEmbedding as_number_field(const std::vector<AlgebraicReal>& gens);

}  // namespace exactreal
