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
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactreal/core/rational.hpp"

namespace exactreal {

/// Polynomial degree with a dedicated value for the zero polynomial.
///
/// The zero polynomial's degree orders below every natural number and never
/// participates in arithmetic; asking for its numeric value throws.
class Degree {
 public:
  static constexpr Degree of_zero_polynomial() { return Degree(); }
  constexpr explicit Degree(std::size_t d) : value_(d), zero_poly_(false) {}

  constexpr bool is_zero_polynomial() const { return zero_poly_; }
  std::size_t value() const {
    if (zero_poly_) throw std::domain_error("degree of the zero polynomial has no numeric value");
    return value_;
  }

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.zero_poly_ == b.zero_poly_ && (a.zero_poly_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.zero_poly_ || b.zero_poly_) return (!a.zero_poly_) <=> (!b.zero_poly_);
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() = default;
  std::size_t value_ = 0;
  bool zero_poly_ = true;
};

namespace detail {
template <class F>
bool coeff_is_zero(const F& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field F, constant term first.
///
/// F must be default-constructible as zero, constructible from int, and provide
/// + - * / and a free `is_zero(const F&)`.  Trailing zero coefficients are
/// never stored.
template <class F>
class Poly {
 public:
  using value_type = F;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(F c) { return Poly(std::vector<F>{std::move(c)}); }
  static Poly monomial(F c, std::size_t k) {
    std::vector<F> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree::of_zero_polynomial() : Degree(c_.size() - 1); }
  /// Numeric degree; throws for the zero polynomial.
  std::size_t deg() const { return degree().value(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^k (zero beyond the degree).
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(); }
  const F& operator[](std::size_t k) const { return c_.at(k); }
  const F& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  std::size_t size() const { return c_.size(); }
  const std::vector<F>& coefficients() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    std::vector<F> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(-c);
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const F& s) const {
    std::vector<F> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * s);
    return Poly(std::move(v));
  }

  /// Horner evaluation at any type the coefficients multiply into.
  template <class X>
  X eval(const X& x) const {
    X acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
    return acc;
  }
  F operator()(const F& x) const { return eval<F>(x); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * F(static_cast<int>(i));
    return Poly(std::move(v));
  }

  /// Divides by the leading coefficient.
  Poly monic() const {
    if (is_zero()) throw std::domain_error("monic normalization of zero polynomial");
    const F inv = F(1) / leading();
    return scaled(inv);
  }

  /// p(x) -> x^deg p(1/x).
  Poly reversed() const {
    std::vector<F> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!detail::coeff_is_zero(a.c_[i] - b.c_[i])) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
  return p.is_zero();
}

using QPoly = Poly<Rational>;

// ---------------------------------------------------------------------------
// Euclidean-domain operations over a field
// ---------------------------------------------------------------------------

/// Quotient and remainder with p = q*d + r, deg r < deg d.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& p, const Poly<F>& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero polynomial");
  std::vector<F> rem = p.coefficients();
  const std::size_t dd = d.deg();
  if (rem.size() < dd + 1) return {Poly<F>(), p};
  std::vector<F> quot(rem.size() - dd);
  const F inv_lead = F(1) / d.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (is_zero(rem[k])) continue;
    const F q = rem[k] * inv_lead;
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = rem[k - dd + j] - q * d.coefficients()[j];
  }
  rem.resize(dd);
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> operator%(const Poly<F>& p, const Poly<F>& d) {
  return divmod(p, d).second;
}
template <class F>
Poly<F> operator/(const Poly<F>& p, const Poly<F>& d) {
  return divmod(p, d).first;
}

/// Monic gcd over Q computed with primitive pseudo-remainder sequences on
/// integer polynomials, which avoids coefficient blow-up of the field Euclid.
Poly<Rational> gcd(Poly<Rational> a, Poly<Rational> b);

/// Monic greatest common divisor.  Throws if both arguments are zero.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
struct ExtendedGcd {
  Poly<F> g, s, t;
};

template <class F>
ExtendedGcd<F> extended_gcd(const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<F> s2 = s0 - q * s1;
    Poly<F> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const F inv = F(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// p / gcd(p, p'), monic.  Requires deg p >= 1 (characteristic zero).
template <class F>
Poly<F> square_free_part(const Poly<F>& p) {
  if (p.is_zero() || p.is_constant()) {
    throw std::domain_error("square-free part needs a polynomial of positive degree");
  }
  const Poly<F> g = gcd(p, p.derivative());
  return (p / g).monic();
}

/// Yun's square-free decomposition: p = lc * prod_k factors[k-1]^k with each
/// entry monic, square-free and pairwise coprime (entries may be 1).
template <class F>
std::vector<Poly<F>> square_free_decomposition(const Poly<F>& p) {
  if (p.is_zero() || p.is_constant()) return {};
  const Poly<F> dp = p.derivative();
  Poly<F> a = gcd(p, dp);
  Poly<F> b = p / a;
  Poly<F> c = dp / a;
  Poly<F> d = c - b.derivative();
  std::vector<Poly<F>> out;
  while (!(b.is_constant())) {
    Poly<F> g = gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  // drop trailing unit factors
  while (!out.empty() && out.back().is_constant()) out.pop_back();
  return out;
}

/// Coefficient-wise substitution p(x) -> p(x + s).
template <class F>
Poly<F> taylor_shift(const Poly<F>& p, const F& s) {
  std::vector<F> c = p.coefficients();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] = c[j] + s * c[j + 1];
  }
  return Poly<F>(std::move(c));
}

/// p(x) -> p(s*x).
template <class F>
Poly<F> scale_argument(const Poly<F>& p, const F& s) {
  std::vector<F> c = p.coefficients();
  F power(1);
  for (auto& ci : c) {
    ci = ci * power;
    power = power * s;
  }
  return Poly<F>(std::move(c));
}

/// Composition p(q(x)).
template <class F>
Poly<F> compose(const Poly<F>& p, const Poly<F>& q) {
  Poly<F> acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + Poly<F>::constant(p[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

/// Resultant via the Euclidean remainder sequence over a field.
///
/// Agrees with the determinant of the Sylvester matrix built from the actual
/// degrees.  Degenerate cases: res(a, q) = a^deg q for a constant a != 0,
/// symmetric for constant q, res of two nonzero constants is 1, and any zero
/// argument gives 0.
template <class F>
F resultant(Poly<F> p, Poly<F> q) {
  if (p.is_zero() || q.is_zero()) return F();
  F acc(1);
  for (;;) {
    const std::size_t m = p.deg();
    const std::size_t n = q.deg();
    if (n == 0) {
      F r = acc;
      for (std::size_t i = 0; i < m; ++i) r = r * q.leading();
      return r;
    }
    if (m == 0) {
      F r = acc;
      for (std::size_t i = 0; i < n; ++i) r = r * p.leading();
      return r;
    }
    if (m < n) {
      // res(p, q) = (-1)^{mn} res(q, p)
      if ((m * n) % 2 == 1) acc = -acc;
      std::swap(p, q);
      continue;
    }
    // m >= n >= 1: res(p, q) = (-1)^{mn} lc(q)^{m - deg r} res(q, r)
    Poly<F> r = divmod(p, q).second;
    if (r.is_zero()) return F();
    const std::size_t k = r.deg();
    if ((m * n) % 2 == 1) acc = -acc;
    for (std::size_t i = 0; i < m - k; ++i) acc = acc * q.leading();
    p = std::move(q);
    q = std::move(r);
  }
}

/// Sylvester matrix (row-major, size (m+n)^2) for formal degrees m >= deg p, n >= deg q.
template <class F>
std::vector<F> sylvester_matrix(const Poly<F>& p, std::size_t m, const Poly<F>& q, std::size_t n) {
  const std::size_t s = m + n;
  std::vector<F> mat(s * s);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) mat[row * s + row + k] = p.coeff(m - k);
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) mat[(n + row) * s + row + k] = q.coeff(n - k);
  }
  return mat;
}

/// Determinant of a dense square matrix by Gaussian elimination over a field.
template <class F>
F dense_determinant(std::vector<F> a, std::size_t n) {
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv * n + col])) ++piv;
    if (piv == n) return F();
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
      det = -det;
    }
    const F pivot = a[col * n + col];
    det = det * pivot;
    const F inv = F(1) / pivot;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a[r * n + col])) continue;
      const F f = a[r * n + col] * inv;
      for (std::size_t k = col; k < n; ++k) a[r * n + k] = a[r * n + k] - f * a[col * n + k];
    }
  }
  return det;
}

/// det of the Sylvester matrix with explicit formal degrees.
template <class F>
F sylvester_resultant(const Poly<F>& p, std::size_t m, const Poly<F>& q, std::size_t n) {
  if (m == 0 && n == 0) return F(1);
  return dense_determinant(sylvester_matrix(p, m, q, n), m + n);
}

/// Discriminant D(p) with res(p, p') = (-1)^{m(m-1)/2} lc(p) D(p).  Requires deg >= 2.
template <class F>
F discriminant(const Poly<F>& p) {
  if (p.is_zero() || p.deg() < 2) throw std::domain_error("discriminant needs degree >= 2");
  const std::size_t m = p.deg();
  F r = resultant(p, p.derivative()) / p.leading();
  if (((m * (m - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace exactreal
