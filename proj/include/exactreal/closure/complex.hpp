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
#include <string>

#include "exactreal/closure/algebraic_real.hpp"
#include "exactreal/closure/number_field.hpp"

namespace exactreal {

/// a + b*i over an ordered field F that does not contain i.
template <class F>
struct Complex {
  F re, im;

  Complex() = default;
  Complex(int v) : re(v), im(0) {}                                 // NOLINT(google-explicit-constructor)
  Complex(F r, F i = F()) : re(std::move(r)), im(std::move(i)) {}  // NOLINT(google-explicit-constructor)

  static Complex i() { return Complex(F(0), F(1)); }

  Complex conj() const { return Complex(re, -im); }
  /// |z|^2
  F norm() const { return re * re + im * im; }
  bool is_real() const { return is_zero(im); }

  friend Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
  friend Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const F n = b.norm();
    if (is_zero(n)) throw MathError("complex division by zero");
    const Complex c = a * b.conj();
    return Complex(c.re / n, c.im / n);
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class F>
bool is_zero(const Complex<F>& z) {
  return is_zero(z.re) && is_zero(z.im);
}

/// Lexicographic order on (re, im).
template <class F>
bool complex_less(const Complex<F>& a, const Complex<F>& b) {
  if (a.re < b.re) return true;
  if (b.re < a.re) return false;
  return a.im < b.im;
}

using AlgebraicComplex = Complex<AlgebraicReal>;
using NFComplex = Complex<NFElem>;

inline AlgebraicComplex to_algebraic(const NFComplex& z) { return {z.re.to_algebraic(), z.im.to_algebraic()}; }

/// Text "re" for reals, otherwise {"re":..,"im":..} with exact components.
std::string to_string(const AlgebraicComplex& z);

}  // namespace exactreal
