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

#include "exactreal/core/poly.hpp"

namespace exactreal {

namespace {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly primitive(ZPoly p) {
  Integer c;
  for (const auto& x : p) c = gcd(c, x);
  if (c != 0 && c != 1)
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return p;
}

ZPoly to_integer(const Poly<Rational>& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.raw().get_den_mpz_t());
  ZPoly z;
  for (const auto& c : p.coefficients()) z.push_back(c.numerator() * (den / c.denominator()));
  return primitive(std::move(z));
}

// Pseudo-remainder of a by b, then made primitive.
ZPoly prem_primitive(ZPoly a, const ZPoly& b) {
  const Integer& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
    a = primitive(std::move(a));
  }
  return a;
}

}  // namespace

Poly<Rational> gcd(Poly<Rational> a, Poly<Rational> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly x = to_integer(a), y = to_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = prem_primitive(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> c;
  for (const auto& v : x) c.emplace_back(v);
  return Poly<Rational>(std::move(c)).monic();
}

}  // namespace exactreal
