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

#include "exactreal/cauchy/cauchy.hpp"

namespace exactreal {

namespace {

Rational pow2_neg(std::size_t k) { return Rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(k)); }

}  // namespace

FastCauchyReal tilde(const RationalSequence& p) {
  return FastCauchyReal(RationalSequence([p](std::size_t n) {
    Rational prev = p(0);
    for (std::size_t i = 0; i < n; ++i) {
      Rational next = p(i + 1);
      if ((prev - next).abs() >= pow2_neg(i)) return prev;
      prev = std::move(next);
    }
    return prev;
  }));
}

FastCauchyReal add(const FastCauchyReal& x, const FastCauchyReal& y) {
  return FastCauchyReal(RationalSequence([x, y](std::size_t i) { return x(i + 2) + y(i + 2); }));
}

FastCauchyReal sub(const FastCauchyReal& x, const FastCauchyReal& y) {
  return FastCauchyReal(RationalSequence([x, y](std::size_t i) { return x(i + 2) - y(i + 2); }));
}

FastCauchyReal mul(const FastCauchyReal& x, const FastCauchyReal& y) {
  const std::size_t s = bit_length(x(0).abs().ceil() + y(0).abs().ceil() + 4);
  return FastCauchyReal(RationalSequence([x, y, s](std::size_t i) { return x(i + s) * y(i + s); }));
}

FastCauchyReal reciprocal_bounded(const FastCauchyReal& x, std::size_t n) {
  const Integer m = Integer(static_cast<unsigned long>(n)) + 1;
  const std::size_t s = bit_length(8 * m * m);
  return FastCauchyReal(RationalSequence([x, s](std::size_t i) {
    const Rational v = x(i + s);
    return v.is_zero() ? Rational(0) : v.inverse();
  }));
}

FastCauchyReal embed(const AlgebraicReal& a) {
  return FastCauchyReal(RationalSequence([a](std::size_t i) { return a.approx(static_cast<unsigned>(i)); }));
}

}  // namespace exactreal
