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
#include <functional>
#include <memory>

#include "exactreal/closure/algebraic_real.hpp"

namespace exactreal {

/// Total rational sequence given by an immutable program.
class RationalSequence {
 public:
  using Fn = std::function<Rational(std::size_t)>;

  explicit RationalSequence(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}
  static RationalSequence constant(const Rational& c) {
    return RationalSequence([c](std::size_t) { return c; });
  }

  Rational operator()(std::size_t n) const { return (*fn_)(n); }

 private:
  std::shared_ptr<const Fn> fn_;
};

/// Real number named by a fast Cauchy sequence: |q(n) - q(n+1)| < 2^-n.
/// Values are only produced by the retraction and by the operations below,
/// each of which preserves the inequality.
class FastCauchyReal {
 public:
  static FastCauchyReal constant(const Rational& c) { return FastCauchyReal(RationalSequence::constant(c)); }

  Rational operator()(std::size_t n) const { return seq_(n); }
  const RationalSequence& seq() const { return seq_; }

  friend FastCauchyReal tilde(const RationalSequence& p);
  friend FastCauchyReal add(const FastCauchyReal& x, const FastCauchyReal& y);
  friend FastCauchyReal sub(const FastCauchyReal& x, const FastCauchyReal& y);
  friend FastCauchyReal mul(const FastCauchyReal& x, const FastCauchyReal& y);
  friend FastCauchyReal reciprocal_bounded(const FastCauchyReal& x, std::size_t n);
  friend FastCauchyReal embed(const AlgebraicReal& a);

 private:
  explicit FastCauchyReal(RationalSequence s) : seq_(std::move(s)) {}
  RationalSequence seq_;
};

/// p unchanged up to the first index i with |p(i) - p(i+1)| >= 2^-i, then
/// frozen at p(i).
FastCauchyReal tilde(const RationalSequence& p);
/// out(i) = x(i+2) + y(i+2)
FastCauchyReal add(const FastCauchyReal& x, const FastCauchyReal& y);
FastCauchyReal sub(const FastCauchyReal& x, const FastCauchyReal& y);
/// out(i) = x(i+s) y(i+s) with s = bitlen(ceil|x(0)| + ceil|y(0)| + 4).
FastCauchyReal mul(const FastCauchyReal& x, const FastCauchyReal& y);
/// 1 / x under the promise |lim x| >= 1/(n+1), with s = bitlen(8 (n+1)^2).
/// The result is meaningless when the promise is broken.
FastCauchyReal reciprocal_bounded(const FastCauchyReal& x, std::size_t n);
/// seq(i) = approx(a, i)
FastCauchyReal embed(const AlgebraicReal& a);

}  // namespace exactreal
