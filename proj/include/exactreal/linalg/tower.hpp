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

#include "exactreal/closure/number_field.hpp"

namespace exactreal {

/// Simple extension K[y]/(g) of a number field K by a monic irreducible g.
struct TowerField {
  NFContext ctx;
  Poly<NFElem> modulus;
};

using TowerPtr = std::shared_ptr<const TowerField>;

/// Element of K[y]/(g): a polynomial in y of degree < deg g.  A null field
/// denotes a constant from K.
class TowerElem {
 public:
  TowerElem() = default;
  TowerElem(int v) : rep_(Poly<NFElem>::constant(NFElem(v))) {}     // NOLINT(google-explicit-constructor)
  TowerElem(const NFElem& v) : rep_(Poly<NFElem>::constant(v)) {}   // NOLINT(google-explicit-constructor)
  TowerElem(TowerPtr field, Poly<NFElem> rep) : field_(std::move(field)), rep_(std::move(rep)) {
    if (field_ && rep_.size() > field_->modulus.deg()) rep_ = rep_ % field_->modulus;
  }

  static TowerElem generator(const TowerPtr& f) { return TowerElem(f, Poly<NFElem>::x()); }

  const TowerPtr& field() const { return field_; }
  const Poly<NFElem>& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  TowerElem inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero tower element");
    if (rep_.is_constant()) return TowerElem(field_, Poly<NFElem>::constant(NFElem(1) / rep_[0]));
    return TowerElem(field_, extended_gcd(rep_, field_->modulus).s);
  }

  friend TowerElem operator+(const TowerElem& a, const TowerElem& b) { return TowerElem(common(a, b), a.rep_ + b.rep_); }
  friend TowerElem operator-(const TowerElem& a, const TowerElem& b) { return TowerElem(common(a, b), a.rep_ - b.rep_); }
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b) { return TowerElem(common(a, b), a.rep_ * b.rep_); }
  friend TowerElem operator/(const TowerElem& a, const TowerElem& b) { return a * b.inverse(); }
  friend TowerElem operator-(const TowerElem& a) { return TowerElem(a.field_, -a.rep_); }
  friend bool operator==(const TowerElem& a, const TowerElem& b) { return (a - b).is_zero(); }

 private:
  static TowerPtr common(const TowerElem& a, const TowerElem& b) {
    if (!a.field_) return b.field_;
    if (!b.field_ || a.field_ == b.field_) return a.field_;
    throw std::logic_error("arithmetic between different extension fields");
  }

  TowerPtr field_;
  Poly<NFElem> rep_;
};

inline bool is_zero(const TowerElem& a) { return a.is_zero(); }

}  // namespace exactreal
