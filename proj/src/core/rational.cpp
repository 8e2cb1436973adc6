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

#include "exactreal/core/rational.hpp"

#include <cctype>
#include <ostream>

namespace exactreal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw InputError("rational literal with zero denominator");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero
  mpq_class scaled = abs().v_ * scale;
  Integer q;
  Integer twice_num = scaled.get_num() * 2 + scaled.get_den();
  Integer twice_den = scaled.get_den() * 2;
  mpz_fdiv_q(q.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sign() < 0 && q != 0;
  return negative ? "-" + body : body;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational pow(const Rational& r, unsigned long e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), r.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), r.raw().get_den_mpz_t(), e);
  return Rational(n, d);
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Rational sqrt_floor_dyadic(const Rational& r, unsigned bits) {
  if (r.sign() < 0) throw std::domain_error("square root of negative rational");
  // floor(sqrt(r * 4^bits)) = floor(sqrt(floor(r * 4^bits)))
  Integer scaled = (r * pow2(2L * bits)).floor();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Rational(root) * pow2(-static_cast<long>(bits));
}

Rational sqrt_ceil_dyadic(const Rational& r, unsigned bits) {
  Rational lo = sqrt_floor_dyadic(r, bits);
  if (lo * lo == r) return lo;
  return lo + pow2(-static_cast<long>(bits));
}

}  // namespace exactreal
