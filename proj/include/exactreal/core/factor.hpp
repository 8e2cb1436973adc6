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
#include <utility>
#include <vector>

#include "exactreal/core/poly.hpp"

namespace exactreal {

/// Canonical decomposition p = unit * prod f_i^{e_i} into monic irreducibles over Q.
struct Factorization {
  Rational unit;
  std::vector<std::pair<QPoly, std::size_t>> factors;

  QPoly expand() const;
};

/// Full factorization over Q.  Square-free decomposition first, then each
/// square-free part is split with modular factorization, Hensel lifting and
/// bounded subset recombination.  Factors are sorted by (degree, coefficients).
Factorization factor_rational(const QPoly& p);

/// Monic irreducible factors of a square-free polynomial of positive degree.
std::vector<QPoly> irreducible_factors(const QPoly& square_free);

bool is_irreducible(const QPoly& p);

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of p.  Returned as rationals with unit denominators.
QPoly primitive_integer_form(const QPoly& p);

/// Lexicographic order on (degree, coefficients from the top) used to sort factors.
bool poly_less(const QPoly& a, const QPoly& b);

}  // namespace exactreal
