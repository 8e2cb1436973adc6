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
#include <vector>

#include "exactreal/closure/complex.hpp"

namespace exactreal {

struct RealRoot {
  AlgebraicReal value;
  std::size_t multiplicity;
};

struct ComplexRoot {
  AlgebraicComplex value;
  std::size_t multiplicity;
};

/// q1 vanishes at the real part and q2 at the imaginary part of every complex
/// root of r.
struct Annihilators {
  QPoly q1, q2;
};

Annihilators real_imag_annihilators(const QPoly& r);

/// Distinct real roots in increasing order with multiplicities.
std::vector<RealRoot> real_roots_of(const Poly<AlgebraicReal>& p);
/// Same for coefficients in the field ctx (null for Q).
std::vector<RealRoot> real_roots_of(const Poly<NFElem>& p, const NFContext& ctx);

/// Distinct complex roots ordered by (re, im) with multiplicities summing to deg p.
std::vector<ComplexRoot> complex_roots_of(const Poly<AlgebraicComplex>& p);
std::vector<ComplexRoot> complex_roots_of(const Poly<NFComplex>& p, const NFContext& ctx);

/// Lifts all coefficients of p into one number field.
struct LiftedPoly {
  NFContext ctx;
  Poly<NFElem> poly;
};
LiftedPoly lift_to_number_field(const Poly<AlgebraicReal>& p);

}  // namespace exactreal
