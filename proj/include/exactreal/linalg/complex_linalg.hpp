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

#include <vector>

#include "exactreal/closure/complex.hpp"
#include "exactreal/linalg/matrix.hpp"

namespace exactreal {

/// Unitary eigenbasis of a normal matrix.  Eigenvalues are ordered by (re, im);
/// each eigenvector's first nonzero coordinate is real and positive.
struct ComplexSpectralDecomposition {
  std::vector<AlgebraicComplex> eigenvalues;
  std::vector<std::vector<AlgebraicComplex>> eigenvectors;
};

ComplexSpectralDecomposition spectral_decomposition_normal(const Matrix<AlgebraicComplex>& a);

struct JordanBlock {
  AlgebraicComplex eigenvalue;
  std::size_t size;
};

/// M = C^-1 J C with J block diagonal; blocks ordered by eigenvalue (re, im)
/// and then by size.  The Jordan chains are the columns of C^-1.
struct JordanForm {
  Matrix<AlgebraicComplex> J, C;
  std::vector<JordanBlock> blocks;
};

JordanForm jordan_form(const Matrix<AlgebraicComplex>& m);

/// Conjugate transpose.
template <class F>
Matrix<Complex<F>> adjoint(const Matrix<Complex<F>>& m) {
  return m.transpose().template map<Complex<F>>([](const Complex<F>& z) { return z.conj(); });
}

}  // namespace exactreal
