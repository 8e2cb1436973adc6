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

#include <optional>
#include <vector>

#include "exactreal/linalg/spectral.hpp"

namespace exactreal {

/// Simultaneous diagonalization of a symmetric pencil (A, B) with A positive
/// definite: T = L D K satisfies T^T A T = I and T^T B T = diag(mu).
struct PencilDecomposition {
  /// Spectral decomposition of A; its eigenvectors are the columns of L.
  SpectralDecomposition lambda;
  /// Pencil eigenvalues (spectrum of A^-1 B), nondecreasing.
  std::vector<AlgebraicReal> mu;
  /// Columns of T: B t = mu A t, t^T A t = 1, first nonzero coordinate positive.
  std::vector<std::vector<AlgebraicReal>> t;
  /// Field form of each column of T (A-normalized).
  std::vector<FieldEigenpair> t_exact;
  Matrix<AlgebraicReal> L, D;
  /// K = D^-1 L^T T, whose columns are orthonormal eigenvectors of D L^T B L D.
  /// Present only when requested; its entries can have large degree.
  std::optional<Matrix<AlgebraicReal>> K;
  /// The certified symbolic form of T.
  EigenStructure structure;
};

struct PencilOptions {
  bool materialize_k = false;
};

PencilDecomposition pencil_decomposition(const Matrix<AlgebraicReal>& a, const Matrix<AlgebraicReal>& b,
                                         const PencilOptions& opts = {});

/// Positive definiteness by leading principal minors.
bool is_positive_definite(const Matrix<NFElem>& a);

}  // namespace exactreal
