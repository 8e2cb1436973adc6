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

#include "exactreal/closure/algebraic_real.hpp"
#include "exactreal/closure/number_field.hpp"
#include "exactreal/linalg/matrix.hpp"
#include "exactreal/linalg/tower.hpp"

namespace exactreal {

/// Eigenvectors belonging to all roots of one irreducible factor g of the
/// characteristic polynomial, written as vectors over K[y]/(g).  Substituting
/// a root of g for y yields the eigenvectors for that eigenvalue.
struct EigenFamily {
  Poly<NFElem> g;
  TowerPtr field;
  /// Mutually orthogonal (for the family's inner product) eigenvectors w_j(y).
  std::vector<std::vector<TowerElem>> vectors;
  /// Squared norms of vectors[j].
  std::vector<TowerElem> norms;
  /// Real roots of g in increasing order.
  std::vector<AlgebraicReal> roots;
};

/// Symmetric problem P w = y Q w with Q-orthogonal eigenvectors: (A, I) for a
/// symmetric matrix, (B, A) for a pencil.
struct EigenStructure {
  NFContext ctx;
  Matrix<NFElem> p, q;
  std::vector<EigenFamily> families;
};

EigenStructure symmetric_eigen_structure(const Matrix<NFElem>& a, const NFContext& ctx);
EigenStructure pencil_eigen_structure(const Matrix<NFElem>& a, const Matrix<NFElem>& b, const NFContext& ctx);

/// Checks the identities behind the decomposition symbolically over the
/// extension fields: P w = y Q w, orthogonality within and across eigenvalues
/// (including distinct roots of one factor) and the dimension count.  Throws
/// std::logic_error on failure.
void certify_structure(const EigenStructure& s);

/// sum_i lambda_i^power v_i v_i^T over all normalized eigenvectors, computed
/// with traces so no eigenvalue is ever materialized.
Matrix<NFElem> reconstruct(const EigenStructure& s, std::size_t power);

/// One eigenpair written inside a single number field F: the eigenvalue is
/// `lambda` and the normalized eigenvector is sigma * w / sqrt(norm), where
/// norm = w^T Q w and sigma = +-1 makes the first nonzero coordinate positive.
struct FieldEigenpair {
  NFContext field;
  NFElem lambda;
  /// Image of the generator of the coefficient field K in F (zero when K = Q).
  NFElem k_generator;
  std::vector<NFElem> w;
  NFElem norm;
};

struct EigenPair {
  AlgebraicReal value;
  /// Q-normalized, first nonzero coordinate positive.
  std::vector<AlgebraicReal> vector;
  FieldEigenpair exact;
};

/// Normalized eigenpairs ordered by eigenvalue (nondecreasing).
std::vector<EigenPair> materialize(const EigenStructure& s);

struct SpectralDecomposition {
  std::vector<AlgebraicReal> eigenvalues;
  std::vector<std::vector<AlgebraicReal>> eigenvectors;
  /// The same eigenpairs in field form, in the same order.
  std::vector<FieldEigenpair> exact;
};

struct LiftedMatrices {
  NFContext ctx;
  std::vector<Matrix<NFElem>> matrices;
};

/// Places the entries of all matrices into one number field.
LiftedMatrices lift_matrices(const std::vector<Matrix<AlgebraicReal>>& ms);

/// Eigenvalues of a symmetric matrix with multiplicity, nondecreasing.
std::vector<AlgebraicReal> spectrum(const Matrix<AlgebraicReal>& m);
/// Certified orthonormal eigenbasis of a symmetric matrix.
SpectralDecomposition spectral_decomposition(const Matrix<AlgebraicReal>& a);

/// Sum of the conjugates of x over K (trace of K[y]/(g) over K).
NFElem tower_trace(const TowerElem& x, const Poly<NFElem>& g);

}  // namespace exactreal
