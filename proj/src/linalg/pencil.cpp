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

#include "exactreal/linalg/pencil.hpp"

#include <stdexcept>

namespace exactreal {

bool is_positive_definite(const Matrix<NFElem>& a) {
  require_square(a);
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    Matrix<NFElem> minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(i, j);
    if (det(minor).sign() <= 0) return false;
  }
  return true;
}

PencilDecomposition pencil_decomposition(const Matrix<AlgebraicReal>& a, const Matrix<AlgebraicReal>& b,
                                         const PencilOptions& opts) {
  require_square(a);
  if (b.rows() != a.rows() || b.cols() != a.cols()) throw InputError("pencil matrices have different shapes");
  if (!a.is_symmetric()) throw MathError("pencil matrix A is not symmetric");
  if (!b.is_symmetric()) throw MathError("pencil matrix B is not symmetric");
  const LiftedMatrices l = lift_matrices({a, b});
  const Matrix<NFElem>& an = l.matrices[0];
  const Matrix<NFElem>& bn = l.matrices[1];
  if (det(an).is_zero()) throw MathError("pencil matrix A is singular");
  if (det(bn).is_zero()) throw MathError("pencil matrix B is singular");
  if (!is_positive_definite(an)) throw MathError("pencil matrix A is not positive definite");

  PencilDecomposition out;
  out.lambda = spectral_decomposition(a);
  out.structure = pencil_eigen_structure(an, bn, l.ctx);
  certify_structure(out.structure);
  const Matrix<NFElem> ainv = inverse(an);
  if (!(reconstruct(out.structure, 0) == ainv)) throw std::logic_error("pencil eigenvectors do not satisfy T T^T = A^-1");
  if (!(reconstruct(out.structure, 1) == ainv * bn * ainv)) {
    throw std::logic_error("pencil eigenvectors do not satisfy T diag(mu) T^T = A^-1 B A^-1");
  }
  for (auto& p : materialize(out.structure)) {
    out.mu.push_back(p.value);
    out.t.push_back(std::move(p.vector));
    out.t_exact.push_back(std::move(p.exact));
  }
  const std::size_t n = a.rows();
  out.L = Matrix<AlgebraicReal>::from_columns(out.lambda.eigenvectors);
  std::vector<AlgebraicReal> d;
  for (const auto& lam : out.lambda.eigenvalues) d.push_back(invert(sqrt(lam)));
  out.D = Matrix<AlgebraicReal>::diagonal(d);
  if (opts.materialize_k) {
    // K = D^-1 L^T T
    Matrix<AlgebraicReal> k(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const AlgebraicReal s = sqrt(out.lambda.eigenvalues[i]);
      for (std::size_t j = 0; j < n; ++j) k(i, j) = s * dot(out.lambda.eigenvectors[i], out.t[j]);
    }
    out.K = std::move(k);
  }
  return out;
}

}  // namespace exactreal
