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

#include "exactreal/linalg/complex_linalg.hpp"

#include <stdexcept>

#include "exactreal/closure/root_finding.hpp"

namespace exactreal {

namespace {

using CVec = std::vector<NFComplex>;

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

// The matrix and its distinct eigenvalues in one field L(i).
struct EigenLift {
  NFContext ctx;
  Matrix<NFComplex> m;
  std::vector<NFComplex> eigenvalues;
  std::vector<std::size_t> multiplicities;
};

Matrix<NFComplex> images_to_matrix(std::size_t n, const std::vector<NFElem>& images) {
  std::vector<NFComplex> d;
  for (std::size_t k = 0; k < n * n; ++k) d.emplace_back(images[2 * k], images[2 * k + 1]);
  return Matrix<NFComplex>(n, n, std::move(d));
}

EigenLift lift_with_eigenvalues(const Matrix<AlgebraicComplex>& m, bool require_normal) {
  require_square(m);
  const std::size_t n = m.rows();
  std::vector<AlgebraicReal> gens;
  for (const auto& z : m.data()) {
    gens.push_back(z.re);
    gens.push_back(z.im);
  }
  if (gens.empty()) return {};
  const NumberFieldEmbedding k = as_number_field(gens);
  const Matrix<NFComplex> mk = images_to_matrix(n, k.images);
  if (require_normal && !(mk * adjoint(mk) == adjoint(mk) * mk)) throw MathError("matrix is not normal");
  const auto roots = complex_roots_of(char_poly(mk), k.ctx);
  EigenLift out;
  for (const auto& r : roots) {
    gens.push_back(r.value.re);
    gens.push_back(r.value.im);
    out.multiplicities.push_back(r.multiplicity);
  }
  const NumberFieldEmbedding l = as_number_field(gens);
  out.ctx = l.ctx;
  out.m = images_to_matrix(n, l.images);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.eigenvalues.emplace_back(l.images[2 * n * n + 2 * i], l.images[2 * n * n + 2 * i + 1]);
  }
  return out;
}

NFComplex hermitian(const CVec& u, const CVec& v) {
  NFComplex s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s = s + u[i].conj() * v[i];
  return s;
}

Matrix<NFComplex> shifted(const Matrix<NFComplex>& m, const NFComplex& lambda) {
  Matrix<NFComplex> n = m;
  for (std::size_t i = 0; i < m.rows(); ++i) n(i, i) = n(i, i) - lambda;
  return n;
}

}  // namespace

ComplexSpectralDecomposition spectral_decomposition_normal(const Matrix<AlgebraicComplex>& a) {
  require_square(a);
  ComplexSpectralDecomposition out;
  if (a.rows() == 0) return out;
  const EigenLift l = lift_with_eigenvalues(a, true);
  const std::size_t n = a.rows();
  std::vector<CVec> all;
  std::vector<NFComplex> norms;
  for (std::size_t e = 0; e < l.eigenvalues.size(); ++e) {
    const NFComplex& lambda = l.eigenvalues[e];
    const auto basis = nullspace(shifted(l.m, lambda));
    check(basis.size() == l.multiplicities[e], "normal matrix eigenspace dimension differs from the multiplicity");
    const std::size_t first = all.size();
    for (const auto& u : basis) {
      CVec w = u;
      for (std::size_t j = first; j < all.size(); ++j) {
        const NFComplex c = hermitian(all[j], u) / norms[j];
        for (std::size_t i = 0; i < n; ++i) w[i] = w[i] - c * all[j][i];
      }
      const CVec aw = l.m.apply(w);
      for (std::size_t i = 0; i < n; ++i) check(aw[i] == lambda * w[i], "eigenvector equation fails");
      norms.push_back(hermitian(w, w));
      all.push_back(std::move(w));
      // normalize: v = w conj(c1) / sqrt(|c1|^2 N)
      const CVec& v = all.back();
      std::size_t k = 0;
      while (is_zero(v[k])) ++k;
      const NFComplex phase = v[k].conj();
      const AlgebraicReal scale = invert(sqrt((v[k].norm() * norms.back().re).to_algebraic()));
      std::vector<AlgebraicComplex> coords;
      for (const auto& c : v) {
        const AlgebraicComplex z = to_algebraic(c * phase);
        coords.emplace_back(z.re * scale, z.im * scale);
      }
      out.eigenvalues.push_back(to_algebraic(lambda));
      out.eigenvectors.push_back(std::move(coords));
    }
  }
  check(all.size() == n, "normal matrix eigenvector count differs from the dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      check(hermitian(all[i], all[j]) == (i == j ? norms[i] : NFComplex(0)), "eigenvectors are not orthogonal");
  return out;
}

JordanForm jordan_form(const Matrix<AlgebraicComplex>& m) {
  require_square(m);
  JordanForm out;
  const std::size_t n = m.rows();
  if (n == 0) return out;
  const EigenLift l = lift_with_eigenvalues(m, false);
  std::vector<CVec> columns;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (eigenvalue index, size)
  for (std::size_t e = 0; e < l.eigenvalues.size(); ++e) {
    const Matrix<NFComplex> nm = shifted(l.m, l.eigenvalues[e]);
    const std::size_t mult = l.multiplicities[e];
    // ranks of N^k until the generalized eigenspace is reached
    std::vector<Matrix<NFComplex>> powers{Matrix<NFComplex>::identity(n)};
    std::vector<std::size_t> ranks{n};
    while (ranks.back() > n - mult) {
      powers.push_back(nm * powers.back());
      ranks.push_back(rank(powers.back()));
      check(powers.size() <= n + 1, "rank sequence did not stabilize");
    }
    const std::size_t top = ranks.size() - 1;
    auto at_least = [&](std::size_t k) { return k > top ? std::size_t{0} : ranks[k - 1] - ranks[k]; };
    // chains as (top vector, size), found from the longest down
    std::vector<std::pair<CVec, std::size_t>> chains;
    for (std::size_t s = top; s >= 1; --s) {
      const std::size_t needed = at_least(s) - at_least(s + 1);
      std::vector<CVec> span = nullspace(powers[s - 1]);
      for (const auto& [h, size] : chains) {
        CVec v = h;
        for (std::size_t k = 0; k < size - s; ++k) v = nm.apply(v);
        span.push_back(std::move(v));
      }
      std::size_t r = span.empty() ? 0 : rank(Matrix<NFComplex>::from_columns(span));
      std::size_t found = 0;
      for (const auto& h : nullspace(powers[s])) {
        if (found == needed) break;
        span.push_back(h);
        const std::size_t r2 = rank(Matrix<NFComplex>::from_columns(span));
        if (r2 > r) {
          r = r2;
          chains.emplace_back(h, s);
          ++found;
        } else {
          span.pop_back();
        }
      }
      check(found == needed, "Jordan chain construction failed");
    }
    for (auto it = chains.rbegin(); it != chains.rend(); ++it) {
      const auto& [h, size] = *it;
      std::vector<CVec> chain{h};
      for (std::size_t k = 1; k < size; ++k) chain.push_back(nm.apply(chain.back()));
      for (auto c = chain.rbegin(); c != chain.rend(); ++c) columns.push_back(*c);
      blocks.emplace_back(e, size);
    }
  }
  check(columns.size() == n, "Jordan chains do not span the space");
  Matrix<NFComplex> j(n, n);
  std::size_t pos = 0;
  for (const auto& [e, size] : blocks) {
    for (std::size_t k = 0; k < size; ++k) {
      j(pos + k, pos + k) = l.eigenvalues[e];
      if (k + 1 < size) j(pos + k, pos + k + 1) = NFComplex(1);
    }
    pos += size;
    out.blocks.push_back({to_algebraic(l.eigenvalues[e]), size});
  }
  const Matrix<NFComplex> p = Matrix<NFComplex>::from_columns(columns);
  check(l.m * p == p * j, "Jordan chains do not satisfy M P = P J");
  const Matrix<NFComplex> c = inverse(p);
  check(c * l.m == j * c, "Jordan form check C M = J C failed");
  auto conv = [](const NFComplex& z) { return to_algebraic(z); };
  out.J = j.map<AlgebraicComplex>(conv);
  out.C = c.map<AlgebraicComplex>(conv);
  return out;
}

}  // namespace exactreal
