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

#include "exactreal/linalg/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "exactreal/closure/root_finding.hpp"

namespace exactreal {

namespace {

using TVec = std::vector<TowerElem>;

Matrix<TowerElem> to_tower(const Matrix<NFElem>& m) {
  return m.map<TowerElem>([](const NFElem& x) { return TowerElem(x); });
}

TowerElem inner(const TVec& u, const Matrix<TowerElem>& q, const TVec& v) { return dot(u, q.apply(v)); }

Poly<TowerElem> as_poly_in_z(const TowerElem& x) {
  std::vector<TowerElem> c;
  for (const auto& a : x.rep().coefficients()) c.emplace_back(a);
  return Poly<TowerElem>(std::move(c));
}

Poly<TowerElem> lift_poly(const Poly<NFElem>& g) {
  std::vector<TowerElem> c;
  for (const auto& a : g.coefficients()) c.emplace_back(a);
  return Poly<TowerElem>(std::move(c));
}

// sum_{k,l} u_k(y) q_kl v_l(z) as a polynomial in z over the field of u
Poly<TowerElem> cross_form(const TVec& u, const Matrix<NFElem>& q, const TVec& v) {
  const std::size_t n = u.size();
  Poly<TowerElem> s;
  for (std::size_t k = 0; k < n; ++k) {
    Poly<TowerElem> qv;
    for (std::size_t l = 0; l < n; ++l) {
      if (q(k, l).is_zero()) continue;
      qv += as_poly_in_z(v[l]).scaled(TowerElem(q(k, l)));
    }
    s += qv.scaled(u[k]);
  }
  return s;
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

EigenStructure build(const Matrix<NFElem>& p, const Matrix<NFElem>& q, const Poly<NFElem>& chi, const NFContext& ctx) {
  EigenStructure s{ctx, p, q, {}};
  const std::size_t n = p.rows();
  const Matrix<TowerElem> qt = to_tower(q);
  const auto parts = square_free_decomposition(chi);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].is_constant()) continue;
    for (auto& g : factor_over(parts[k], ctx)) {
      EigenFamily fam;
      fam.g = g;
      fam.field = std::make_shared<const TowerField>(TowerField{ctx, g});
      const TowerElem y = TowerElem::generator(fam.field);
      Matrix<TowerElem> m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = TowerElem(p(i, j)) - y * TowerElem(q(i, j));
      const auto basis = nullspace(m);
      check(basis.size() == k + 1, "eigenspace dimension differs from the algebraic multiplicity");
      for (const auto& u : basis) {
        TVec w = u;
        for (std::size_t j = 0; j < fam.vectors.size(); ++j) {
          const TowerElem c = inner(fam.vectors[j], qt, u) / fam.norms[j];
          for (std::size_t i = 0; i < n; ++i) w[i] = w[i] - c * fam.vectors[j][i];
        }
        fam.norms.push_back(inner(w, qt, w));
        fam.vectors.push_back(std::move(w));
      }
      for (const auto& r : real_roots_of(g, ctx)) fam.roots.push_back(r.value);
      check(fam.roots.size() == g.deg(), "a symmetric eigenproblem produced a non-real eigenvalue");
      s.families.push_back(std::move(fam));
    }
  }
  return s;
}

}  // namespace

NFElem tower_trace(const TowerElem& x, const Poly<NFElem>& g) {
  const std::size_t d = g.deg();
  // power sums of the roots of monic g by Newton's identities
  std::vector<NFElem> ps(d);
  ps[0] = NFElem(static_cast<int>(d));
  for (std::size_t k = 1; k < d; ++k) {
    NFElem acc = NFElem(static_cast<int>(k)) * g.coeff(d - k);
    for (std::size_t i = 1; i < k; ++i) acc = acc + g.coeff(d - i) * ps[k - i];
    ps[k] = -acc;
  }
  NFElem t;
  for (std::size_t i = 0; i < x.rep().size(); ++i) t = t + x.rep()[i] * ps[i];
  return t;
}

EigenStructure symmetric_eigen_structure(const Matrix<NFElem>& a, const NFContext& ctx) {
  require_square(a);
  if (!a.is_symmetric()) throw MathError("matrix is not symmetric");
  return build(a, Matrix<NFElem>::identity(a.rows()), char_poly(a), ctx);
}

EigenStructure pencil_eigen_structure(const Matrix<NFElem>& a, const Matrix<NFElem>& b, const NFContext& ctx) {
  const Matrix<NFElem> ainv = inverse(a);
  const Poly<NFElem> chi = char_poly(ainv * b);
  // det(mu A - B) = det(A) chi(mu)
  const NFElem da = det(a);
  for (std::size_t k = 0; k <= a.rows(); ++k) {
    const NFElem mu(static_cast<int>(k));
    check(det(mu * a - b) == da * chi.eval<NFElem>(mu), "pencil characteristic polynomial check failed");
  }
  return build(b, a, chi, ctx);
}

void certify_structure(const EigenStructure& s) {
  const std::size_t n = s.p.rows();
  const Matrix<TowerElem> pt = to_tower(s.p), qt = to_tower(s.q);
  std::size_t total = 0;
  for (const auto& fam : s.families) {
    total += fam.g.deg() * fam.vectors.size();
    const TowerElem y = TowerElem::generator(fam.field);
    for (std::size_t i = 0; i < fam.vectors.size(); ++i) {
      const TVec& w = fam.vectors[i];
      const TVec pw = pt.apply(w), qw = qt.apply(w);
      for (std::size_t k = 0; k < n; ++k) check(pw[k] == y * qw[k], "eigenvector equation fails");
      check(!fam.norms[i].is_zero(), "zero eigenvector norm");
      for (std::size_t j = 0; j < fam.vectors.size(); ++j) {
        const TowerElem ip = inner(w, qt, fam.vectors[j]);
        check(ip == (i == j ? fam.norms[i] : TowerElem(0)), "eigenvectors of one eigenvalue are not orthogonal");
      }
    }
    if (fam.g.deg() >= 2) {
      // other roots z of g are the roots of g(z) / (z - y)
      const auto [h, rem] = divmod(lift_poly(fam.g), Poly<TowerElem>({-y, TowerElem(1)}));
      check(rem.is_zero(), "eigenvalue is not a root of its factor");
      for (const auto& u : fam.vectors)
        for (const auto& v : fam.vectors)
          check((cross_form(u, s.q, v) % h).is_zero(), "eigenvectors of conjugate eigenvalues are not orthogonal");
    }
  }
  check(total == n, "eigenvector count differs from the dimension");
  for (std::size_t a = 0; a < s.families.size(); ++a)
    for (std::size_t b = a + 1; b < s.families.size(); ++b) {
      const Poly<TowerElem> gb = lift_poly(s.families[b].g);
      for (const auto& u : s.families[a].vectors)
        for (const auto& v : s.families[b].vectors)
          check((cross_form(u, s.q, v) % gb).is_zero(), "eigenvectors of distinct eigenvalues are not orthogonal");
    }
}

Matrix<NFElem> reconstruct(const EigenStructure& s, std::size_t power) {
  const std::size_t n = s.p.rows();
  Matrix<NFElem> out(n, n);
  for (const auto& fam : s.families) {
    const TowerElem y = TowerElem::generator(fam.field);
    TowerElem yp(1);
    for (std::size_t k = 0; k < power; ++k) yp = yp * y;
    for (std::size_t j = 0; j < fam.vectors.size(); ++j) {
      const TVec& w = fam.vectors[j];
      const TowerElem f = yp / fam.norms[j];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = out(r, c) + tower_trace(f * w[r] * w[c], fam.g);
    }
  }
  return out;
}

std::vector<EigenPair> materialize(const EigenStructure& s) {
  std::vector<EigenPair> out;
  const bool proper = s.ctx && s.ctx->degree() >= 2;
  for (const auto& fam : s.families) {
    for (const auto& lambda : fam.roots) {
      std::vector<AlgebraicReal> gens;
      if (proper) gens.push_back(s.ctx->theta());
      gens.push_back(lambda);
      const NumberFieldEmbedding nf = as_number_field(gens);
      const NFElem lam = nf.images.back();
      auto map_k = [&](const NFElem& x) {
        if (!proper || x.is_rational()) return NFElem(x.rep().coeff(0));
        NFElem acc;
        for (std::size_t i = x.rep().size(); i-- > 0;) acc = acc * nf.images[0] + NFElem(x.rep()[i]);
        return acc;
      };
      auto map_t = [&](const TowerElem& t) {
        NFElem acc;
        for (std::size_t i = t.rep().size(); i-- > 0;) acc = acc * lam + map_k(t.rep()[i]);
        return acc;
      };
      for (std::size_t j = 0; j < fam.vectors.size(); ++j) {
        const NFElem norm = map_t(fam.norms[j]);
        std::vector<NFElem> xs;
        for (const auto& c : fam.vectors[j]) xs.push_back(map_t(c));
        int sigma = 0;
        std::vector<AlgebraicReal> v;
        for (const auto& x : xs) {
          const int sx = x.sign();
          if (sx == 0) {
            v.emplace_back(0);
            continue;
          }
          if (sigma == 0) sigma = sx;
          AlgebraicReal c = sqrt((x * x / norm).to_algebraic());
          v.push_back(sx * sigma > 0 ? c : -c);
        }
        out.push_back({lambda, std::move(v), {nf.ctx, lam, proper ? nf.images[0] : NFElem(0), std::move(xs), norm}});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
  return out;
}

LiftedMatrices lift_matrices(const std::vector<Matrix<AlgebraicReal>>& ms) {
  std::vector<AlgebraicReal> gens;
  for (const auto& m : ms) gens.insert(gens.end(), m.data().begin(), m.data().end());
  LiftedMatrices out;
  if (gens.empty()) {
    for (const auto& m : ms) out.matrices.emplace_back(m.rows(), m.cols());
    return out;
  }
  const NumberFieldEmbedding nf = as_number_field(gens);
  out.ctx = nf.ctx;
  std::size_t k = 0;
  for (const auto& m : ms) {
    std::vector<NFElem> d(nf.images.begin() + static_cast<long>(k), nf.images.begin() + static_cast<long>(k + m.data().size()));
    k += m.data().size();
    out.matrices.emplace_back(m.rows(), m.cols(), std::move(d));
  }
  return out;
}

std::vector<AlgebraicReal> spectrum(const Matrix<AlgebraicReal>& m) {
  require_square(m);
  if (!m.is_symmetric()) throw MathError("matrix is not symmetric");
  const LiftedMatrices l = lift_matrices({m});
  std::vector<AlgebraicReal> out;
  for (const auto& r : real_roots_of(char_poly(l.matrices[0]), l.ctx))
    for (std::size_t k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  check(out.size() == m.rows(), "spectrum size differs from the dimension");
  return out;
}

SpectralDecomposition spectral_decomposition(const Matrix<AlgebraicReal>& a) {
  require_square(a);
  if (!a.is_symmetric()) throw MathError("matrix is not symmetric");
  const LiftedMatrices l = lift_matrices({a});
  const EigenStructure s = symmetric_eigen_structure(l.matrices[0], l.ctx);
  certify_structure(s);
  check(reconstruct(s, 1) == l.matrices[0], "spectral reconstruction differs from the matrix");
  check(reconstruct(s, 0) == Matrix<NFElem>::identity(a.rows()), "eigenvectors are not complete");
  SpectralDecomposition out;
  for (auto& p : materialize(s)) {
    out.eigenvalues.push_back(p.value);
    out.eigenvectors.push_back(std::move(p.vector));
    out.exact.push_back(std::move(p.exact));
  }
  return out;
}

}  // namespace exactreal
