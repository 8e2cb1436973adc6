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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exactreal/linalg/pencil.hpp"

namespace exactreal {

/// Polynomial in x1..xm with rational coefficients, keyed by exponent vectors.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::size_t vars) : vars_(vars) {}

  static MPoly constant(std::size_t vars, const Rational& c);

  std::size_t vars() const { return vars_; }
  const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }
  void add_term(std::vector<unsigned> exps, const Rational& c);
  bool is_zero() const { return terms_.empty(); }

  Rational eval(const std::vector<Rational>& x) const;
  MPoly derivative(std::size_t var) const;
  /// Sum of |coefficients|: bounds the polynomial's magnitude on [0,1]^m.
  Rational sup_bound_on_unit_cube() const;

 private:
  std::size_t vars_ = 0;
  std::map<std::vector<unsigned>, Rational> terms_;
};

struct PdeOptions {
  Rational cfl_factor = Rational(Integer(1), Integer(2));
  /// Constant in the a-priori error bound c0 n m M (1 + max|mu|) T h.
  Rational c0 = Rational(8);
  /// Upper limit for the refinement index N; 0 means the a-priori bound.
  std::size_t max_refine = 0;
  /// First refinement index tried.
  std::size_t start_n = 3;
};

/// A u_t + sum_i B_i u_{x_i} = f on t >= 0 with u(0, x) = phi(x) on Q = [0,1]^m.
struct HyperbolicProblem {
  std::size_t m = 1, n = 1;
  Matrix<AlgebraicReal> A;
  std::vector<Matrix<AlgebraicReal>> B;
  std::vector<MPoly> phi;
  /// Source term; only the zero function is supported.
  std::vector<MPoly> f;
  Rational M;
  std::size_t a = 1;
  PdeOptions options;
};

/// Checks shapes, symmetry, definiteness, nondegeneracy and the derivative
/// bound.  Throws InputError or MathError.
void validate(const HyperbolicProblem& p);

/// Domain of determinacy H cut out by the extreme pencil eigenvalues.
struct DomainH {
  std::vector<AlgebraicReal> mu_min, mu_max;
  /// Dyadic time horizon (multiple of 2^-16) with H inside [0, T] x Q.
  Rational T;
  std::vector<PencilDecomposition> pencils;

  /// Whether (t, x) lies in H.
  bool contains(const Rational& t, const std::vector<Rational>& x) const;
};

DomainH compute_domain(const HyperbolicProblem& p);

/// Exact scheme coefficients in one number field.
struct SchemeData {
  NFContext ctx;
  Matrix<NFElem> A, Ainv;
  std::vector<Matrix<NFElem>> T, Tinv;
  std::vector<std::vector<NFElem>> mu;
  AlgebraicReal lambda_min, lambda_max;
  std::vector<AlgebraicReal> mu_min, mu_max;
  /// Rational upper bound on every |mu|.
  Rational speed_bound;
};

SchemeData scheme_data(const HyperbolicProblem& p, const DomainH& d);

struct Steps {
  std::size_t N = 1;
  Rational h, tau;
  std::size_t L = 1;
};

/// h = 2^-N and the smallest power-of-two L with (T/L) max|mu| <= h cfl.
Steps select_steps(const HyperbolicProblem& p, const DomainH& d, const SchemeData& s, std::size_t N);
/// Smallest N >= 1 whose a-priori bound c0 n m M (1 + max|mu|) T 2^-N is <= 1/(3a).
std::size_t apriori_refinement(const HyperbolicProblem& p, const DomainH& d, const SchemeData& s);

/// Grid values on an index box lo..hi (inclusive) per dimension.
struct PaddedLevel {
  std::vector<long> lo, hi;
  std::vector<std::vector<NFElem>> cells;

  std::size_t index(const std::vector<long>& k) const;
  const std::vector<NFElem>& at(const std::vector<long>& k) const { return cells[index(k)]; }
  std::size_t size() const { return cells.size(); }
};

/// Initial data on cells -L..2^N-1+L per dimension, clamped outside Q.
PaddedLevel initial_level(const HyperbolicProblem& p, const SchemeData& s, const Steps& st);

/// One upwind sweep in characteristic variables along direction dir; the
/// result box is one cell narrower on both sides of that direction.
PaddedLevel godunov_step(const PaddedLevel& u, std::size_t dir, const SchemeData& s, const Rational& tau,
                         const Rational& h);

/// Sum over cells of u^T A u.
NFElem energy(const PaddedLevel& u, const Matrix<NFElem>& a);

/// Time levels 0..L restricted to the 2^N cells per dimension of Q.
struct GridFunction {
  std::size_t m = 1, n = 1, N = 0;
  Rational h, tau;
  std::vector<std::vector<std::vector<NFElem>>> levels;

  std::size_t cells_per_dim() const { return std::size_t{1} << N; }
  /// Cell center of a flat index.
  std::vector<Rational> center(std::size_t flat) const;
  std::vector<long> multi_index(std::size_t flat) const;
};

struct SchemeRun {
  GridFunction grid;
  /// The A-energy never increased over a sweep.
  bool energy_stable = true;
};

SchemeRun run_scheme(const HyperbolicProblem& p, const SchemeData& s, const Steps& st);

/// Piecewise multilinear interpolation of one time level at a point inside the
/// hull of the cell centers.  Throws InputError outside the hull.
std::vector<NFElem> multilinear_interp(const GridFunction& g, std::size_t level, const std::vector<Rational>& x);

enum class NormKind { sup, l2, sl2 };

/// Rational upper bound on a grid norm (exact when the square root is a
/// 16-bit dyadic).  sup: max over all levels and cells; l2: last level;
/// sl2: max over levels of the l2 norm.  The optional weight A gives the
/// pointwise norm sqrt(<A g, g>).
Rational grid_norm(const GridFunction& g, NormKind kind, const Matrix<NFElem>* weight = nullptr);

/// Smallest 2^-16 dyadic >= sqrt(x) for a non-negative field element.
Rational sqrt_upper(const NFElem& x);

enum class SolveStatus { certified, uncertified };

struct SolveReport {
  GridFunction solution;
  /// Field holding every grid value.
  NFContext context;
  Steps steps;
  Rational T;
  Rational error_target;
  std::optional<Rational> aposteriori_gap;
  SolveStatus status = SolveStatus::uncertified;
  std::size_t apriori_n = 0;
  bool energy_stable = true;
  /// Gaps between consecutive refinements, in the order computed.
  std::vector<std::pair<std::size_t, Rational>> history;
};

/// sL2 distance over H between a fine solution and a coarse one interpolated
/// onto the fine grid, at the coarse time levels.
Rational refinement_gap(const GridFunction& coarse, const GridFunction& fine, const DomainH& d, const Matrix<NFElem>& a);

SolveReport solve(const HyperbolicProblem& p);

}  // namespace exactreal
