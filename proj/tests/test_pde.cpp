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

#include <cmath>

#include "doctest.h"
#include "exactreal/pde/solver.hpp"

using namespace exactreal;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

Matrix<AlgebraicReal> M(const std::vector<std::vector<AlgebraicReal>>& rows) {
  return Matrix<AlgebraicReal>::from_rows(rows);
}

MPoly poly1(const std::vector<Rational>& coeffs) {
  MPoly p(1);
  for (unsigned k = 0; k < coeffs.size(); ++k) p.add_term({k}, coeffs[k]);
  return p;
}

// x^2 (1 - x)^2
Rational bump(const Rational& x) { return x * x * (Rational(1) - x) * (Rational(1) - x); }

HyperbolicProblem model_problem() {
  HyperbolicProblem p;
  p.m = 1;
  p.n = 2;
  p.A = Matrix<AlgebraicReal>::identity(2);
  p.B = {M({{0, 1}, {1, 0}})};
  p.phi = {poly1({0, 0, 1, -2, 1}), MPoly(1)};
  p.M = Rational(26);
  p.a = 4;
  return p;
}

// d'Alembert solution of u1_t + u2_x = 0, u2_t + u1_x = 0 with u(0) = (bump, 0)
std::vector<Rational> oracle(const Rational& t, const Rational& x) {
  const Rational l = bump(x - t), r = bump(x + t);
  return {(l + r) / Rational(2), (l - r) / Rational(2)};
}

// sL2 error over H against the oracle, as a double
double oracle_error(const GridFunction& g, const DomainH& d) {
  double worst = 0;
  for (std::size_t l = 0; l < g.levels.size(); ++l) {
    const Rational t = g.tau * Rational(static_cast<long>(l));
    Rational sum;
    for (std::size_t f = 0; f < g.levels[l].size(); ++f) {
      const auto x = g.center(f);
      if (!d.contains(t, x)) continue;
      const auto ex = oracle(t, x[0]);
      for (std::size_t k = 0; k < 2; ++k) {
        const Rational e = g.levels[l][f][k].rational_value() - ex[k];
        sum += e * e;
      }
    }
    worst = std::max(worst, (sum * g.h).to_double());
  }
  return std::sqrt(worst);
}

GridFunction grid_1d(std::size_t N, const std::vector<std::vector<std::vector<NFElem>>>& levels) {
  GridFunction g;
  g.m = 1;
  g.n = levels.front().front().size();
  g.N = N;
  g.h = pow2(-static_cast<long>(N));
  g.tau = Rational(1);
  g.levels = levels;
  return g;
}

}  // namespace

TEST_CASE("multivariate polynomial evaluation and derivative bounds") {
  MPoly p(2);
  p.add_term({2, 1}, R(3));
  p.add_term({0, 0}, R(-1));
  CHECK(p.eval({R(1, 2), R(2)}) == R(1, 2));
  const MPoly dx = p.derivative(0);
  CHECK(dx.eval({R(1), R(1)}) == R(6));
  CHECK(dx.sup_bound_on_unit_cube() == R(6));
  CHECK(p.derivative(1).derivative(1).is_zero());
}

TEST_CASE("domain of determinacy") {
  SUBCASE("symmetric speeds give the triangle") {
    const DomainH d = compute_domain(model_problem());
    CHECK(d.mu_min[0] == AlgebraicReal(-1));
    CHECK(d.mu_max[0] == AlgebraicReal(1));
    CHECK(d.T == R(1, 2));
    CHECK(d.contains(R(0), {R(1, 3)}));
    CHECK(d.contains(R(1, 4), {R(1, 4)}));
    CHECK_FALSE(d.contains(R(1, 4), {R(1, 5)}));
    CHECK_FALSE(d.contains(R(1, 4), {R(4, 5)}));
    CHECK(d.contains(R(1, 2), {R(1, 2)}));
  }
  SUBCASE("single positive speed has no compact domain") {
    HyperbolicProblem p;
    p.A = M({{1}});
    p.B = {M({{2}})};
    p.phi = {MPoly::constant(1, R(1))};
    p.M = R(1);
    CHECK_THROWS_AS(compute_domain(p), MathError);
  }
  SUBCASE("two directions with speeds plus and minus one") {
    HyperbolicProblem p;
    p.m = 2;
    p.n = 2;
    p.A = Matrix<AlgebraicReal>::identity(2);
    p.B = {M({{0, 1}, {1, 0}}), M({{1, 0}, {0, -1}})};
    p.phi = {MPoly::constant(2, R(1)), MPoly::constant(2, R(0))};
    p.M = R(1);
    const DomainH d = compute_domain(p);
    CHECK(d.T == R(1, 2));
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(d.mu_min[i] == AlgebraicReal(-1));
      CHECK(d.mu_max[i] == AlgebraicReal(1));
    }
  }
  SUBCASE("irrational speeds give a dyadic horizon above the apex") {
    HyperbolicProblem p = model_problem();
    p.B = {M({{1, 1}, {1, -1}})};
    const DomainH d = compute_domain(p);
    // speeds are -sqrt2 and sqrt2, apex 1/(2 sqrt2)
    const AlgebraicReal apex = invert(sqrt(AlgebraicReal(8)));
    CHECK(AlgebraicReal(d.T) >= apex);
    CHECK(AlgebraicReal(d.T - pow2(-16)) < apex);
  }
}

TEST_CASE("problem validation") {
  HyperbolicProblem p = model_problem();
  SUBCASE("nonzero source") {
    p.f = {MPoly::constant(1, R(1)), MPoly(1)};
    CHECK_THROWS_AS(validate(p), InputError);
  }
  SUBCASE("derivative bound too small") {
    p.M = R(25);
    CHECK_THROWS_AS(validate(p), InputError);
  }
  SUBCASE("A not positive definite") {
    p.A = M({{1, 0}, {0, -1}});
    CHECK_THROWS_AS(validate(p), MathError);
  }
  SUBCASE("singular B") {
    p.B = {M({{1, 1}, {1, 1}})};
    CHECK_THROWS_AS(validate(p), MathError);
  }
  SUBCASE("non-symmetric B") {
    p.B = {M({{0, 1}, {2, 0}})};
    CHECK_THROWS_AS(validate(p), MathError);
  }
  SUBCASE("shape mismatch") {
    p.phi.pop_back();
    CHECK_THROWS_AS(validate(p), InputError);
  }
}

TEST_CASE("scheme data") {
  SUBCASE("swap matrix") {
    const HyperbolicProblem p = model_problem();
    const SchemeData s = scheme_data(p, compute_domain(p));
    const AlgebraicReal r = invert(sqrt(AlgebraicReal(2)));
    CHECK(s.mu[0][0].to_algebraic() == AlgebraicReal(-1));
    CHECK(s.mu[0][1].to_algebraic() == AlgebraicReal(1));
    const auto& t = s.T[0];
    CHECK(t(0, 0).to_algebraic() == r);
    CHECK(t(1, 0).to_algebraic() == -r);
    CHECK(t(0, 1).to_algebraic() == r);
    CHECK(t(1, 1).to_algebraic() == r);
    CHECK(s.Tinv[0] * t == Matrix<NFElem>::identity(2));
    CHECK(s.speed_bound == R(1));
  }
  SUBCASE("scalar pencil") {
    HyperbolicProblem p;
    p.A = M({{4}});
    p.B = {M({{2}})};
    p.phi = {MPoly(1)};
    const DomainH d{{AlgebraicReal(-1)}, {AlgebraicReal(1)}, R(1), {pencil_decomposition(p.A, p.B[0])}};
    const SchemeData s = scheme_data(p, d);
    CHECK(s.T[0](0, 0) == NFElem(R(1, 2)));
    CHECK(s.mu[0][0] == NFElem(R(1, 2)));
  }
  SUBCASE("diagonal B") {
    HyperbolicProblem p = model_problem();
    p.B = {M({{1, 0}, {0, -1}})};
    const SchemeData s = scheme_data(p, compute_domain(p));
    CHECK(s.mu[0][0] == NFElem(-1));
    CHECK(s.mu[0][1] == NFElem(1));
    CHECK(s.T[0](0, 0).is_zero());
    CHECK(s.T[0](1, 0) == NFElem(1));
    CHECK(s.T[0](0, 1) == NFElem(1));
  }
}

TEST_CASE("step selection") {
  HyperbolicProblem p = model_problem();
  const DomainH d = compute_domain(p);
  const SchemeData s = scheme_data(p, d);
  const Steps st = select_steps(p, d, s, 3);
  CHECK(st.h == R(1, 8));
  CHECK(st.L == 8);
  CHECK(st.tau == R(1, 16));
  CHECK(st.tau * s.speed_bound <= st.h * p.options.cfl_factor);
  CHECK(select_steps(p, d, s, 0).N == 1);
  // 8 * 2 * 1 * 26 * 2 * 1/2 = 416 and 416 / 2^13 <= 1/12 < 416 / 2^12
  CHECK(apriori_refinement(p, d, s) == 13);
  p.M = R(1, 1000);
  p.phi = {MPoly::constant(1, R(1)), MPoly(1)};
  p.a = 1;
  CHECK(apriori_refinement(p, d, s) == 1);

  SUBCASE("half speeds allow twice the step") {
    HyperbolicProblem q;
    q.A = M({{4, 0}, {0, 4}});
    q.n = 2;
    q.B = {M({{0, 2}, {2, 0}})};
    q.phi = {MPoly(1), MPoly(1)};
    const DomainH dq = compute_domain(q);
    const SchemeData sq = scheme_data(q, dq);
    CHECK(sq.speed_bound == R(1, 2));
    const Steps a = select_steps(q, dq, sq, 2);
    CHECK(a.tau * R(1, 2) <= a.h * q.options.cfl_factor);
    CHECK(a.tau * R(1, 2) * R(2) > a.h * q.options.cfl_factor);
  }
}

TEST_CASE("godunov step") {
  HyperbolicProblem p = model_problem();
  const DomainH d = compute_domain(p);
  const SchemeData s = scheme_data(p, d);

  SUBCASE("constant state is unchanged") {
    PaddedLevel u;
    u.lo = {-3};
    u.hi = {3};
    u.cells.assign(7, {NFElem(R(2, 3)), NFElem(-5)});
    const PaddedLevel v = godunov_step(u, 0, s, R(1, 16), R(1, 8));
    CHECK(v.lo[0] == -2);
    CHECK(v.hi[0] == 2);
    for (const auto& c : v.cells) {
      CHECK(c[0] == NFElem(R(2, 3)));
      CHECK(c[1] == NFElem(-5));
    }
  }
  SUBCASE("linear data is transported exactly") {
    // u = (x, x) is the +1 characteristic mode
    const Rational h = R(1, 8), tau = R(1, 32);
    PaddedLevel u;
    u.lo = {-2};
    u.hi = {9};
    for (long k = -2; k <= 9; ++k) {
      const Rational x = (Rational(k) + R(1, 2)) * h;
      u.cells.push_back({NFElem(x), NFElem(x)});
    }
    const PaddedLevel v = godunov_step(u, 0, s, tau, h);
    for (long k = v.lo[0]; k <= v.hi[0]; ++k) {
      const Rational x = (Rational(k) + R(1, 2)) * h - tau;
      CHECK(v.at({k})[0] == NFElem(x));
      CHECK(v.at({k})[1] == NFElem(x));
    }
  }
  SUBCASE("unit CFL shifts every cell exactly") {
    p.options.cfl_factor = R(1);
    const Steps st = select_steps(p, d, s, 4);
    CHECK(st.tau == st.h);
    const SchemeRun run = run_scheme(p, s, st);
    CHECK(run.energy_stable);
    const auto phi_cell = [&](long k) {
      return bump(std::clamp((Rational(k) + R(1, 2)) * st.h, Rational(0), Rational(1)));
    };
    for (std::size_t l = 0; l <= st.L; ++l)
      for (long j = 0; j < 16; ++j) {
        const Rational a = phi_cell(j - static_cast<long>(l)), b = phi_cell(j + static_cast<long>(l));
        const auto& c = run.grid.levels[l][static_cast<std::size_t>(j)];
        CHECK(c[0] == NFElem((a + b) / Rational(2)));
        CHECK(c[1] == NFElem((a - b) / Rational(2)));
      }
  }
}

TEST_CASE("interpolation and norms") {
  SUBCASE("midpoint of two cells") {
    const GridFunction g = grid_1d(1, {{{NFElem(0)}, {NFElem(1)}}});
    CHECK(multilinear_interp(g, 0, {R(1, 2)})[0] == NFElem(R(1, 2)));
    CHECK(multilinear_interp(g, 0, {R(1, 4)})[0] == NFElem(0));
    CHECK(multilinear_interp(g, 0, {R(3, 4)})[0] == NFElem(1));
    CHECK_THROWS_AS(multilinear_interp(g, 0, {R(1, 8)}), InputError);
    CHECK_THROWS_AS(multilinear_interp(g, 0, {R(7, 8)}), InputError);
  }
  SUBCASE("bilinear center") {
    GridFunction g;
    g.m = 2;
    g.n = 1;
    g.N = 1;
    g.h = R(1, 2);
    g.levels = {{{NFElem(0)}, {NFElem(0)}, {NFElem(0)}, {NFElem(1)}}};
    CHECK(multilinear_interp(g, 0, {R(1, 2), R(1, 2)})[0] == NFElem(R(1, 4)));
    CHECK(multilinear_interp(g, 0, {R(3, 4), R(3, 4)})[0] == NFElem(1));
    CHECK(multilinear_interp(g, 0, {R(3, 4), R(1, 2)})[0] == NFElem(R(1, 2)));
  }
  SUBCASE("single cell 3-4-5") {
    const GridFunction g = grid_1d(0, {{{NFElem(3), NFElem(4)}}});
    CHECK(grid_norm(g, NormKind::l2) == R(5));
    CHECK(grid_norm(g, NormKind::sl2) == R(5));
    CHECK(grid_norm(g, NormKind::sup) == R(5));
    const Matrix<NFElem> w = Matrix<NFElem>::diagonal({NFElem(4), NFElem(1)});
    // sqrt(4*9 + 16) = sqrt(52)
    const Rational b = grid_norm(g, NormKind::l2, &w);
    CHECK(b * b >= R(52));
    CHECK((b - pow2(-16)) * (b - pow2(-16)) < R(52));
  }
  SUBCASE("zero grid") {
    const GridFunction g = grid_1d(2, {{{NFElem(0)}, {NFElem(0)}, {NFElem(0)}, {NFElem(0)}}});
    CHECK(grid_norm(g, NormKind::sup) == R(0));
    CHECK(grid_norm(g, NormKind::l2) == R(0));
    CHECK(grid_norm(g, NormKind::sl2) == R(0));
  }
  SUBCASE("sup over levels") {
    const GridFunction g = grid_1d(0, {{{NFElem(1)}}, {{NFElem(-2)}}, {{NFElem(R(3, 2))}}});
    CHECK(grid_norm(g, NormKind::sup) == R(2));
    CHECK(grid_norm(g, NormKind::l2) == R(3, 2));
    CHECK(grid_norm(g, NormKind::sl2) == R(2));
  }
  SUBCASE("irrational squared norm") {
    const NFContext ctx = as_number_field({sqrt(AlgebraicReal(2))}).ctx;
    const NFElem r = NFElem::generator(ctx);
    const Rational b = sqrt_upper(r);
    // 2^(1/4)
    CHECK(b * b * b * b >= R(2));
    CHECK((b - pow2(-16)) * (b - pow2(-16)) * (b - pow2(-16)) * (b - pow2(-16)) < R(2));
  }
  SUBCASE("shape mismatch") {
    const GridFunction g = grid_1d(0, {{{NFElem(3), NFElem(4)}}});
    const Matrix<NFElem> w = Matrix<NFElem>::identity(3);
    CHECK_THROWS_AS(grid_norm(g, NormKind::l2, &w), InputError);
  }
}

TEST_CASE("certified solve of the model problem") {
  const HyperbolicProblem p = model_problem();
  const SolveReport r = solve(p);
  CHECK(r.status == SolveStatus::certified);
  REQUIRE(r.aposteriori_gap.has_value());
  CHECK(*r.aposteriori_gap < R(1, 12));
  CHECK(r.energy_stable);
  CHECK(r.T == R(1, 2));
  CHECK(r.error_target == R(1, 4));
  const DomainH d = compute_domain(p);
  CHECK(oracle_error(r.solution, d) < 0.25);
}

TEST_CASE("first-order convergence on the model problem") {
  const HyperbolicProblem p = model_problem();
  const DomainH d = compute_domain(p);
  const SchemeData s = scheme_data(p, d);
  std::vector<double> err;
  for (std::size_t N = 4; N <= 6; ++N) {
    const SchemeRun run = run_scheme(p, s, select_steps(p, d, s, N));
    CHECK(run.energy_stable);
    err.push_back(oracle_error(run.grid, d));
  }
  for (std::size_t k = 0; k + 1 < err.size(); ++k) {
    const double order = std::log2(err[k] / err[k + 1]);
    CHECK(order >= 0.7);
    CHECK(order <= 1.3);
  }
}

TEST_CASE("constant data is certified immediately") {
  HyperbolicProblem p = model_problem();
  p.phi = {MPoly::constant(1, R(3)), MPoly::constant(1, R(-1))};
  const SolveReport r = solve(p);
  CHECK(r.status == SolveStatus::certified);
  CHECK(*r.aposteriori_gap == R(0));
  CHECK(r.history.size() == 1);
  for (const auto& lev : r.solution.levels)
    for (const auto& v : lev) {
      CHECK(v[0] == NFElem(3));
      CHECK(v[1] == NFElem(-1));
    }
}

TEST_CASE("uncertified when the refinement cap is too low") {
  HyperbolicProblem p = model_problem();
  p.a = 100000;
  p.options.max_refine = 3;
  p.options.start_n = 2;
  const SolveReport r = solve(p);
  CHECK(r.status == SolveStatus::uncertified);
  REQUIRE(r.aposteriori_gap.has_value());
  CHECK(*r.aposteriori_gap >= R(1, 300000));
}

TEST_CASE("two-dimensional sweep keeps constants and energy") {
  HyperbolicProblem p;
  p.m = 2;
  p.n = 2;
  p.A = Matrix<AlgebraicReal>::identity(2);
  p.B = {M({{0, 1}, {1, 0}}), M({{1, 0}, {0, -1}})};
  MPoly q(2);
  q.add_term({1, 1}, R(1));
  p.phi = {q, MPoly::constant(2, R(1))};
  p.M = R(1);
  const DomainH d = compute_domain(p);
  const SchemeData s = scheme_data(p, d);
  const SchemeRun run = run_scheme(p, s, select_steps(p, d, s, 2));
  CHECK(run.energy_stable);
  CHECK(run.grid.levels.size() == 5);
  CHECK(run.grid.levels[0].size() == 16);
}
