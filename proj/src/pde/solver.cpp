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

#include "exactreal/pde/solver.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace exactreal {

namespace {

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
  if (count < 2048 || workers == 1) {
    body(0, count);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t b = 0; b < count; b += chunk) threads.emplace_back(body, b, std::min(count, b + chunk));
  for (auto& t : threads) t.join();
}

std::vector<NFElem> mat_vec(const Matrix<NFElem>& m, const std::vector<NFElem>& v) { return m.apply(v); }

NFElem sq_norm(const std::vector<NFElem>& v, const Matrix<NFElem>* weight) {
  if (weight) return dot(v, weight->apply(v));
  return dot(v, v);
}

Rational upper_bound(const AlgebraicReal& x) {
  if (x.is_rational()) return x.rational_value();
  return x.enclosure(24).hi;
}

Rational dyadic_ceil(const AlgebraicReal& x, unsigned bits) {
  const Rational scale = pow2(bits);
  const Integer f = floor(-(x * AlgebraicReal(scale)));
  return Rational(Integer(-f)) / scale;
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(std::size_t vars, const Rational& c) {
  MPoly p(vars);
  p.add_term(std::vector<unsigned>(vars, 0), c);
  return p;
}

void MPoly::add_term(std::vector<unsigned> exps, const Rational& c) {
  if (exps.size() != vars_) throw InputError("monomial has the wrong number of variables");
  Rational& slot = terms_[exps];
  slot += c;
  if (slot.is_zero()) terms_.erase(exps);
}

Rational MPoly::eval(const std::vector<Rational>& x) const {
  if (x.size() != vars_) throw InputError("point has the wrong dimension");
  Rational s;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_; ++i) t *= pow(x[i], e[i]);
    s += t;
  }
  return s;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly d(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    auto f = e;
    --f[var];
    d.add_term(std::move(f), c * Rational(static_cast<long>(e[var])));
  }
  return d;
}

Rational MPoly::sup_bound_on_unit_cube() const {
  Rational s;
  for (const auto& [e, c] : terms_) s += c.abs();
  return s;
}

// ---------------------------------------------------------------- problem

void validate(const HyperbolicProblem& p) {
  if (p.m == 0 || p.n == 0) throw InputError("space dimension and system size must be positive");
  if (p.A.rows() != p.n || p.A.cols() != p.n) throw InputError("matrix A must be n x n");
  if (p.B.size() != p.m) throw InputError("one matrix B_i is required per space direction");
  for (const auto& b : p.B)
    if (b.rows() != p.n || b.cols() != p.n) throw InputError("matrices B_i must be n x n");
  if (p.phi.size() != p.n) throw InputError("initial data must have n components");
  for (const auto& c : p.phi)
    if (c.vars() != p.m) throw InputError("initial data must be polynomials in x1..xm");
  if (!p.f.empty() && p.f.size() != p.n) throw InputError("source term must have n components");
  for (const auto& c : p.f)
    if (!c.is_zero()) throw InputError("nonzero source terms are not supported");
  if (p.a == 0) throw InputError("accuracy a must be a positive integer");
  if (p.M.sign() < 0) throw InputError("derivative bound M must be non-negative");
  if (p.options.cfl_factor.sign() <= 0 || p.options.cfl_factor > Rational(1)) {
    throw InputError("cfl_factor must lie in (0, 1]");
  }
  if (p.options.c0.sign() <= 0) throw InputError("c0 must be positive");

  if (!p.A.is_symmetric()) throw MathError("matrix A is not symmetric");
  for (const auto& b : p.B)
    if (!b.is_symmetric()) throw MathError("matrix B_i is not symmetric");
  std::vector<Matrix<AlgebraicReal>> ms{p.A};
  ms.insert(ms.end(), p.B.begin(), p.B.end());
  const LiftedMatrices l = lift_matrices(ms);
  if (!is_positive_definite(l.matrices[0])) throw MathError("matrix A is not positive definite");
  for (std::size_t i = 1; i < l.matrices.size(); ++i)
    if (det(l.matrices[i]).is_zero()) throw MathError("matrix B_i is singular");

  for (const auto& c : p.phi)
    for (std::size_t i = 0; i < p.m; ++i) {
      const MPoly di = c.derivative(i);
      if (di.sup_bound_on_unit_cube() > p.M) throw InputError("first derivatives of the initial data exceed M");
      for (std::size_t j = 0; j < p.m; ++j)
        if (di.derivative(j).sup_bound_on_unit_cube() > p.M) {
          throw InputError("second derivatives of the initial data exceed M");
        }
    }
}

bool DomainH::contains(const Rational& t, const std::vector<Rational>& x) const {
  if (t.sign() < 0 || x.size() != mu_min.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (AlgebraicReal(x[i]) < mu_max[i] * AlgebraicReal(t)) return false;
    if (AlgebraicReal(x[i] - Rational(1)) > mu_min[i] * AlgebraicReal(t)) return false;
  }
  return true;
}

DomainH compute_domain(const HyperbolicProblem& p) {
  validate(p);
  DomainH d;
  std::optional<AlgebraicReal> apex;
  for (std::size_t i = 0; i < p.m; ++i) {
    PencilDecomposition pd = pencil_decomposition(p.A, p.B[i]);
    const AlgebraicReal lo = pd.mu.front(), hi = pd.mu.back();
    if (lo.sign() >= 0 || hi.sign() <= 0) throw MathError("no compact determinacy domain");
    const AlgebraicReal ti = invert(hi - lo);
    if (!apex || ti < *apex) apex = ti;
    d.mu_min.push_back(lo);
    d.mu_max.push_back(hi);
    d.pencils.push_back(std::move(pd));
  }
  d.T = dyadic_ceil(*apex, 16);
  return d;
}

SchemeData scheme_data(const HyperbolicProblem& p, const DomainH& d) {
  const std::size_t n = p.n;
  std::vector<AlgebraicReal> gens(p.A.data());
  for (std::size_t i = 0; i < p.m; ++i) {
    gens.insert(gens.end(), p.B[i].data().begin(), p.B[i].data().end());
    for (const auto& col : d.pencils[i].t) gens.insert(gens.end(), col.begin(), col.end());
    gens.insert(gens.end(), d.pencils[i].mu.begin(), d.pencils[i].mu.end());
  }
  const NumberFieldEmbedding nf = as_number_field(gens);
  SchemeData s;
  s.ctx = nf.ctx;
  auto it = nf.images.begin();
  auto take = [&](std::size_t k) {
    std::vector<NFElem> v(it, it + static_cast<long>(k));
    it += static_cast<long>(k);
    return v;
  };
  s.A = Matrix<NFElem>(n, n, take(n * n));
  s.Ainv = inverse(s.A);
  for (std::size_t i = 0; i < p.m; ++i) {
    const Matrix<NFElem> b(n, n, take(n * n));
    std::vector<std::vector<NFElem>> cols;
    for (std::size_t k = 0; k < n; ++k) cols.push_back(take(n));
    const Matrix<NFElem> t = Matrix<NFElem>::from_columns(cols);
    std::vector<NFElem> mu = take(n);
    const Matrix<NFElem> tt = t.transpose();
    check(tt * s.A * t == Matrix<NFElem>::identity(n), "T^T A T differs from the identity");
    check(tt * b * t == Matrix<NFElem>::diagonal(mu), "T^T B T differs from diag(mu)");
    s.T.push_back(t);
    s.Tinv.push_back(tt * s.A);
    s.mu.push_back(std::move(mu));
  }
  s.lambda_min = d.pencils[0].lambda.eigenvalues.front();
  s.lambda_max = d.pencils[0].lambda.eigenvalues.back();
  s.mu_min = d.mu_min;
  s.mu_max = d.mu_max;
  for (std::size_t i = 0; i < p.m; ++i) {
    s.speed_bound = std::max({s.speed_bound, upper_bound(d.mu_max[i]), upper_bound(-d.mu_min[i])});
  }
  return s;
}

Steps select_steps(const HyperbolicProblem& p, const DomainH& d, const SchemeData& s, std::size_t N) {
  Steps st;
  st.N = std::max<std::size_t>(N, 1);
  st.h = pow2(-static_cast<long>(st.N));
  const Rational limit = st.h * p.options.cfl_factor;
  st.L = 1;
  while (d.T / Rational(static_cast<long>(st.L)) * s.speed_bound > limit) st.L *= 2;
  st.tau = d.T / Rational(static_cast<long>(st.L));
  return st;
}

std::size_t apriori_refinement(const HyperbolicProblem& p, const DomainH& d, const SchemeData& s) {
  const Rational c = p.options.c0 * Rational(static_cast<long>(p.n * p.m)) * p.M * (Rational(1) + s.speed_bound) * d.T;
  const Rational target = Rational(1) / Rational(static_cast<long>(3 * p.a));
  std::size_t N = 1;
  while (c * pow2(-static_cast<long>(N)) > target) ++N;
  return N;
}

// ---------------------------------------------------------------- grid

std::size_t PaddedLevel::index(const std::vector<long>& k) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < lo.size(); ++i) idx = idx * static_cast<std::size_t>(hi[i] - lo[i] + 1) + static_cast<std::size_t>(k[i] - lo[i]);
  return idx;
}

namespace {

std::vector<long> unflatten(std::size_t flat, const std::vector<long>& lo, const std::vector<long>& hi) {
  std::vector<long> k(lo.size());
  for (std::size_t i = lo.size(); i-- > 0;) {
    const auto w = static_cast<std::size_t>(hi[i] - lo[i] + 1);
    k[i] = lo[i] + static_cast<long>(flat % w);
    flat /= w;
  }
  return k;
}

std::size_t box_size(const std::vector<long>& lo, const std::vector<long>& hi) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) s *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  return s;
}

Rational cell_center(long k, const Rational& h) { return (Rational(k) + Rational(Integer(1), Integer(2))) * h; }

}  // namespace

PaddedLevel initial_level(const HyperbolicProblem& p, const SchemeData& s, const Steps& st) {
  (void)s;
  PaddedLevel u;
  const long cells = 1L << st.N, pad = static_cast<long>(st.L);
  u.lo.assign(p.m, -pad);
  u.hi.assign(p.m, cells - 1 + pad);
  u.cells.resize(box_size(u.lo, u.hi));
  for (std::size_t f = 0; f < u.cells.size(); ++f) {
    const auto k = unflatten(f, u.lo, u.hi);
    std::vector<Rational> x(p.m);
    for (std::size_t i = 0; i < p.m; ++i) x[i] = std::clamp(cell_center(k[i], st.h), Rational(0), Rational(1));
    auto& v = u.cells[f];
    for (const auto& c : p.phi) v.emplace_back(c.eval(x));
  }
  return u;
}

PaddedLevel godunov_step(const PaddedLevel& u, std::size_t dir, const SchemeData& s, const Rational& tau,
                         const Rational& h) {
  const std::size_t n = s.mu[dir].size();
  const NFElem ratio(tau / h);
  // Upwind update in characteristic variables w = T^-1 u folded into three
  // stencil matrices u_j' = T (D0 w_j + Dm w_{j-1} + Dp w_{j+1}).
  std::vector<NFElem> d0(n), dm(n), dp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const NFElem c = ratio * s.mu[dir][k];
    if (c.sign() > 0) {
      d0[k] = NFElem(1) - c;
      dm[k] = c;
      dp[k] = NFElem(0);
    } else {
      d0[k] = NFElem(1) + c;
      dm[k] = NFElem(0);
      dp[k] = -c;
    }
  }
  const Matrix<NFElem>& t = s.T[dir];
  const Matrix<NFElem>& ti = s.Tinv[dir];
  const Matrix<NFElem> m0 = t * Matrix<NFElem>::diagonal(d0) * ti;
  const Matrix<NFElem> mm = t * Matrix<NFElem>::diagonal(dm) * ti;
  const Matrix<NFElem> mp = t * Matrix<NFElem>::diagonal(dp) * ti;

  PaddedLevel out;
  out.lo = u.lo;
  out.hi = u.hi;
  ++out.lo[dir];
  --out.hi[dir];
  if (out.lo[dir] > out.hi[dir]) throw std::logic_error("grid padding exhausted");
  out.cells.resize(box_size(out.lo, out.hi));
  parallel_for(out.cells.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t f = b; f < e; ++f) {
      auto k = unflatten(f, out.lo, out.hi);
      const auto& c = u.at(k);
      --k[dir];
      const auto& left = u.at(k);
      k[dir] += 2;
      const auto& right = u.at(k);
      std::vector<NFElem> v = mat_vec(m0, c);
      const auto vl = mat_vec(mm, left), vr = mat_vec(mp, right);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + vl[i] + vr[i];
      out.cells[f] = std::move(v);
    }
  });
  return out;
}

NFElem energy(const PaddedLevel& u, const Matrix<NFElem>& a) {
  NFElem e;
  for (const auto& v : u.cells) e = e + sq_norm(v, &a);
  return e;
}

std::vector<long> GridFunction::multi_index(std::size_t flat) const {
  const long w = static_cast<long>(cells_per_dim());
  return unflatten(flat, std::vector<long>(m, 0), std::vector<long>(m, w - 1));
}

std::vector<Rational> GridFunction::center(std::size_t flat) const {
  const auto k = multi_index(flat);
  std::vector<Rational> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = cell_center(k[i], h);
  return x;
}

namespace {

std::vector<std::vector<NFElem>> restrict_to_q(const PaddedLevel& u, std::size_t m, std::size_t N) {
  const long w = 1L << N;
  const std::vector<long> lo(m, 0), hi(m, w - 1);
  std::vector<std::vector<NFElem>> out(box_size(lo, hi));
  for (std::size_t f = 0; f < out.size(); ++f) out[f] = u.at(unflatten(f, lo, hi));
  return out;
}

}  // namespace

SchemeRun run_scheme(const HyperbolicProblem& p, const SchemeData& s, const Steps& st) {
  SchemeRun run;
  GridFunction& g = run.grid;
  g.m = p.m;
  g.n = p.n;
  g.N = st.N;
  g.h = st.h;
  g.tau = st.tau;
  PaddedLevel u = initial_level(p, s, st);
  g.levels.push_back(restrict_to_q(u, p.m, st.N));
  NFElem e = energy(u, s.A);
  for (std::size_t l = 0; l < st.L; ++l) {
    for (std::size_t dir = 0; dir < p.m; ++dir) {
      u = godunov_step(u, dir, s, st.tau, st.h);
      const NFElem e2 = energy(u, s.A);
      if (e2 > e) run.energy_stable = false;
      e = e2;
    }
    g.levels.push_back(restrict_to_q(u, p.m, st.N));
  }
  return run;
}

// ---------------------------------------------------------------- norms

std::vector<NFElem> multilinear_interp(const GridFunction& g, std::size_t level, const std::vector<Rational>& x) {
  if (level >= g.levels.size()) throw InputError("time level out of range");
  if (x.size() != g.m) throw InputError("point has the wrong dimension");
  const long w = static_cast<long>(g.cells_per_dim());
  const Rational half_h = g.h / Rational(2);
  std::vector<long> base(g.m);
  std::vector<Rational> frac(g.m);
  for (std::size_t i = 0; i < g.m; ++i) {
    if (x[i] < half_h || x[i] > Rational(1) - half_h) throw InputError("point outside the grid hull");
    if (w == 1) {
      base[i] = 0;
      frac[i] = Rational(0);
      continue;
    }
    const Rational s = (x[i] - half_h) / g.h;
    long k = static_cast<long>(s.floor().get_si());
    k = std::min(k, w - 2);
    base[i] = k;
    frac[i] = s - Rational(k);
  }
  const auto& lev = g.levels[level];
  std::vector<NFElem> out(g.n);
  for (std::size_t corner = 0; corner < (std::size_t{1} << g.m); ++corner) {
    Rational weight(1);
    std::size_t flat = 0;
    for (std::size_t i = 0; i < g.m; ++i) {
      const bool up = (corner >> i) & 1;
      weight *= up ? frac[i] : Rational(1) - frac[i];
      const long k = base[i] + (up ? 1 : 0);
      flat = flat * static_cast<std::size_t>(w) + static_cast<std::size_t>(std::min(k, w - 1));
    }
    if (weight.is_zero()) continue;
    const NFElem wf(weight);
    for (std::size_t c = 0; c < g.n; ++c) out[c] = out[c] + wf * lev[flat][c];
  }
  return out;
}

Rational sqrt_upper(const NFElem& x) {
  if (x.sign() < 0) throw std::logic_error("square root of a negative value");
  if (x.is_rational()) return sqrt_ceil_dyadic(x.rational_value(), 16);
  return sqrt_ceil_dyadic(x.enclosure(64).hi, 16);
}

Rational grid_norm(const GridFunction& g, NormKind kind, const Matrix<NFElem>* weight) {
  if (weight && (weight->rows() != g.n || weight->cols() != g.n)) throw InputError("weight matrix shape mismatch");
  for (const auto& lev : g.levels)
    for (const auto& v : lev)
      if (v.size() != g.n) throw InputError("grid value has the wrong length");
  const NFElem cell(pow(g.h, static_cast<unsigned long>(g.m)));
  auto level_l2 = [&](const std::vector<std::vector<NFElem>>& lev) {
    NFElem s;
    for (const auto& v : lev) s = s + sq_norm(v, weight);
    return cell * s;
  };
  NFElem best;
  switch (kind) {
    case NormKind::sup:
      for (const auto& lev : g.levels)
        for (const auto& v : lev) best = std::max(best, sq_norm(v, weight));
      break;
    case NormKind::l2:
      if (!g.levels.empty()) best = level_l2(g.levels.back());
      break;
    case NormKind::sl2:
      for (const auto& lev : g.levels) best = std::max(best, level_l2(lev));
      break;
  }
  return sqrt_upper(best);
}

Rational refinement_gap(const GridFunction& coarse, const GridFunction& fine, const DomainH& d, const Matrix<NFElem>& a) {
  if (fine.N != coarse.N + 1 || fine.m != coarse.m) throw InputError("grids are not consecutive refinements");
  const std::size_t ratio = (fine.levels.size() - 1) / (coarse.levels.size() - 1);
  if (coarse.tau != fine.tau * Rational(static_cast<long>(ratio))) throw InputError("time levels do not nest");
  const NFElem cell(pow(fine.h, static_cast<unsigned long>(fine.m)));
  const Rational lo_hull = coarse.h / Rational(2), hi_hull = Rational(1) - lo_hull;
  NFElem best;
  for (std::size_t l = 0; l < coarse.levels.size(); ++l) {
    const Rational t = coarse.tau * Rational(static_cast<long>(l));
    std::vector<AlgebraicReal> left(fine.m), right(fine.m);
    for (std::size_t i = 0; i < fine.m; ++i) {
      left[i] = d.mu_max[i] * AlgebraicReal(t);
      right[i] = AlgebraicReal(Rational(1)) + d.mu_min[i] * AlgebraicReal(t);
    }
    NFElem sum;
    const auto& lev = fine.levels[l * ratio];
    for (std::size_t f = 0; f < lev.size(); ++f) {
      auto x = fine.center(f);
      bool inside = true;
      for (std::size_t i = 0; i < fine.m && inside; ++i) inside = AlgebraicReal(x[i]) >= left[i] && AlgebraicReal(x[i]) <= right[i];
      if (!inside) continue;
      for (auto& xi : x) xi = std::clamp(xi, lo_hull, hi_hull);
      const auto c = multilinear_interp(coarse, l, x);
      std::vector<NFElem> diff(fine.n);
      for (std::size_t k = 0; k < fine.n; ++k) diff[k] = lev[f][k] - c[k];
      sum = sum + sq_norm(diff, &a);
    }
    best = std::max(best, cell * sum);
  }
  return sqrt_upper(best);
}

SolveReport solve(const HyperbolicProblem& p) {
  const DomainH d = compute_domain(p);
  const SchemeData s = scheme_data(p, d);
  SolveReport r;
  r.context = s.ctx;
  r.T = d.T;
  r.error_target = Rational(1) / Rational(static_cast<long>(p.a));
  r.apriori_n = apriori_refinement(p, d, s);
  const std::size_t cap = std::max<std::size_t>(p.options.max_refine ? p.options.max_refine : r.apriori_n, 2);
  const std::size_t start = std::clamp<std::size_t>(p.options.start_n, 1, cap - 1);
  const Rational target = Rational(1) / Rational(static_cast<long>(3 * p.a));
  const Matrix<NFElem> eye = Matrix<NFElem>::identity(p.n);

  Steps st = select_steps(p, d, s, start);
  SchemeRun prev = run_scheme(p, s, st);
  r.energy_stable = prev.energy_stable;
  for (std::size_t N = start + 1; N <= cap; ++N) {
    Steps fine_steps = select_steps(p, d, s, N);
    SchemeRun fine = run_scheme(p, s, fine_steps);
    r.energy_stable = r.energy_stable && fine.energy_stable;
    const Rational gap = refinement_gap(prev.grid, fine.grid, d, eye);
    r.history.emplace_back(N, gap);
    r.aposteriori_gap = gap;
    r.steps = fine_steps;
    r.solution = std::move(fine.grid);
    if (gap < target) {
      r.status = SolveStatus::certified;
      return r;
    }
    prev.grid = r.solution;
  }
  return r;
}

}  // namespace exactreal
