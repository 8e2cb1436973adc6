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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <mpfr.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <random>
#include <sstream>
#include <string>

#include "exactreal/cauchy/cauchy.hpp"
#include "exactreal/cli/cli.hpp"
#include "exactreal/closure/algebraic_real.hpp"
#include "exactreal/closure/number_field.hpp"
#include "exactreal/linalg/complex_linalg.hpp"
#include "exactreal/linalg/matrix.hpp"
#include "exactreal/linalg/pencil.hpp"
#include "exactreal/linalg/spectral.hpp"
#include "exactreal/pde/solver.hpp"
#include "exactreal/roots/isolate.hpp"

using namespace exactreal;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
Rational eps(std::size_t k) { return pow2(-static_cast<long>(k)); }

// Records the first failed check and counts the rest.
struct Outcome {
  bool ok = true;
  std::size_t failures = 0, checks = 0;
  std::string first, detail;

  void require(bool c, const std::string& what) {
    ++checks;
    if (c) return;
    ++failures;
    if (ok) first = what;
    ok = false;
  }
};

QPoly qpoly(const std::vector<long>& c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

Matrix<AlgebraicReal> AM(const Matrix<Rational>& m) {
  return m.map<AlgebraicReal>([](const Rational& x) { return AlgebraicReal(x); });
}

// ---------------------------------------------------------------- 1

void minimal_polynomials(Outcome& o) {
  using clock = std::chrono::steady_clock;
  const AlgebraicReal r2 = sqrt(AlgebraicReal(2)), r3 = sqrt(AlgebraicReal(3));
  auto t0 = clock::now();
  const QPoly s = (r2 + r3).minimal_polynomial();
  const double ts = std::chrono::duration<double>(clock::now() - t0).count();
  t0 = clock::now();
  const QPoly p = (r2 * r3).minimal_polynomial();
  const double tp = std::chrono::duration<double>(clock::now() - t0).count();
  o.require(s == qpoly({1, 0, -10, 0, 1}), "minpoly(sqrt2 + sqrt3) = x^4 - 10x^2 + 1");
  o.require(p == qpoly({-6, 0, 1}), "minpoly(sqrt2 sqrt3) = x^2 - 6");
  o.require(ts < 1.0 && tp < 1.0, "each minimal polynomial in under 1 s");
  std::ostringstream d;
  d << "sum " << ts << " s, product " << tp << " s";
  o.detail = d.str();
}

// ---------------------------------------------------------------- 2

// Sturm count on (a, b] by signed remainders, independent of the library chain.
std::size_t oracle_sturm(const QPoly& p, const Rational& a, const Rational& b) {
  std::vector<QPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto var = [&](const Rational& c) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& q : seq) {
      const int s = q.eval(c).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return var(a) - var(b);
}

void isolation_suite(Outcome& o) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> deg(1, 6), coef(-100, 100);
  std::size_t polys = 0, roots = 0;
  while (polys < 200) {
    const int d = deg(rng);
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(coef(rng));
    if (c.back().is_zero()) c.back() = Rational(1);
    const QPoly p(c);
    if (gcd(p, p.derivative()).deg() > 0) continue;
    ++polys;
    const Rational bound = root_bound(p).bound;
    const std::size_t total = oracle_sturm(p, -bound, bound);
    for (const Rational& e : {R(1), R(1, 8), R(1, 64)}) {
      const auto iv = isolate_real_roots(p, e);
      o.require(iv.size() == total, "interval count equals the Sturm count on (-bound, bound]");
      for (std::size_t i = 0; i < iv.size(); ++i) {
        o.require(iv[i].lo < iv[i].hi && iv[i].width() <= e, "interval width within eps");
        o.require(oracle_sturm(p, iv[i].lo, iv[i].hi) == 1, "one root per interval");
        o.require(sturm_count(p, iv[i].lo, iv[i].hi) == 1, "library Sturm count is one per interval");
        if (i > 0) o.require(iv[i - 1].hi <= iv[i].lo, "intervals ordered and disjoint");
      }
      roots += iv.size();
    }
  }
  o.detail = std::to_string(polys) + " polynomials, " + std::to_string(roots) + " intervals";
}

// ---------------------------------------------------------------- 3

// p + q r with r = d^(1/k), k in {1, 2, 3}
struct Sample {
  Rational p, q;
  long d;
  int k;
};

AlgebraicReal build(const Sample& s) {
  AlgebraicReal r(s.d);
  if (s.k == 2) r = sqrt(AlgebraicReal(s.d));
  if (s.k == 3) r = *AlgebraicReal::from_root_index(qpoly({-s.d, 0, 0, 1}), 0);
  return AlgebraicReal(s.p) + AlgebraicReal(s.q) * r;
}

struct Mpfr {
  mpfr_t v;
  Mpfr() { mpfr_init2(v, 128); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  Rational exact() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v);
    return Rational(q);
  }
};

// 128-bit directed-rounding enclosure of a sample
RInterval oracle_enclosure(const Sample& s) {
  Mpfr rl, rh, a, b, lo, hi;
  mpfr_set_si(rl.v, s.d, MPFR_RNDD);
  mpfr_set_si(rh.v, s.d, MPFR_RNDU);
  if (s.k == 2) {
    mpfr_sqrt(rl.v, rl.v, MPFR_RNDD);
    mpfr_sqrt(rh.v, rh.v, MPFR_RNDU);
  } else if (s.k == 3) {
    mpfr_cbrt(rl.v, rl.v, MPFR_RNDD);
    mpfr_cbrt(rh.v, rh.v, MPFR_RNDU);
  }
  mpfr_mul_q(a.v, rl.v, s.q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(b.v, rh.v, s.q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_min(lo.v, a.v, b.v, MPFR_RNDD);
  mpfr_mul_q(a.v, rl.v, s.q.raw().get_mpq_t(), MPFR_RNDU);
  mpfr_mul_q(b.v, rh.v, s.q.raw().get_mpq_t(), MPFR_RNDU);
  mpfr_max(hi.v, a.v, b.v, MPFR_RNDU);
  mpfr_add_q(lo.v, lo.v, s.p.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(hi.v, hi.v, s.p.raw().get_mpq_t(), MPFR_RNDU);
  return {lo.exact(), hi.exact()};
}

void ordering_oracle(Outcome& o) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9), rad(2, 30), kind(1, 3), mode(0, 3);
  auto sample = [&] {
    const int k = kind(rng);
    long d = rad(rng);
    if (k == 3 && num(rng) < 0) d = -d;
    Rational q = R(num(rng), den(rng));
    if (q.is_zero()) q = Rational(1);
    return Sample{R(num(rng), den(rng)), q, d, k};
  };
  std::size_t decided = 0, equal = 0;
  for (int it = 0; it < 50; ++it) {
    const Sample sa = sample();
    Sample sb = sample();
    bool same = false;
    switch (mode(rng)) {
      case 0:  // same radical, different rationals: close but distinct or equal
        sb.d = sa.d;
        sb.k = sa.k;
        if (it % 2 == 0) {
          sb = sa;
          same = true;
        }
        break;
      case 1:  // tiny rational offset
        sb = sa;
        sb.p = sa.p + eps(60);
        break;
      default:
        break;
    }
    const AlgebraicReal a = build(sa);
    // equal pairs are built through a different expression
    const AlgebraicReal b = same ? (build(sb) + build(sb)) * AlgebraicReal(R(1, 2)) : build(sb);
    const RInterval ea = oracle_enclosure(sa), eb = oracle_enclosure(sb);
    const auto c = compare(a, b);
    if (same) {
      ++equal;
      o.require(c == std::strong_ordering::equal, "equal-by-construction pair compares eq");
    } else if (ea.hi < eb.lo) {
      ++decided;
      o.require(c == std::strong_ordering::less, "compare agrees with the 128-bit oracle (lt)");
    } else if (eb.hi < ea.lo) {
      ++decided;
      o.require(c == std::strong_ordering::greater, "compare agrees with the 128-bit oracle (gt)");
    } else {
      o.require(false, "oracle could not separate a pair that is not equal by construction");
    }
    for (const auto& [x, e] : {std::pair{a, ea}, std::pair{b, eb}}) {
      const Rational ap = x.approx(40);
      o.require(e.lo - eps(40) <= ap && ap <= e.hi + eps(40), "approx(a, 40) within 2^-40 of the oracle");
    }
  }
  const AlgebraicReal r2 = sqrt(AlgebraicReal(2)), r3 = sqrt(AlgebraicReal(3));
  o.require(compare((r2 + r3) * (r3 - r2), AlgebraicReal(1)) == std::strong_ordering::equal,
            "(sqrt2 + sqrt3)(sqrt3 - sqrt2) = 1");
  o.detail = std::to_string(decided) + " separated pairs, " + std::to_string(equal) + " equal pairs";
}

// ---------------------------------------------------------------- 4, 5

// Image of x (in the field of `from`) inside `joint` given the image of from's generator.
NFElem push(const NFElem& x, const NFElem& gen_image) {
  if (x.is_rational()) return NFElem(x.rep().coeff(0));
  NFElem acc;
  for (std::size_t i = x.rep().size(); i-- > 0;) acc = acc * gen_image + NFElem(x.rep()[i]);
  return acc;
}

NFElem dot(const std::vector<NFElem>& u, const Matrix<Rational>* q, const std::vector<NFElem>& v) {
  NFElem s;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      const Rational w = q ? (*q)(i, j) : Rational(i == j ? 1 : 0);
      if (!w.is_zero()) s += NFElem(w) * u[i] * v[j];
    }
  return s;
}

std::vector<NFElem> mat_vec(const Matrix<Rational>& m, const std::vector<NFElem>& v) {
  std::vector<NFElem> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[i] += NFElem(m(i, j)) * v[j];
  return out;
}

// Checks that the materialized vector equals sigma w / sqrt(norm) coordinatewise.
bool matches_field_form(const std::vector<AlgebraicReal>& v, const FieldEigenpair& e) {
  int sigma = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const int sw = e.w[k].sign();
    if (sigma == 0 && sw != 0) sigma = sw;
    if (sw == 0) {
      if (!is_zero(v[k])) return false;
      continue;
    }
    const AlgebraicReal mag = sqrt((e.w[k] * e.w[k] / e.norm).to_algebraic());
    if (!(v[k] == (sw * sigma > 0 ? mag : -mag))) return false;
  }
  return sigma != 0;
}

// Bilinear forms u^T Q v for u, v taken from two field eigenpairs, computed
// exactly in a field containing both.
std::vector<NFElem> cross_forms(const FieldEigenpair& a, const FieldEigenpair& b,
                                const std::vector<const Matrix<Rational>*>& qs) {
  std::vector<NFElem> wa = a.w, wb = b.w;
  if (a.field != b.field) {
    std::vector<AlgebraicReal> gens;
    if (a.field) gens.push_back(a.field->theta());
    if (b.field) gens.push_back(b.field->theta());
    if (!gens.empty()) {
      const NumberFieldEmbedding j = as_number_field(gens);
      std::size_t g = 0;
      const NFElem ia = a.field ? j.images[g++] : NFElem(), ib = b.field ? j.images[g++] : NFElem();
      for (auto& x : wa) x = push(x, ia);
      for (auto& x : wb) x = push(x, ib);
    }
  }
  std::vector<NFElem> out;
  for (const auto* q : qs) out.push_back(dot(wa, q, wb));
  return out;
}

void spectral_exactness(Outcome& o) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> dim(1, 4), ent(-9, 9);
  std::size_t pairs = 0, irrational = 0;
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = it < 8 ? 4 : static_cast<std::size_t>(dim(rng));
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = Rational(ent(rng));
    const auto d = spectral_decomposition(AM(a));
    o.require(d.eigenvalues.size() == n && d.exact.size() == n, "n eigenpairs");
    if (d.exact.size() != n) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const FieldEigenpair& e = d.exact[i];
      if (!d.eigenvalues[i].is_rational()) ++irrational;
      o.require(e.lambda.to_algebraic() == d.eigenvalues[i], "field eigenvalue equals the reported eigenvalue");
      const auto aw = mat_vec(a, e.w);
      for (std::size_t k = 0; k < n; ++k) o.require(aw[k] == e.lambda * e.w[k], "A v = lambda v");
      o.require(dot(e.w, nullptr, e.w) == e.norm && !e.norm.is_zero(), "<v, v> = 1");
      o.require(matches_field_form(d.eigenvectors[i], e), "reported vector equals w / sqrt(norm)");
      for (std::size_t j = 0; j < i; ++j) {
        ++pairs;
        o.require(cross_forms(d.exact[j], e, {nullptr})[0].is_zero(), "<v_i, v_j> = 0");
      }
    }
    // V orthogonal and A V = V diag(lambda) give V diag(lambda) V^T = A; the
    // certified trace reconstruction checks the same identity directly.
    const auto l = lift_matrices({AM(a)});
    const auto s = symmetric_eigen_structure(l.matrices[0], l.ctx);
    certify_structure(s);
    o.require(reconstruct(s, 1) == l.matrices[0], "sum lambda v v^T = A");
    o.require(reconstruct(s, 0) == Matrix<NFElem>::identity(n), "sum v v^T = I");
  }
  o.detail = std::to_string(pairs) + " cross pairs, " + std::to_string(irrational) + " irrational eigenvalues";
}

// Multiplicity of the root r of p.
std::size_t multiplicity(QPoly p, const AlgebraicReal& r) {
  std::size_t m = 0;
  while (!p.is_zero() && sign_of_poly_at(p, r) == 0) {
    ++m;
    p = p.derivative();
  }
  return m;
}

void pencil_exactness(Outcome& o) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 3), ent(-3, 3);
  std::size_t columns = 0;
  for (int it = 0; it < 10; ++it) {
    const std::size_t n = it < 4 ? 3 : static_cast<std::size_t>(dim(rng));
    Matrix<Rational> pm(n, n), b(n, n);
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j) pm(i, j) = R(ent(rng), 2);
    const Matrix<Rational> a = pm.transpose() * pm + Matrix<Rational>::identity(n);
    do {
      for (auto i = 0u; i < n; ++i)
        for (auto j = i; j < n; ++j) b(i, j) = b(j, i) = Rational(ent(rng));
    } while (det(b).is_zero());
    const auto p = pencil_decomposition(AM(a), AM(b));
    o.require(p.mu.size() == n && p.t_exact.size() == n, "n pencil eigenpairs");
    if (p.t_exact.size() != n) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const FieldEigenpair& e = p.t_exact[i];
      ++columns;
      o.require(e.lambda.to_algebraic() == p.mu[i], "field eigenvalue equals mu");
      const std::vector<NFElem> bw = mat_vec(b, e.w), aw = mat_vec(a, e.w);
      for (std::size_t k = 0; k < n; ++k) o.require(bw[k] == e.lambda * aw[k], "B t = mu A t");
      o.require(dot(e.w, &a, e.w) == e.norm, "(T^T A T)_ii = 1");
      o.require(dot(e.w, &b, e.w) == e.lambda * e.norm, "(T^T B T)_ii = mu_i");
      o.require(matches_field_form(p.t[i], e), "reported column equals w / sqrt(norm)");
      for (std::size_t j = 0; j < i; ++j) {
        const auto f = cross_forms(p.t_exact[j], e, {&a, &b});
        o.require(f[0].is_zero(), "(T^T A T)_ij = 0");
        o.require(f[1].is_zero(), "(T^T B T)_ij = 0");
      }
    }
    const QPoly chi = char_poly(inverse(a) * b);
    std::size_t total = 0;
    for (const auto& r : AlgebraicReal::real_roots(chi)) {
      const std::size_t m = multiplicity(chi, r);
      total += m;
      o.require(static_cast<std::size_t>(std::count(p.mu.begin(), p.mu.end(), r)) == m,
                "mu multiplicity matches char_poly(A^-1 B)");
    }
    o.require(total == n, "char_poly(A^-1 B) has n real roots with multiplicity");
  }
  o.detail = std::to_string(columns) + " columns of T";
}

// ---------------------------------------------------------------- 6

using AC = AlgebraicComplex;

void jordan_exactness(Outcome& o) {
  struct Case {
    std::string name;
    std::vector<std::pair<AC, std::size_t>> blocks;
    Matrix<Rational> s;
  };
  auto qm = [](std::vector<std::vector<long>> rows) {
    Matrix<Rational> m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Rational(rows[i][j]);
    return m;
  };
  const AC r2(sqrt(AlgebraicReal(2)));
  const std::vector<Case> cases = {
      {"2x2 single block", {{AC(1), 2}}, qm({{1, 2}, {1, 3}})},
      {"3x3 nilpotent block", {{AC(0), 3}}, qm({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})},
      {"4x4 nilpotent block", {{AC(0), 4}}, qm({{1, 0, 1, 0}, {2, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}})},
      {"3x3 mixed", {{AC(-1), 1}, {AC(2), 2}}, qm({{2, 1, 0}, {1, 1, 1}, {0, 1, 3}})},
      {"4x4 mixed", {{AC(1), 1}, {AC(1), 2}, {AC(2), 1}},
       qm({{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 1, 1}})},
      {"4x4 two equal blocks", {{AC(3), 2}, {AC(3), 2}}, qm({{1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 2}})},
      {"4x4 nilpotent 2+2", {{AC(0), 2}, {AC(0), 2}}, qm({{2, 1, 0, 0}, {1, 1, 0, 1}, {0, 0, 1, 0}, {1, 0, 1, 1}})},
      {"2x2 irrational", {{r2, 2}}, qm({{3, 1}, {2, 1}})},
      {"4x4 complex pair", {{-AC::i(), 2}, {AC::i(), 2}}, qm({{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}})},
  };
  for (const auto& c : cases) {
    const std::size_t n = c.s.rows();
    Matrix<AC> j0(n, n);
    std::size_t at = 0;
    for (const auto& [ev, size] : c.blocks) {
      for (std::size_t k = 0; k < size; ++k) {
        j0(at + k, at + k) = ev;
        if (k + 1 < size) j0(at + k, at + k + 1) = AC(1);
      }
      at += size;
    }
    const auto s = c.s.map<AC>([](const Rational& x) { return AC(AlgebraicReal(x)); });
    const Matrix<AC> m = s * j0 * inverse(s);
    const JordanForm jf = jordan_form(m);
    o.require(inverse(jf.C) * jf.J * jf.C == m, c.name + ": C^-1 J C = M");
    std::vector<std::pair<AC, std::size_t>> got;
    for (const auto& b : jf.blocks) got.emplace_back(b.eigenvalue, b.size);
    auto key = [](const std::pair<AC, std::size_t>& x) { return to_string(x.first) + "/" + std::to_string(x.second); };
    std::multiset<std::string> want_keys, got_keys;
    for (const auto& x : c.blocks) want_keys.insert(key(x));
    for (const auto& x : got) got_keys.insert(key(x));
    o.require(want_keys == got_keys, c.name + ": block structure as constructed");
    // J is block diagonal with the reported blocks in order
    Matrix<AC> jj(n, n);
    at = 0;
    for (const auto& [ev, size] : got) {
      for (std::size_t k = 0; k < size && at + k < n; ++k) {
        jj(at + k, at + k) = ev;
        if (k + 1 < size) jj(at + k, at + k + 1) = AC(1);
      }
      at += size;
    }
    o.require(at == n && jj == jf.J, c.name + ": J matches its block list");
  }
  o.detail = std::to_string(cases.size()) + " matrices";
}

// ---------------------------------------------------------------- 7

Rational bump(const Rational& x) { return x * x * (Rational(1) - x) * (Rational(1) - x); }

HyperbolicProblem model_problem() {
  HyperbolicProblem p;
  p.m = 1;
  p.n = 2;
  p.A = Matrix<AlgebraicReal>::identity(2);
  p.B = {AM(Matrix<Rational>::from_rows({{R(0), R(1)}, {R(1), R(0)}}))};
  MPoly phi1(1);
  const std::vector<long> c = {0, 0, 1, -2, 1};
  for (unsigned k = 0; k < c.size(); ++k) phi1.add_term({k}, Rational(c[k]));
  p.phi = {phi1, MPoly(1)};
  p.M = Rational(26);
  p.a = 4;
  return p;
}

// Method of characteristics: u1 +- u2 travel with speed +-1.
std::vector<Rational> characteristics(const Rational& t, const Rational& x) {
  const Rational l = bump(x - t), r = bump(x + t);
  return {(l + r) / Rational(2), (l - r) / Rational(2)};
}

double sl2_error(const GridFunction& g, const DomainH& d) {
  double worst = 0;
  for (std::size_t l = 0; l < g.levels.size(); ++l) {
    const Rational t = g.tau * Rational(static_cast<long>(l));
    Rational sum;
    for (std::size_t f = 0; f < g.levels[l].size(); ++f) {
      const auto x = g.center(f);
      if (!d.contains(t, x)) continue;
      const auto ex = characteristics(t, x[0]);
      for (std::size_t k = 0; k < 2; ++k) {
        const Rational e = g.levels[l][f][k].rational_value() - ex[k];
        sum += e * e;
      }
    }
    worst = std::max(worst, (sum * g.h).to_double());
  }
  return std::sqrt(worst);
}

void pde_solve(Outcome& o) {
  HyperbolicProblem p = model_problem();
  const SolveReport r = solve(p);
  o.require(r.status == SolveStatus::certified, "status certified");
  const DomainH d = compute_domain(p);
  const double err = sl2_error(r.solution, d);
  o.require(err < 0.25, "sL2 error on H below 1/4");
  const SchemeData s = scheme_data(p, d);
  std::vector<double> errs;
  for (std::size_t N = 4; N <= 6; ++N) errs.push_back(sl2_error(run_scheme(p, s, select_steps(p, d, s, N)).grid, d));
  std::ostringstream det;
  det << "N=" << r.steps.N << " error " << err << ", orders";
  for (std::size_t k = 0; k + 1 < errs.size(); ++k) {
    const double order = std::log2(errs[k] / errs[k + 1]);
    det << ' ' << order;
    o.require(order >= 0.7 && order <= 1.3, "convergence order in [0.7, 1.3]");
  }
  // unit CFL: every level is the exact shift of the cell averages
  p.options.cfl_factor = R(1);
  const Steps st = select_steps(p, d, s, 5);
  o.require(st.tau == st.h, "unit CFL gives tau = h");
  const SchemeRun run = run_scheme(p, s, st);
  const long cells = 32;
  auto phi_cell = [&](long k) { return bump(std::clamp((Rational(k) + R(1, 2)) * st.h, Rational(0), Rational(1))); };
  for (std::size_t l = 0; l <= st.L; ++l)
    for (long jx = 0; jx < cells; ++jx) {
      const Rational a = phi_cell(jx - static_cast<long>(l)), b = phi_cell(jx + static_cast<long>(l));
      const auto& cell = run.grid.levels[l][static_cast<std::size_t>(jx)];
      o.require(cell[0] == NFElem((a + b) / Rational(2)) && cell[1] == NFElem((a - b) / Rational(2)),
                "unit-CFL exact shift cellwise");
    }
  o.detail = det.str();
}

// ---------------------------------------------------------------- 8

bool fast_cauchy_prefix(const FastCauchyReal& x, std::size_t upto) {
  for (std::size_t n = 0; n < upto; ++n)
    if ((x(n) - x(n + 1)).abs() >= eps(n)) return false;
  return true;
}

void cauchy_suite(Outcome& o) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> num(-50, 50), jump_at(0, 60), kind(0, 3);
  std::vector<FastCauchyReal> made;
  for (int it = 0; it < 100; ++it) {
    const Rational base = R(num(rng), 7);
    const int j = jump_at(rng), k = kind(rng);
    const RationalSequence p([=](std::size_t n) {
      Rational v = base + (k == 0 ? eps(n + 1) : -eps(n + 2));
      if (k == 2 && static_cast<int>(n) > j) v += R(1);
      if (k == 3) v = base + R(static_cast<long>(n % 3), 1);
      return v;
    });
    const FastCauchyReal t = tilde(p);
    const FastCauchyReal tt = tilde(t.seq());
    bool same = true;
    for (std::size_t n = 0; n <= 64; ++n) same = same && t(n) == tt(n);
    o.require(same, "tilde is idempotent");
    o.require(fast_cauchy_prefix(t, 64), "tilde output is fast Cauchy");
    made.push_back(t);
  }
  for (std::size_t i = 0; i + 1 < made.size(); i += 10) {
    const FastCauchyReal &x = made[i], &y = made[i + 1];
    for (const auto& r : {add(x, y), sub(x, y), mul(x, y)}) o.require(fast_cauchy_prefix(r, 64), "operation output is fast Cauchy");
  }
  const FastCauchyReal e = embed(sqrt(AlgebraicReal(2)));
  o.require(fast_cauchy_prefix(e, 64), "embedding is fast Cauchy");
  o.require(fast_cauchy_prefix(reciprocal_bounded(add(e, FastCauchyReal::constant(1)), 1), 64), "reciprocal is fast Cauchy");
  const FastCauchyReal inv = reciprocal_bounded(FastCauchyReal::constant(R(1, 3)), 2);
  o.require(fast_cauchy_prefix(inv, 64), "reciprocal of 1/3 is fast Cauchy");
  for (std::size_t n = 25; n <= 64; ++n) o.require((inv(n) - Rational(3)).abs() <= eps(20), "1/(1/3) within 2^-20 of 3 from index 25");
  o.detail = "100 sequences, prefixes to index 64";
}

// ---------------------------------------------------------------- 9

void continued_fractions(Outcome& o) {
  const auto cf = continued_fraction(sqrt(AlgebraicReal(2)), 6);
  o.require(cf == std::vector<Integer>{1, 2, 2, 2, 2, 2}, "continued_fraction(sqrt2, 6) = [1,2,2,2,2,2]");
  o.require(floor(-sqrt(AlgebraicReal(2))) == -2, "floor(-sqrt2) = -2");
}

// ---------------------------------------------------------------- 10

struct Run {
  int code;
  std::string out;
};

Run call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void cli_determinism(Outcome& o) {
  const std::string fx = EXACTREAL_FIXTURES;
  const std::string tmp = std::string(EXACTREAL_SCRATCH) + "/acceptance_";
  const std::vector<std::vector<std::string>> cmds = {
      {"isolate", "--poly", "[-6,11,-6,1]", "--eps", "1/64"},
      {"roots", "--poly", "[-2,0,0,1]"},
      {"roots", "--poly", "[1,0,1]", "--complex"},
      {"minpoly", "--value", R"({"add":[{"sqrt":2},{"sqrt":3}]})"},
      {"compare", "--a", R"({"sqrt":2})", "--b", R"({"poly":[-2,0,1],"root":1})"},
      {"approx", "--value", R"({"sqrt":3})", "--bits", "40"},
      {"approx", "--value", R"({"sqrt":3})", "--digits", "30"},
      {"eig", "--matrix", "[[2,1,0],[1,2,1],[0,1,2]]"},
      {"eig", "--matrix", R"([[0,{"re":0,"im":1}],[{"re":0,"im":-1},0]])", "--normal"},
      {"pencil", "--a", "[[2,1],[1,2]]", "--b", "[[0,1],[1,0]]", "--with-k"},
      {"jordan", "--matrix", "[[2,1,0],[0,2,0],[0,0,3]]"},
      {"cfrac", "--value", R"({"sqrt":7})", "--terms", "10"},
      {"solve-pde", fx + "/irrational_speeds.json", "--digits", "4"},
  };
  for (const auto& c : cmds) {
    const Run a = call(c), b = call(c);
    o.require(a.code == 0, c[0] + " succeeds");
    o.require(a.out == b.out && !a.out.empty(), c[0] + " output is byte-identical across runs");
  }
  // file outputs of the solver
  std::string files[2][3];
  for (int k = 0; k < 2; ++k) {
    const std::string base = tmp + std::to_string(k);
    const Run r = call({"solve-pde", fx + "/model_problem.json", "--out", base + ".csv", "--exact-out", base + ".json",
                        "--report", base + "_report.json"});
    o.require(r.code == 0, "solve-pde writes its files");
    files[k][0] = slurp(base + ".csv");
    files[k][1] = slurp(base + ".json");
    files[k][2] = slurp(base + "_report.json");
  }
  for (int f = 0; f < 3; ++f) o.require(!files[0][f].empty() && files[0][f] == files[1][f], "solve-pde files byte-identical");

  // every exact value printed by eig, pencil and roots parses back to an equal value
  const cli::Printer pr;
  std::size_t trips = 0;
  auto check_value = [&](const cli::json& j, const AlgebraicReal& expect) {
    ++trips;
    o.require(cli::parse_algebraic(j) == expect, "printed value parses back compare-eq");
  };
  const auto d = spectral_decomposition(AM(Matrix<Rational>::from_rows({{R(2), R(1), R(0)}, {R(1), R(2), R(1)}, {R(0), R(1), R(2)}})));
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
    check_value(cli::json::parse(pr.real(d.eigenvalues[i]).dump()), d.eigenvalues[i]);
    for (const auto& x : d.eigenvectors[i]) check_value(cli::json::parse(pr.real(x).dump()), x);
  }
  const Run roots = call({"roots", "--poly", "[-2,0,0,1,0,0,1]"});
  const auto direct = AlgebraicReal::real_roots(qpoly({-2, 0, 0, 1, 0, 0, 1}));
  const auto parsed = cli::json::parse(roots.out);
  o.require(parsed.size() == direct.size(), "roots prints every root");
  for (std::size_t i = 0; i < std::min(parsed.size(), direct.size()); ++i) check_value(parsed[i]["value"], direct[i]);
  const Run eig = call({"eig", "--matrix", "[[2,1,0],[1,2,1],[0,1,2]]"});
  const auto ej = cli::json::parse(eig.out);
  for (const auto& value : ej["eigenvalues"]) {
    const AlgebraicReal v = cli::parse_algebraic(value);
    o.require(std::count(d.eigenvalues.begin(), d.eigenvalues.end(), v) >= 1, "printed eigenvalue is an eigenvalue");
    ++trips;
  }
  const AC z(sqrt(AlgebraicReal(2)), AlgebraicReal(R(-1, 3)));
  o.require(cli::parse_complex(cli::json::parse(pr.complex(z).dump())) == z, "complex value round trip");
  o.detail = std::to_string(cmds.size()) + " subcommand runs, " + std::to_string(trips) + " round trips";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> all = {
      {1, "minimal polynomials", 2.0, minimal_polynomials},
      {2, "root isolation suite", 60.0, isolation_suite},
      {3, "ordering and approximation oracle", 60.0, ordering_oracle},
      {4, "spectral exactness", 300.0, spectral_exactness},
      {5, "pencil exactness", 300.0, pencil_exactness},
      {6, "Jordan exactness", 120.0, jordan_exactness},
      {7, "certified PDE solve", 300.0, pde_solve},
      {8, "Cauchy reals suite", 30.0, cauchy_suite},
      {9, "continued fractions", 1.0, continued_fractions},
      {10, "CLI determinism and round trip", 30.0, cli_determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.limit, "runtime limit");
    if (!o.ok) ++failed;
    std::printf("%s criterion %d (%s): %zu checks, %.2f s of %.0f s", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.checks, secs, c.limit);
    if (!o.detail.empty()) std::printf("; %s", o.detail.c_str());
    if (!o.ok) std::printf("; %zu failed, first: %s", o.failures, o.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
