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

#include "exactreal/core/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace exactreal {

namespace {

using u64 = std::uint64_t;
using ZPoly = std::vector<Integer>;
using Fp = std::vector<u64>;

// ---------------------------------------------------------------------------
// Arithmetic in Z/p[x]
// ---------------------------------------------------------------------------

struct ModP {
  u64 p;
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const Integer& z) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
  }
};

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const Fp& a) { return static_cast<int>(a.size()) - 1; }

Fp fp_sub(const Fp& a, const Fp& b, const ModP& m) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = m.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

Fp fp_mul(const Fp& a, const Fp& b, const ModP& m) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = m.add(r[i + j], m.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Fp fp_scale(const Fp& a, u64 s, const ModP& m) {
  Fp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = m.mul(a[i], s);
  trim(r);
  return r;
}

void fp_divmod(const Fp& a, const Fp& b, Fp& q, Fp& r, const ModP& m) {
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  const u64 inv = m.inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    const u64 c = m.mul(r[k], inv);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = m.sub(r[k - db + j], m.mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Fp fp_rem(const Fp& a, const Fp& b, const ModP& m) {
  Fp q, r;
  fp_divmod(a, b, q, r, m);
  return r;
}

Fp fp_quot(const Fp& a, const Fp& b, const ModP& m) {
  Fp q, r;
  fp_divmod(a, b, q, r, m);
  return q;
}

Fp fp_monic(const Fp& a, const ModP& m) {
  if (a.empty()) return a;
  return fp_scale(a, m.inv(a.back()), m);
}

Fp fp_gcd(Fp a, Fp b, const ModP& m) {
  while (!b.empty()) {
    Fp r = fp_rem(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, m);
}

// s*a + t*b = 1 for coprime a, b
void fp_bezout(const Fp& a, const Fp& b, Fp& s, Fp& t, const ModP& m) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Fp q, r;
    fp_divmod(r0, r1, q, r, m);
    Fp s2 = fp_sub(s0, fp_mul(q, s1, m), m);
    Fp t2 = fp_sub(t0, fp_mul(q, t1, m), m);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = m.inv(r0.back());
  s = fp_scale(s0, inv, m);
  t = fp_scale(t0, inv, m);
}

Fp fp_powmod(Fp base, const Integer& e, const Fp& mod, const ModP& m) {
  Fp result{1};
  base = fp_rem(base, mod, m);
  const std::size_t bits = bit_length(e);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_rem(fp_mul(result, result, m), mod, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_rem(fp_mul(result, base, m), mod, m);
  }
  return result;
}

Fp fp_derivative(const Fp& a, const ModP& m) {
  if (a.size() <= 1) return {};
  Fp r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = m.mul(a[i], i % m.p);
  trim(r);
  return r;
}

Fp to_fp(const ZPoly& z, const ModP& m) {
  Fp r(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) r[i] = m.reduce(z[i]);
  trim(r);
  return r;
}

// Distinct-degree factorization of a monic square-free f: list of (product, degree).
std::vector<std::pair<Fp, int>> distinct_degree(Fp f, const ModP& m) {
  std::vector<std::pair<Fp, int>> out;
  const Fp x{0, 1};
  Fp h = x;
  const Integer p(static_cast<unsigned long>(m.p));
  for (int d = 1; 2 * d <= fp_deg(f); ++d) {
    h = fp_powmod(h, p, f, m);
    Fp g = fp_gcd(f, fp_sub(h, x, m), m);
    if (fp_deg(g) > 0) {
      out.emplace_back(g, d);
      f = fp_quot(f, g, m);
      h = fp_rem(h, f, m);
    }
  }
  if (fp_deg(f) > 0) out.emplace_back(f, fp_deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting of a monic product of degree-d irreducibles.
void equal_degree(const Fp& g, int d, const ModP& m, std::mt19937_64& rng, std::vector<Fp>& out) {
  if (fp_deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), m.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, m.p - 1);
  for (;;) {
    Fp a(static_cast<std::size_t>(fp_deg(g)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (fp_deg(a) < 1) continue;
    Fp b = fp_sub(fp_powmod(a, e, g, m), Fp{1}, m);
    Fp h = fp_gcd(g, b, m);
    if (fp_deg(h) > 0 && fp_deg(h) < fp_deg(g)) {
      equal_degree(h, d, m, rng, out);
      equal_degree(fp_quot(g, h, m), d, m, rng, out);
      return;
    }
  }
}

std::vector<Fp> factor_mod_p(const Fp& monic_f, const ModP& m) {
  std::mt19937_64 rng(0x5eed5eedULL ^ m.p);
  std::vector<Fp> out;
  for (const auto& [g, d] : distinct_degree(monic_f, m)) equal_degree(g, d, m, rng, out);
  return out;
}

std::size_t count_factors_mod_p(const Fp& monic_f, const ModP& m) {
  std::size_t count = 0;
  for (const auto& [g, d] : distinct_degree(monic_f, m)) count += static_cast<std::size_t>(fp_deg(g) / d);
  return count;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers
// ---------------------------------------------------------------------------

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Integer z_content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly z_primitive(ZPoly a) {
  Integer g = z_content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Exact division test; on success writes the quotient.
bool z_divides(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
  if (den.size() > num.size()) return false;
  ZPoly r = num;
  quot.assign(num.size() - den.size() + 1, 0);
  const std::size_t dd = den.size() - 1;
  for (std::size_t k = r.size(); k-- > dd;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), den.back().get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), den.back().get_mpz_t());
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (r[i] != 0) return false;
  }
  trim(quot);
  return true;
}

Integer sym_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly z_from_fp(const Fp& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

ZPoly z_from_q(const QPoly& p) {
  Integer lcm_den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  ZPoly z;
  z.reserve(p.size());
  for (const auto& c : p.coefficients()) z.push_back(c.numerator() * (lcm_den / c.denominator()));
  return z_primitive(std::move(z));
}

QPoly q_from_z(const ZPoly& z) {
  std::vector<Rational> v;
  v.reserve(z.size());
  for (const auto& c : z) v.emplace_back(c);
  return QPoly(std::move(v));
}

// Linear Hensel lifting: f == lc * F * G (mod p) with F, G monic and coprime
// mod p becomes the same congruence mod p^k.  F, G keep non-negative residues.
void hensel_lift_pair(const ZPoly& f, ZPoly& F, ZPoly& G, const ModP& m, unsigned k) {
  const Integer lc = f.back();
  const u64 lc_inv = m.inv(m.reduce(lc));
  Fp s, t;
  const Fp Fbar = to_fp(F, m), Gbar = to_fp(G, m);
  fp_bezout(Fbar, Gbar, s, t, m);
  Integer pj = Integer(static_cast<unsigned long>(m.p));
  for (unsigned j = 1; j < k; ++j) {
    ZPoly prod = z_mul(F, G);
    ZPoly e(std::max(f.size(), prod.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer v = i < f.size() ? f[i] : Integer(0);
      if (i < prod.size()) v -= lc * prod[i];
      mpz_divexact(e[i].get_mpz_t(), v.get_mpz_t(), pj.get_mpz_t());
    }
    trim(e);
    const Fp ebar = fp_scale(to_fp(e, m), lc_inv, m);
    const Fp dF = fp_rem(fp_mul(ebar, t, m), Fbar, m);
    const Fp dG = fp_rem(fp_mul(ebar, s, m), Gbar, m);
    for (std::size_t i = 0; i < dF.size(); ++i) F[i] += pj * static_cast<unsigned long>(dF[i]);
    for (std::size_t i = 0; i < dG.size(); ++i) G[i] += pj * static_cast<unsigned long>(dG[i]);
    pj *= static_cast<unsigned long>(m.p);
  }
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> ps;
    const std::size_t limit = 20000;
    std::vector<bool> sieve(limit, true);
    for (std::size_t i = 2; i < limit; ++i) {
      if (!sieve[i]) continue;
      if (i > 2) ps.push_back(i);
      for (std::size_t j = i * i; j < limit; j += i) sieve[j] = false;
    }
    return ps;
  }();
  return primes;
}

// Zassenhaus factorization of a primitive square-free integer polynomial with
// positive leading coefficient and nonzero constant term.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};

  // prime selection: square-free image, lc not divisible; keep the one with fewest factors
  u64 best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (u64 p : small_primes()) {
    ModP m{p};
    if (m.reduce(f.back()) == 0) continue;
    Fp fbar = fp_monic(to_fp(f, m), m);
    if (fp_deg(fp_gcd(fbar, fp_derivative(fbar, m), m)) != 0) continue;
    const std::size_t c = count_factors_mod_p(fbar, m);
    if (best_p == 0 || c < best_count) {
      best_p = p;
      best_count = c;
    }
    if (c == 1) return {f};
    if (++tried >= 7) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for modular factorization");
  const ModP m{best_p};
  std::vector<Fp> modular = factor_mod_p(fp_monic(to_fp(f, m), m), m);
  if (modular.size() == 1) return {f};

  // Mignotte-style bound B = (sqrt(n+1)+1) * 2^n * max|f_i| * |lc|; need p^k > 2B
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer sq;
  mpz_sqrt(sq.get_mpz_t(), Integer(static_cast<unsigned long>(n + 1)).get_mpz_t());
  Integer bound = (sq + 1) * maxc * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  bound *= 2;
  unsigned k = 1;
  Integer pk(static_cast<unsigned long>(best_p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(best_p);
    ++k;
  }

  // multifactor lift by peeling one factor at a time
  std::vector<ZPoly> lifted;
  ZPoly target = f;
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    Fp rest{1};
    for (std::size_t j = i + 1; j < modular.size(); ++j) rest = fp_mul(rest, modular[j], m);
    ZPoly F = z_from_fp(modular[i]);
    ZPoly G = z_from_fp(rest);
    hensel_lift_pair(target, F, G, m, k);
    for (auto& c : F) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    for (auto& c : G) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    lifted.push_back(std::move(F));
    target = std::move(G);
  }
  lifted.push_back(std::move(target));

  // recombination over subsets of increasing size
  std::vector<ZPoly> result;
  ZPoly g = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      const Integer b = g.back();
      // cheap constant-term screen
      Integer c0 = b;
      for (std::size_t i : idx) c0 = sym_mod(c0 * lifted[i][0], pk);
      if (c0 != 0 && mpz_divisible_p(Integer(b * g[0]).get_mpz_t(), c0.get_mpz_t())) {
        ZPoly h{b};
        for (std::size_t i : idx) {
          h = z_mul(h, lifted[i]);
          for (auto& c : h) c = sym_mod(c, pk);
        }
        h = z_primitive(h);
        ZPoly q;
        if (z_divides(g, h, q)) {
          result.push_back(h);
          g = z_primitive(q);
          for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (g.size() > 1) result.push_back(g);
  return result;
}

}  // namespace

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

QPoly primitive_integer_form(const QPoly& p) {
  if (p.is_zero()) return p;
  return q_from_z(z_from_q(p));
}

std::vector<QPoly> irreducible_factors(const QPoly& square_free) {
  if (square_free.is_zero() || square_free.is_constant()) {
    throw std::domain_error("irreducible_factors needs a polynomial of positive degree");
  }
  std::vector<QPoly> out;
  ZPoly z = z_from_q(square_free);
  // strip a factor x
  if (z[0] == 0) {
    out.push_back(QPoly::x());
    std::size_t shift = 0;
    while (z[shift] == 0) ++shift;
    z.erase(z.begin(), z.begin() + static_cast<long>(shift));
  }
  if (z.size() > 1) {
    for (auto& f : zassenhaus(z)) out.push_back(q_from_z(f).monic());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

bool is_irreducible(const QPoly& p) {
  if (p.is_zero() || p.is_constant()) return false;
  if (p.deg() == 1) return true;
  if (square_free_part(p).deg() != p.deg()) return false;
  return irreducible_factors(p).size() == 1;
}

Factorization factor_rational(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  Factorization out;
  out.unit = p.leading();
  if (p.is_constant()) return out;
  const auto parts = square_free_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].is_constant()) continue;
    for (auto& f : irreducible_factors(parts[k])) out.factors.emplace_back(std::move(f), k + 1);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

QPoly Factorization::expand() const {
  QPoly acc = QPoly::constant(unit);
  for (const auto& [f, e] : factors) {
    for (std::size_t i = 0; i < e; ++i) acc *= f;
  }
  return acc;
}

}  // namespace exactreal
