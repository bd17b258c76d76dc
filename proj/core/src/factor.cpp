/*
   Copyright 2026 The wug authors

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

#include "wug/factor.hpp"

#include <algorithm>
#include <random>

namespace wug {
namespace {

// h(T) with every exponent divided by p, coefficients replaced by p-th roots.
// Valid only when h is supported on multiples of p.
Poly pth_root_poly(const Poly& h) {
  const FqField& F = h.field();
  int p = F.p();
  Poly r(F);
  for (int i = 0; i * p <= h.degree(); ++i) r.set_coeff(i, h.coeff(i * p).pth_root());
  return r;
}

// Squarefree decomposition (Yun, adapted to characteristic p): returns list of
// (squarefree g_i, exponent e_i) with f = prod g_i^(e_i) up to a unit.
void squarefree(const Poly& f, int outer, std::vector<std::pair<Poly, int>>& out) {
  const FqField& F = f.field();
  int p = F.p();
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    // f = h(T^p) = (pth_root h)^p
    squarefree(pth_root_poly(f), outer * p, out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  int e = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), e * outer});
    c = c / y;
    w = y;
    ++e;
  }
  if (c.degree() > 0) squarefree(c, outer, out);
}

// random polynomial of degree < n, from a deterministic engine
Poly random_poly(const FqField& F, int n, std::mt19937_64& rng) {
  Poly r(F);
  for (int i = 0; i < n; ++i) r.set_coeff(i, F.by_index(static_cast<long long>(rng() % static_cast<unsigned long long>(F.q()))));
  return r;
}

// Equal-degree factorization: f squarefree, all factors of degree d.
void edf(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const FqField& F = f.field();
  int n = f.degree();
  if (n == d) {
    out.push_back(f.monic());
    return;
  }
  long long q = F.q();
  Poly one = Poly::constant(F.one());
  for (;;) {
    Poly r = random_poly(F, n, rng);
    if (r.degree() < 1) continue;
    Poly g = gcd(r, f);
    if (g.degree() > 0 && g.degree() < n) {
      edf(g, d, rng, out);
      edf(f / g, d, rng, out);
      return;
    }
    Poly split(F);
    if (q % 2 == 1) {
      // r^((q^d-1)/2) - 1 mod f
      long long e = 1;
      // q^d may overflow for large deg; our use stays tiny, but guard anyway
      long double chk = 1;
      for (int i = 0; i < d; ++i) chk *= static_cast<long double>(q);
      if (chk > 1e17) fail(errc::internal, "equal-degree split exponent too large");
      for (int i = 0; i < d; ++i) e *= q;
      split = powmod(r, (e - 1) / 2, f) - one;
    } else {
      // trace map sum_{i<k*d} r^(2^i) mod f, where q = 2^k
      int k = 0;
      while ((1LL << k) < q) ++k;
      Poly t(F), ri = r % f;
      for (int i = 0; i < k * d; ++i) {
        t = (t + ri) % f;
        ri = (ri * ri) % f;
      }
      split = t;
    }
    g = gcd(split, f);
    if (g.degree() > 0 && g.degree() < n) {
      edf(g, d, rng, out);
      edf(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyFactor> factor(const Poly& f) {
  if (f.is_zero()) fail(errc::zero_input, "factor(0)");
  std::vector<PolyFactor> out;
  if (f.degree() == 0) return out;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(f.monic(), 1, sqf);

  // deterministic seed from the polynomial
  uint64_t seed = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i <= f.degree(); ++i)
    seed = seed * 1099511628211ull + static_cast<uint64_t>(f.coeff(i).lex_index()) + 17u;
  std::mt19937_64 rng(seed);

  for (auto& [g, e] : sqf) {
    // distinct-degree on squarefree g
    Poly rem = g;
    Poly x = Poly::T(g.field());
    Poly h = x;  // x^(q^d) mod rem, maintained incrementally
    int d = 0;
    while (rem.degree() > 0) {
      ++d;
      if (2 * d > rem.degree()) {
        out.push_back({rem.monic(), e});
        break;
      }
      h = powmod(h, g.field().q(), rem);
      Poly gd = gcd(h - x, rem);
      if (gd.degree() > 0) {
        std::vector<Poly> eq;
        edf(gd, d, rng, eq);
        for (auto& irr : eq) out.push_back({irr, e});
        rem = rem / gd;
        h = h % rem;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    return Poly::cmp(a.p, b.p) < 0;
  });
  // merge duplicates (possible when squarefree parts repeat across exponents)
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().p == pf.p)
      merged.back().mult += pf.mult;
    else
      merged.push_back(pf);
  }
  return merged;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].mult == 1;
}

std::vector<Poly> monic_irreducibles(const FqField& F, int deg) {
  std::vector<Poly> out;
  long long count = 1;
  for (int i = 0; i < deg; ++i) {
    count *= F.q();
    if (count > 2'000'000) fail(errc::precondition_violated, "place enumeration too large");
  }
  for (long long idx = 0; idx < count; ++idx) {
    Poly f(F);
    long long t = idx;
    for (int i = 0; i < deg; ++i) {
      f.set_coeff(i, F.by_index(t % F.q()));
      t /= F.q();
    }
    f.set_coeff(deg, F.one());
    if (deg == 1 || is_irreducible(f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return Poly::cmp(a, b) < 0; });
  return out;
}

}  // namespace wug
