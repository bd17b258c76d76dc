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

#include "wug/points.hpp"

#include <algorithm>

#include "wug/gflinalg.hpp"

namespace wug {
namespace {

int frob_exp(GroupKind k) {
  if (k == GroupKind::V) return 2;
  if (k == GroupKind::W) return 1;
  fail(errc::kind_unsupported, "point enumeration supports kinds V and W");
}

// y-extraction: y^(p^E) = rhs with rhs = (x - x^(p^E))/a for V and
// -(x + x^p)/a for W. Returns y if rhs is a p^E-th power.
std::optional<RatFn> solve_y(const GroupSpec& spec, const RatFn& x) {
  const FqField& F = *spec.F;
  int E = frob_exp(spec.kind);
  RatFn rhs(F);
  if (spec.kind == GroupKind::V)
    rhs = (x - x.frobenius(2)) / spec.a;
  else
    rhs = -(x + x.frobenius(1)) / spec.a;
  return is_pe_power(rhs, E);
}

}  // namespace

bool point_less(const Pt2<RatFn>& a, const Pt2<RatFn>& b) {
  int c = RatFn::cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return RatFn::cmp(a.y, b.y) < 0;
}

PoleBound pole_bounds(const GroupSpec& spec) {
  int E = frob_exp(spec.kind);
  const FqField& F = *spec.F;
  int p = F.p();
  long long pE = 1;
  for (int i = 0; i < E; ++i) pE *= p;

  PoleBound out{spec, {}, {}};
  // candidate places: supp(a), supp(da), infinity
  RatFn da = spec.a.derivative();
  if (da.is_zero()) fail(errc::internal, "a in k^p escaped validation");
  Divisor cand = support(spec.a);
  Divisor dsupp = support(da);
  for (auto& [v, n] : dsupp.terms()) cand.add(v, cand.coeff(v) == 0 ? n : 0);
  cand.add(Place::infinity(F), cand.coeff(Place::infinity(F)) == 0 ? 1 : 0);

  for (auto& [v, n0] : cand.terms()) {
    int orda = ord(spec.a, v);
    if (orda % pE != 0) {
      // p^E never divides ord_v(a): ord_v(x) < 0 is impossible here
      out.per_place.push_back({v, 0, "p^E does not divide ord_v(a)"});
      continue;
    }
    int ordda = ord_differential(spec.a, v);
    // ord_v(x)(p^E - 1) >= ord_v(a) - ord_v(da) - 1
    long long num = orda - ordda - 1;
    long long den = pE - 1;
    long long L = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    if (L < 0) {
      out.D.add(v, static_cast<int>(-L));
      out.per_place.push_back(
          {v, static_cast<int>(-L), "ord_v(dx) >= ord_v(x) - 1 differential bound"});
    } else {
      out.per_place.push_back({v, 0, "differential bound is nonnegative"});
    }
  }
  return out;
}

std::vector<Pt2<RatFn>> enumerate_points(const GroupSpec& spec) {
  const FqField& F = *spec.F;
  if (spec.kind == GroupKind::W && F.p() == 2)
    fail(errc::infinite_point_set, "W is a rational conic for p = 2: W(k) is infinite");
  PoleBound pb = pole_bounds(spec);

  // L(D) basis: polynomials T^i (i <= D_inf) and pi^-j T^r (j <= D_pi,
  // 0 <= r < deg pi)
  std::vector<RatFn> basis;
  basis.push_back(RatFn::from_int(F, 1));
  int dinf = pb.D.coeff(Place::infinity(F));
  for (int i = 1; i <= dinf; ++i) basis.push_back(RatFn(Poly::T(F)).pow(i));
  for (auto& [v, n] : pb.D.terms()) {
    if (v.is_infinity()) continue;
    for (int j = 1; j <= n; ++j)
      for (int r = 0; r < v.degree(); ++r)
        basis.push_back(RatFn(Poly::T(F)).pow(r) / RatFn(Poly(v.pi())).pow(j));
  }
  if (basis.size() > 14) fail(errc::precondition_violated, "L(D) space too large to enumerate");

  long long total = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    total *= F.q();
    if (total > 100'000'000LL) fail(errc::precondition_violated, "L(D) enumeration too large");
  }
  std::vector<Pt2<RatFn>> pts;
  for (long long idx = 0; idx < total; ++idx) {
    long long t = idx;
    RatFn x(F);
    for (auto& b : basis) {
      FqElem c = F.by_index(t % F.q());
      t /= F.q();
      if (!c.is_zero()) x += b * RatFn(Poly::constant(c));
    }
    auto y = solve_y(spec, x);
    if (y) pts.push_back({x, *y});
  }
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

std::vector<Pt2<RatFn>> brute_force_points(const GroupSpec& spec, int H) {
  const FqField& F = *spec.F;
  if (H < 0) fail(errc::precondition_violated, "height must be nonnegative");
  int E = frob_exp(spec.kind);
  int p = F.p();
  long long pE = 1;
  for (int i = 0; i < E; ++i) pE *= p;

  // Condition on x = n/d (gcd(n,d) = 1, d monic): with
  //   s(n) := (n d^(pE-1) +- n^(pE)) * Apow,  Apow := (anum aden^(pE-1))^(pE-1),
  // the point exists iff s(n) is supported on exponent multiples of pE
  // (Apow differs from anum^(pE-1) aden by a pE-th power, and constant signs
  // are pE-th powers, so membership is unchanged). The condition is
  // F_p-linear in n. Denominators are screened for a kernel larger than the
  // unavoidable constant family {c d : x = c constant on the curve}; the few
  // survivors get the full system, and every candidate is verified exactly.
  Poly A = spec.a.num() * spec.a.den().pow(pE - 1);
  Poly Apow = A.pow(pE - 1);
  int lowdeg = Apow.is_zero() ? 0 : Apow.multiplicity(Poly::T(F));

  std::vector<Pt2<RatFn>> pts;
  pts.push_back({RatFn(F), RatFn(F)});  // x = 0 -> y = 0

  int m = F.m();
  int ncoef = H + 1;
  int unknowns = ncoef * m;
  bool vkind = spec.kind == GroupKind::V;

  std::vector<FqElem> xi(static_cast<size_t>(m)), xipe(static_cast<size_t>(m));
  for (int l = 0; l < m; ++l) {
    std::vector<int> unit(static_cast<size_t>(m), 0);
    unit[static_cast<size_t>(l)] = 1;
    xi[static_cast<size_t>(l)] = F.from_coeffs(unit);
    xipe[static_cast<size_t>(l)] = xi[static_cast<size_t>(l)].pow(pE);
  }
  std::vector<FqElem> by_idx(static_cast<size_t>(F.q()));
  std::vector<FqElem> pe_tab(static_cast<size_t>(F.q()));   // x -> x^pE
  std::vector<FqElem> inv_tab(static_cast<size_t>(F.q()));  // x -> x^-1 (0 -> 0)
  for (long long i = 0; i < F.q(); ++i) {
    by_idx[static_cast<size_t>(i)] = F.by_index(i);
    pe_tab[static_cast<size_t>(i)] = by_idx[static_cast<size_t>(i)].pow(pE);
    inv_tab[static_cast<size_t>(i)] =
        i == 0 ? F.zero() : by_idx[static_cast<size_t>(i)].inverse();
  }

  // F_p-dimension of the constant solution family
  int trivdim = 0;
  {
    long long count = 0;
    for (long long i = 0; i < F.q(); ++i) {
      FqElem cst = by_idx[static_cast<size_t>(i)];
      FqElem val = vkind ? cst - cst.pow(pE) : cst + cst.pow(pE);
      if (val.is_zero()) ++count;
    }
    while (count > 1) {
      count /= p;
      ++trivdim;
    }
  }

  auto inv_fp = [p](int v) {
    int rr = 1, base = v % p, e = p - 2;
    while (e > 0) {
      if (e & 1) rr = rr * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return rr;
  };

  // row of conditions "coeff of T^e in s(n) = 0" as unknowns-wide F_p rows
  // (m rows per exponent, one per F_p-coordinate of the F_q coefficient);
  // lin_coeff(i) supplies (d^(pE-1) Apow)[i].
  auto emit_rows = [&](int e, auto&& lin_coeff, std::vector<uint8_t>& out) {
    size_t base = out.size();
    out.resize(base + static_cast<size_t>(m) * static_cast<size_t>(unknowns), 0);
    for (int ci = 0; ci < ncoef; ++ci) {
      FqElem la = lin_coeff(e - ci);
      FqElem fa = Apow.coeff(e - static_cast<int>(pE) * ci);
      bool laz = la.is_zero(), faz = fa.is_zero();
      if (laz && faz) continue;
      for (int l = 0; l < m; ++l) {
        FqElem ce = laz ? F.zero() : (l == 0 ? la : la * xi[static_cast<size_t>(l)]);
        if (!faz) {
          FqElem fr = l == 0 ? fa : fa * xipe[static_cast<size_t>(l)];
          ce = vkind ? ce - fr : ce + fr;
        }
        for (int mm = 0; mm < m; ++mm)
          out[base + static_cast<size_t>(mm) * static_cast<size_t>(unknowns) +
              static_cast<size_t>(ci * m + l)] = static_cast<uint8_t>(ce.coeff(mm));
      }
    }
  };

  // echelon machine over F_p rows of width `unknowns`; fixed-capacity
  // buffers so cloning the base state is a memcpy
  uint8_t fpinv[8] = {0};
  for (int v = 1; v < p; ++v)
    for (int w2 = 1; w2 < p; ++w2)
      if (v * w2 % p == 1) fpinv[v] = static_cast<uint8_t>(w2);
  struct Echelon {
    int p, width, rank = 0;
    const uint8_t* inv;
    std::vector<uint8_t> rows;  // capacity (width+2) rows, reduced
    std::vector<int> pivcol;
    Echelon(int p_, int w, const uint8_t* inv_) : p(p_), width(w), inv(inv_) {
      rows.assign(static_cast<size_t>(w + 2) * static_cast<size_t>(w), 0);
      pivcol.assign(static_cast<size_t>(w + 2), -1);
    }
    void clone_from(const Echelon& o) {
      rank = o.rank;
      std::copy(o.rows.begin(), o.rows.begin() + static_cast<long>(o.rank) * width, rows.begin());
      std::copy(o.pivcol.begin(), o.pivcol.begin() + o.rank, pivcol.begin());
    }
    // reduces r in place; returns true if the row increased the rank
    bool insert(uint8_t* r) {
      for (int i = 0; i < rank; ++i) {
        int c = pivcol[static_cast<size_t>(i)];
        int f = r[c];
        if (!f) continue;
        const uint8_t* pr = &rows[static_cast<size_t>(i) * width];
        for (int j = c; j < width; ++j) {
          int t = (r[j] - f * pr[j]) % p;
          r[j] = static_cast<uint8_t>(t < 0 ? t + p : t);
        }
      }
      int c = -1;
      for (int j = 0; j < width; ++j)
        if (r[j]) {
          c = j;
          break;
        }
      if (c < 0) return false;
      if (rank >= width + 2) return false;
      int piv = inv[r[c]];
      uint8_t* dst = &rows[static_cast<size_t>(rank) * width];
      for (int j = 0; j < width; ++j) dst[j] = static_cast<uint8_t>(r[j] * piv % p);
      pivcol[static_cast<size_t>(rank)] = c;
      ++rank;
      return true;
    }
  };
  // screening exponents: conditions below lowdeg are vacuous (both s-terms
  // are divisible by T^lowdeg), so start there
  int vwant = (unknowns - trivdim + m - 1) / m + 2;
  std::vector<int> var_exp;
  for (int e = std::max(lowdeg, 1); static_cast<int>(var_exp.size()) < vwant; ++e)
    if (e % pE != 0) var_exp.push_back(e);
  const int Kvar = var_exp.back() + 1;  // lin coefficients needed below Kvar
  const int Ldiv = Kvar - lowdeg;       // u^(pE-1) coefficients needed below Ldiv

  Echelon base_ech(p, unknowns, fpinv);
  Echelon work_ech(p, unknowns, fpinv);

  using Buf = std::vector<FqElem>;
  Buf u(static_cast<size_t>(std::max(Ldiv, H + 1)), F.zero());
  Buf upow(static_cast<size_t>(Ldiv), F.zero());
  Buf upe(static_cast<size_t>(Ldiv), F.zero());
  Buf w(static_cast<size_t>(Kvar), F.zero());
  std::vector<uint8_t> rowbuf;
  std::vector<uint8_t> MM;
  std::vector<int> pivot_of_col;
  std::vector<uint8_t> digits(static_cast<size_t>(H + 1), 0);

  // full-system elimination for the rare survivors
  auto eliminate = [&](std::vector<uint8_t>& M2, int rows) {
    pivot_of_col.assign(static_cast<size_t>(unknowns), -1);
    int r = 0;
    for (int c2 = 0; c2 < unknowns && r < rows; ++c2) {
      int sel = -1;
      for (int i = r; i < rows; ++i)
        if (M2[static_cast<size_t>(i) * unknowns + c2]) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      if (sel != r)
        for (int j = c2; j < unknowns; ++j)
          std::swap(M2[static_cast<size_t>(sel) * unknowns + j], M2[static_cast<size_t>(r) * unknowns + j]);
      int piv = inv_fp(M2[static_cast<size_t>(r) * unknowns + c2]);
      for (int j = c2; j < unknowns; ++j)
        M2[static_cast<size_t>(r) * unknowns + j] =
            static_cast<uint8_t>(M2[static_cast<size_t>(r) * unknowns + j] * piv % p);
      for (int i = 0; i < rows; ++i) {
        if (i == r) continue;
        int f = M2[static_cast<size_t>(i) * unknowns + c2];
        if (!f) continue;
        for (int j = c2; j < unknowns; ++j) {
          int tt = (M2[static_cast<size_t>(i) * unknowns + j] -
                    f * M2[static_cast<size_t>(r) * unknowns + j]) % p;
          M2[static_cast<size_t>(i) * unknowns + j] = static_cast<uint8_t>(tt < 0 ? tt + p : tt);
        }
      }
      pivot_of_col[static_cast<size_t>(c2)] = r;
      ++r;
    }
    return r;
  };

  // T -> 1-T fixes a = T(T-1), preserves heights and the curve; when that
  // symmetry is present only one denominator per orbit is processed and the
  // mirror points are emitted directly.
  auto mirror_poly = [&](const Poly& f) {
    Poly one_minus_T = Poly::constant(F.one()) - Poly::T(F);
    Poly r(F);
    for (int i = f.degree(); i >= 0; --i) r = r * one_minus_T + Poly::constant(f.coeff(i));
    return r;
  };
  bool sym = false;
  {
    RatFn am(mirror_poly(spec.a.num()), mirror_poly(spec.a.den()));
    sym = am == spec.a;
  }
  std::vector<FqElem> mbuf(static_cast<size_t>(H + 2), F.zero());

  for (int dd = 0; dd <= H; ++dd) {
    long long dcount = 1;
    for (int i = 0; i < dd; ++i) dcount *= F.q();
    std::fill(digits.begin(), digits.end(), 0);
    for (long long di = 0; di < dcount; ++di) {
      if (di > 0) {  // odometer increment over base-q digits
        int pos = 0;
        while (true) {
          if (++digits[static_cast<size_t>(pos)] < F.q()) break;
          digits[static_cast<size_t>(pos)] = 0;
          ++pos;
        }
      }
      bool emit_mirror = false;
      if (sym && dd > 0) {
        // Horner pass for d(1-T) on raw buffers, then monic rescale
        for (int i = 0; i <= dd; ++i) mbuf[static_cast<size_t>(i)] = F.zero();
        mbuf[0] = F.one();  // top coefficient of the monic d
        int cur = 0;        // degree of the partial result
        for (int i = dd - 1; i >= 0; --i) {
          // multiply by (1 - T): new[j] = old[j] - old[j-1]
          for (int j = cur + 1; j >= 1; --j)
            mbuf[static_cast<size_t>(j)] = mbuf[static_cast<size_t>(j)] - mbuf[static_cast<size_t>(j - 1)];
          ++cur;
          mbuf[0] += by_idx[digits[static_cast<size_t>(i)]];
        }
        // monicize: leading coeff is mbuf[dd] = (-1)^dd
        FqElem lead_inv = inv_tab[static_cast<size_t>(mbuf[static_cast<size_t>(dd)].lex_index())];
        int cmpv = 0;
        for (int i = dd - 1; i >= 0 && cmpv == 0; --i) {
          long long mi = (mbuf[static_cast<size_t>(i)] * lead_inv).lex_index();
          long long di2 = by_idx[digits[static_cast<size_t>(i)]].lex_index();
          if (mi != di2) cmpv = mi < di2 ? -1 : 1;
        }
        if (cmpv < 0) continue;  // handled at the mirror orbit representative
        emit_mirror = cmpv > 0;
      }
      // strip T^s: u = d / T^s with unit constant term
      int s = 0;
      while (s < dd && digits[static_cast<size_t>(s)] == 0) ++s;
      int udeg = dd - s;
      int ulen = static_cast<int>(u.size());
      for (int i = 0; i < ulen; ++i) u[static_cast<size_t>(i)] = F.zero();
      for (int i = 0; i <= udeg && i < ulen; ++i)
        u[static_cast<size_t>(i)] =
            (i == udeg && s + i == dd) ? F.one() : by_idx[digits[static_cast<size_t>(s + i)]];
      if (udeg < ulen) u[static_cast<size_t>(udeg)] = F.one();

      bool screened = false;
      if (dd > 0) {
        // u^(pE-1) = u^pE / u by truncated Frobenius + series division
        for (int i = 0; i < Ldiv; ++i) upe[static_cast<size_t>(i)] = F.zero();
        for (int i = 0; static_cast<long long>(i) * pE < Ldiv && i <= udeg; ++i)
          upe[static_cast<size_t>(i * pE)] = pe_tab[static_cast<size_t>(u[static_cast<size_t>(i)].lex_index())];
        FqElem u0inv = inv_tab[static_cast<size_t>(u[0].lex_index())];
        for (int i = 0; i < Ldiv; ++i) {
          FqElem acc = upe[static_cast<size_t>(i)];
          int jmax = std::min(i, udeg);
          for (int j = 1; j <= jmax; ++j)
            acc -= u[static_cast<size_t>(j)] * upow[static_cast<size_t>(i - j)];
          upow[static_cast<size_t>(i)] = acc * u0inv;
        }
        // w = u^(pE-1) * Apow, truncated
        for (int i = 0; i < Kvar; ++i) w[static_cast<size_t>(i)] = F.zero();
        for (int i = 0; i < Ldiv; ++i) {
          const FqElem& ca = upow[static_cast<size_t>(i)];
          if (ca.is_zero()) continue;
          for (int j = lowdeg; j + i < Kvar && j <= Apow.degree(); ++j) {
            FqElem cb = Apow.coeff(j);
            if (cb.is_zero()) continue;
            w[static_cast<size_t>(i + j)] += ca * cb;
          }
        }
        int shift = static_cast<int>(pE - 1) * s;
        work_ech.clone_from(base_ech);
        auto lin_at = [&](int i) {
          int k = i - shift;
          return (k >= 0 && k < Kvar) ? w[static_cast<size_t>(k)] : F.zero();
        };
        for (int e : var_exp) {
          rowbuf.clear();
          emit_rows(e, lin_at, rowbuf);
          for (int rr = 0; rr < m; ++rr) {
            work_ech.insert(&rowbuf[static_cast<size_t>(rr) * unknowns]);
            if (work_ech.rank >= unknowns - trivdim) break;
          }
          if (work_ech.rank >= unknowns - trivdim) break;
        }
        screened = work_ech.rank >= unknowns - trivdim;
      }
      if (screened) continue;  // kernel is only the constant family

      // full system for this denominator
      Poly d(F);
      for (int i = 0; i < dd; ++i) d.set_coeff(i, by_idx[digits[static_cast<size_t>(i)]]);
      d.set_coeff(dd, F.one());
      Poly lin = d.pow(pE - 1) * Apow;
      int maxdeg = std::max(lin.degree() + H, static_cast<int>(pE) * H + Apow.degree());
      std::vector<int> badexp;
      for (int e = 1; e <= maxdeg; ++e)
        if (e % pE != 0) badexp.push_back(e);
      MM.clear();
      for (int e : badexp) emit_rows(e, [&](int i) { return lin.coeff(i); }, MM);
      int rows = static_cast<int>(badexp.size()) * m;
      eliminate(MM, rows);
      std::vector<int> freecols;
      for (int c2 = 0; c2 < unknowns; ++c2)
        if (pivot_of_col[static_cast<size_t>(c2)] < 0) freecols.push_back(c2);
      long long count = 1;
      for (size_t i = 0; i < freecols.size(); ++i) {
        count *= p;
        if (count > 4'000'000LL) fail(errc::internal, "kernel too large in brute force");
      }
      for (long long ki = 1; ki < count; ++ki) {
        std::vector<int> xv(static_cast<size_t>(unknowns), 0);
        long long tt = ki;
        for (auto fc : freecols) {
          xv[static_cast<size_t>(fc)] = static_cast<int>(tt % p);
          tt /= p;
        }
        for (int c2 = unknowns - 1; c2 >= 0; --c2) {
          int pr = pivot_of_col[static_cast<size_t>(c2)];
          if (pr < 0) continue;
          int sum = 0;
          for (int j = c2 + 1; j < unknowns; ++j)
            sum = (sum + MM[static_cast<size_t>(pr) * unknowns + j] * xv[static_cast<size_t>(j)]) % p;
          xv[static_cast<size_t>(c2)] = (p - sum) % p;
        }
        Poly n(F);
        for (int ci = 0; ci < ncoef; ++ci) {
          std::vector<int> cc(static_cast<size_t>(m), 0);
          for (int l = 0; l < m; ++l) cc[static_cast<size_t>(l)] = xv[static_cast<size_t>(ci * m + l)];
          n.set_coeff(ci, F.from_coeffs(cc));
        }
        if (n.is_zero()) continue;
        if (gcd(n, d).degree() != 0) continue;  // appears at its reduced denominator
        RatFn x(n, d);
        auto y = solve_y(spec, x);
        if (y) {
          pts.push_back({x, *y});
          if (emit_mirror) {
            RatFn xm(mirror_poly(x.num()), mirror_poly(x.den()));
            RatFn ym(mirror_poly(y->num()), mirror_poly(y->den()));
            pts.push_back({xm, ym});
          }
        }
      }
    }
  }
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Pt2<RatFn>& a, const Pt2<RatFn>& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  return pts;
}

}  // namespace wug
