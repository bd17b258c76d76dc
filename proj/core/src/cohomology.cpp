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

#include "wug/cohomology.hpp"

#include "wug/approx.hpp"
#include "wug/factor.hpp"

namespace wug {
namespace {

void require_on_curve(const GroupSpec& spec, const RatFn& c, const RatFn& d) {
  GroupCtx<RatFn> ctx = make_ctx(spec);
  if (!f_eval(ctx, Pt2<RatFn>{c, d}).is_zero())
    fail(errc::off_curve, "(c, d) is not on V_a(k)");
}

enum class DeltaCase { odd, zeta, descended };

DeltaCase delta_case(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::U:
      if (spec.p() == 2)
        fail(errc::kind_unsupported, "for p = 2 use the Uzeta or descended construction");
      return DeltaCase::odd;
    case GroupKind::Uzeta:
      if (spec.p() != 2)
        fail(errc::kind_unsupported, "the closed form is stated for p = 2 in the zeta case");
      return DeltaCase::zeta;
    case GroupKind::Udescended:
      return DeltaCase::descended;
    default:
      fail(errc::kind_unsupported, "delta needs a U-kind spec");
  }
}

// F_{q^2}(T) lift and its inverse on elements known to lie in F_q(T)
Poly lift_poly_to(const FqField& big, const Poly& f) {
  Poly r(big);
  for (int i = 0; i <= f.degree(); ++i) r.set_coeff(i, big.embed(f.coeff(i)));
  return r;
}
RatFn lift_ratfn_to(const FqField& big, const RatFn& x) {
  return RatFn(lift_poly_to(big, x.num()), lift_poly_to(big, x.den()));
}
Poly descend_poly(const FqField& small, const FqField& big, const Poly& f) {
  Poly r(small);
  for (int i = 0; i <= f.degree(); ++i) {
    FqElem c = f.coeff(i);
    bool found = false;
    for (long long j = 0; j < small.q() && !found; ++j) {
      FqElem cand = small.by_index(j);
      if (big.embed(cand) == c) {
        r.set_coeff(i, cand);
        found = true;
      }
    }
    if (!found) fail(errc::value_not_rational, "coefficient does not descend to F_q");
  }
  return r;
}

}  // namespace

CohClassRep delta_closed(const GroupSpec& uspec, const RatFn& beta, const RatFn& c,
                         const RatFn& d) {
  require_on_curve(uspec, c, d);
  DeltaCase dc = delta_case(uspec);
  RatFn rep(uspec.a.field());
  switch (dc) {
    case DeltaCase::odd:
      rep = RatFn::from_int(uspec.a.field(), 2) * c.frobenius(1) * beta;
      break;
    case DeltaCase::zeta:
      rep = c * c * beta;
      break;
    case DeltaCase::descended:
      rep = c * c * beta + c * c * c;
      break;
  }
  return CohClassRep{GroupKind::W, rep, "k/g(k^2)"};
}

RatFn descended_gn(const GroupSpec& uspec, const RatFn& c, const RatFn& d) {
  if (uspec.kind != GroupKind::Udescended)
    fail(errc::kind_unsupported, "g(n(v)) arises in the descended case only");
  require_on_curve(uspec, c, d);
  const FqField& F = *uspec.F;
  const FqField& F2 = FqField::get(F.p(), 2 * F.m());
  RatFn a2 = lift_ratfn_to(F2, uspec.a);
  RatFn c2 = lift_ratfn_to(F2, c), d2 = lift_ratfn_to(F2, d);
  RatFn zeta(Poly::constant(find_zeta(F2)));
  // n(v) = zeta b(v) = (zeta c^3, zeta c d^2); g(x, y) = x + x^2 + a y^2
  RatFn nx = zeta * c2 * c2 * c2;
  RatFn ny = zeta * c2 * d2 * d2;
  RatFn val = nx + nx.frobenius(1) + a2 * ny.frobenius(1);
  return RatFn(descend_poly(F, F2, val.num()), descend_poly(F, F2, val.den()));
}

RatFn delta_generic(const GroupSpec& uspec, const RatFn& beta, const RatFn& c, const RatFn& d) {
  require_on_curve(uspec, c, d);
  DeltaCase dc = delta_case(uspec);
  const FqField& F = *uspec.F;
  int p = F.p();
  int psq = p * p;
  // A = k[Z]/(Z^(p^2) - Z + beta); X = (Z, 0) satisfies f(X) = beta
  std::vector<RatFn> mod(static_cast<size_t>(psq) + 1, RatFn(F));
  mod[0] = beta;
  mod[1] = -RatFn::from_int(F, 1);
  mod[static_cast<size_t>(psq)] = RatFn::from_int(F, 1);
  EtaleAlg A(std::move(mod));
  GroupCtx<EtaleElem> ctx = make_ctx(uspec, A);
  Pt2<EtaleElem> X{A.gen(), A.zero()};
  Pt2<EtaleElem> v{A.embed(c), A.embed(d)};
  {
    // f(X) = beta in A
    EtaleElem fx = f_eval(ctx, X);
    if (!(fx == A.embed(beta))) fail(errc::internal, "etale host does not satisfy f(X) = beta");
  }
  CocycleVariant variant = dc == DeltaCase::odd     ? CocycleVariant::h
                           : dc == DeltaCase::zeta  ? CocycleVariant::hzeta
                                                    : CocycleVariant::hnew;
  EtaleElem val = g_eval(ctx, cocycle(ctx, X, v, variant)) -
                  g_eval(ctx, cocycle(ctx, v, X, variant));
  if (dc == DeltaCase::descended) {
    RatFn gn = descended_gn(uspec, c, d);
    if (gn != c * c * c) fail(errc::internal, "g(n(v)) != c^3 on a V-point");
    val = val + A.embed(gn);
  }
  if (!val.is_scalar())
    fail(errc::value_not_rational, "connecting-map value has nonzero higher etale coordinates");
  return val.scalar_part();
}

Pt2<RatFn> delta_trivial_preimage(const GroupSpec& uspec, const Pt2<RatFn>& x0y0, const RatFn& c,
                                  const RatFn& d) {
  require_on_curve(uspec, c, d);
  DeltaCase dc = delta_case(uspec);
  GroupCtx<RatFn> ctx = make_ctx(uspec);
  CocycleVariant variant = dc == DeltaCase::odd     ? CocycleVariant::h
                           : dc == DeltaCase::zeta  ? CocycleVariant::hzeta
                                                    : CocycleVariant::hnew;
  Pt2<RatFn> v{c, d};
  return pt2_add(cocycle(ctx, x0y0, v, variant), pt2_neg(cocycle(ctx, v, x0y0, variant)));
}

// ---------------------------------------------------------------------------
// solve_global_V
// ---------------------------------------------------------------------------

SolveResult solve_global_V(const GroupSpec& vspec, const RatFn& lambda,
                           const std::vector<GlobalWitness>& witnesses) {
  const FqField& F = *vspec.F;
  int psq = F.p() * F.p();
  GroupCtx<RatFn> ctx = make_ctx(vspec);
  auto f_of = [&](const RatFn& x, const RatFn& y) {
    return f_eval(ctx, Pt2<RatFn>{x, y});
  };
  if (lambda.is_zero()) return Pt2<RatFn>{RatFn(F), RatFn(F)};

  RatFn xg(F), yg(F);
  // (i) clear the finite poles of lambda by strong approximation against the
  // local solutions
  std::vector<ApproxTarget> tx, ty;
  if (lambda.den().degree() > 0) {
    for (auto& pf : factor(lambda.den())) {
      Place v = Place::finite(pf.p);
      const GlobalWitness* w = nullptr;
      for (auto& cand : witnesses)
        if (cand.v == v) w = &cand;
      if (!w) return SolveFailure{v, "no local witness at a finite pole of lambda"};
      int orda = ord(vspec.a, v);
      int Nx = 0;
      int Ny = orda < 0 ? (-orda + psq - 1) / psq : 0;
      if (w->x.prec() < Nx || w->y.prec() < Ny)
        fail(errc::insufficient_precision, "finite witness expansion too short at " + v.to_string());
      // witness consistency: f(x_v, y_v) = lambda to order >= 0
      std::vector<LaurentLocal> args = {w->x, w->y};
      LaurentLocal resid = expand(lambda, v, std::min(w->x.prec(), w->y.prec())) -
                           AdditiveMap::v_map(vspec.a).eval(args);
      auto ro = resid.ord();
      if (ro && *ro < 0) return SolveFailure{v, "local witness does not solve f = lambda"};
      tx.push_back({v, w->x.truncated(Nx), Nx});
      ty.push_back({v, w->y.truncated(Ny), Ny});
    }
    xg = approximate(tx, {.integral_away_from_infinity = true});
    yg = approximate(ty, {.integral_away_from_infinity = true});
  }
  RatFn lam1 = lambda - f_of(xg, yg);
  if (lam1.is_zero()) return Pt2<RatFn>{xg, yg};
  if (!lam1.is_polynomial()) {
    Place bad = Place::finite(factor(lam1.den())[0].p);
    return SolveFailure{bad, "residual class keeps a finite pole"};
  }
  // (ii) the infinity step: subtract f of the polynomial parts of the shifted
  // infinite witness; what remains is a polynomial with a zero at infinity,
  // hence zero.
  Place vinf = Place::infinity(F);
  const GlobalWitness* wi = nullptr;
  for (auto& cand : witnesses)
    if (cand.v.is_infinity()) wi = &cand;
  if (!wi) return SolveFailure{vinf, "nonzero residual and no witness at infinity"};
  if (wi->x.prec() < 1 || wi->y.prec() < 1)
    fail(errc::insufficient_precision, "infinite witness known to precision < 1");
  LaurentLocal xi = wi->x - expand(xg, vinf, wi->x.prec());
  LaurentLocal eta = wi->y - expand(yg, vinf, wi->y.prec());
  RatFn ax = xi.lift_head(0);
  RatFn ay = eta.lift_head(0);
  if (!ax.is_polynomial() || !ay.is_polynomial())
    fail(errc::internal, "infinite head lift is not a polynomial");
  RatFn lam2 = lam1 - f_of(ax, ay);
  if (!lam2.is_zero())
    return SolveFailure{vinf, "residual after the infinity truncation step is nonzero"};
  Pt2<RatFn> sol{xg + ax, yg + ay};
  if (f_of(sol.x, sol.y) != lambda) fail(errc::internal, "global solution verification failed");
  return sol;
}

// ---------------------------------------------------------------------------
// che1_witness
// ---------------------------------------------------------------------------

Che1Witness che1_witness(const GroupSpec& wspec, const Place& v, int height) {
  if (wspec.kind != GroupKind::W) fail(errc::kind_unsupported, "che1_witness needs kind W");
  const FqField& F = *wspec.F;
  AdditiveMap g = AdditiveMap::w_map(wspec.a);
  Window w = default_window(g, v, 0);
  LaurentLocal mu = local_nontrivial_witness(g, v, w);
  ImageDecision d = image_member(g, mu, w);
  if (d.verdict != ImageDecision::Verdict::non_member || !d.certificate)
    fail(errc::internal, "witness lost its certificate on re-check");

  Che1Witness out{intern_place(v), mu, *d.certificate, height, 0,
                  "global non-lifting is cited, not recomputed; the scan below is evidence"};

  // bounded-height global scan: no g(x, y) matches mu into the unit ball
  std::vector<RatFn> cands;
  {
    std::vector<Poly> nums, dens;
    long long npoly = 1;
    for (int i = 0; i <= height; ++i) npoly *= F.q();
    for (long long idx = 0; idx < npoly; ++idx) {
      Poly f(F);
      long long t = idx;
      for (int i = 0; i <= height; ++i) {
        f.set_coeff(i, F.by_index(t % F.q()));
        t /= F.q();
      }
      nums.push_back(f);
    }
    for (int dd = 0; dd <= height; ++dd) {
      long long cnt = 1;
      for (int i = 0; i < dd; ++i) cnt *= F.q();
      for (long long idx = 0; idx < cnt; ++idx) {
        Poly f(F);
        long long t = idx;
        for (int i = 0; i < dd; ++i) {
          f.set_coeff(i, F.by_index(t % F.q()));
          t /= F.q();
        }
        f.set_coeff(dd, F.one());
        dens.push_back(f);
      }
    }
    for (auto& n : nums)
      for (auto& den : dens) {
        if (n.is_zero()) continue;
        if (gcd(n, den).degree() != 0) continue;
        cands.push_back(RatFn(n, den));
      }
    cands.push_back(RatFn(F));  // zero
  }
  int prec = std::max(w.b_high, 2);
  // g(x, y) = (x + x^p) + a y^p: precompute both halves
  std::vector<LaurentLocal> half1, half2;
  half1.reserve(cands.size());
  half2.reserve(cands.size());
  for (auto& x : cands) half1.push_back(expand(x + x.frobenius(1), v, prec));
  for (auto& y : cands) half2.push_back(expand(wspec.a * y.frobenius(1), v, prec));
  for (auto& h1 : half1)
    for (auto& h2 : half2) {
      LaurentLocal diff = (mu - h1) - h2;
      auto o = diff.ord();
      if (!o || *o >= 1)
        fail(errc::internal, "bounded-height scan found a local match for the witness");
      ++out.candidates_checked;
    }
  return out;
}

}  // namespace wug
