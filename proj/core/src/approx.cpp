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

#include "wug/approx.hpp"

#include <algorithm>

namespace wug {
namespace {

// Find a monic linear polynomial T - c that is none of the target places.
Poly helper_linear(const FqField& F, const std::vector<ApproxTarget>& finite_targets) {
  for (long long idx = 0; idx < F.q(); ++idx) {
    Poly cand = Poly::T(F) - Poly::constant(F.by_index(idx));
    bool used = false;
    for (auto& t : finite_targets)
      if (!t.v.is_infinity() && t.v.pi() == cand) used = true;
    if (!used) return cand;
  }
  fail(errc::precondition_violated, "no free degree-1 place for weak approximation helper");
}

}  // namespace

RatFn approximate(const std::vector<ApproxTarget>& targets, const ApproxOptions& opt) {
  if (targets.empty()) fail(errc::precondition_violated, "approximate with no targets");
  const FqField& F = targets[0].t.place().field();

  std::vector<ApproxTarget> fin;
  const ApproxTarget* inf = nullptr;
  for (auto& t : targets) {
    for (auto& u : fin)
      if (u.v == t.v) fail(errc::precondition_violated, "duplicate target place");
    if (t.v.is_infinity()) {
      if (inf) fail(errc::precondition_violated, "duplicate target place");
      inf = &t;
    } else {
      fin.push_back(t);
    }
  }

  RatFn beta(F);
  Poly Q = Poly::constant(F.one());  // product of pi^M over finite targets
  if (!fin.empty()) {
    // r_i: exact lift of the target window; M_i: congruence depth so that
    // matching r_i mod pi^M_i gives ord(beta - t) >= N.
    std::vector<RatFn> r(fin.size());
    std::vector<Poly> piM(fin.size());
    for (size_t i = 0; i < fin.size(); ++i) {
      const auto& tg = fin[i];
      if (tg.t.prec() < tg.N)
        fail(errc::insufficient_precision, "target expansion shorter than requested matching");
      r[i] = tg.t.truncated(tg.N).lift();
      int minv = std::min(tg.t.minv(), 0);
      int M = tg.N - minv;
      piM[i] = RatFn(Poly(tg.v.pi())).pow(M).num();
      Q = Q * piM[i];
    }
    for (size_t i = 0; i < fin.size(); ++i) {
      // e_i = u_i * prod_{j != i} pi_j^{M_j}, with e_i = 1 mod pi_i^{M_i}
      Poly others = Poly::constant(F.one());
      for (size_t j = 0; j < fin.size(); ++j)
        if (j != i) others = others * piM[j];
      auto g = xgcd(others, piM[i]);
      if (g.g.degree() != 0) fail(errc::internal, "CRT moduli not coprime");
      Poly e = (g.u * others) % Q;  // e = 1 mod pi_i^M_i, 0 mod others
      beta += r[i] * RatFn(e);
    }
  }

  if (inf) {
    const Place vinf = Place::infinity(F);
    if (inf->t.prec() < inf->N)
      fail(errc::insufficient_precision, "infinity target expansion shorter than requested matching");
    // residual w = t_inf - beta as a series at infinity
    int wprec = inf->N;
    LaurentLocal w = inf->t.truncated(wprec) - expand(beta, vinf, wprec);
    if (opt.integral_away_from_infinity) {
      // gamma = P * Q with P a polynomial; P can only match indices <= 0 of
      // w/Q, so the achievable precision is 1 - deg Q. Beyond that there is
      // no function integral away from infinity (Riemann-Roch on P^1).
      RatFn wQ = RatFn(Q).inverse();
      int lim = 1 - Q.degree();
      if (inf->N > lim)
        fail(errc::insufficient_precision,
             "strong approximation cannot reach ord >= " + std::to_string(inf->N) +
                 " at infinity with finite targets present (limit " + std::to_string(lim) + ")");
      // expand w/Q and take the head (indices <= 0): a polynomial in T
      LaurentLocal series = w.mul_exact(wQ);
      RatFn P = series.lift_head(0);
      if (!P.is_zero() && !P.is_polynomial()) fail(errc::internal, "head lift not a polynomial");
      beta += P * RatFn(Q);
    } else {
      // gamma = S(1/(T-c)) * Q: powers of 1/(T-c) have ord_inf = j and are
      // units at every finite target place, so finite windows survive.
      Poly lin = helper_linear(F, fin);
      RatFn linv = RatFn(lin).inverse();
      LaurentLocal series = w.mul_exact(RatFn(Q).inverse());
      // triangular solve: subtract s_j * expand((T-c)^-j) to kill index j
      // ord_inf(gamma - w) = -deg Q + ord(S - w/Q), so S must match w/Q
      // through index N + deg Q - 1.
      RatFn S(F);
      int lo = std::min(series.minv(), 0);
      LaurentLocal resid = series;
      for (int j = lo; j < inf->N + Q.degree(); ++j) {
        ResidueElem cj = resid.coeff(j);
        if (cj.is_zero()) continue;
        if (j < 0) {
          // indices < 0 need positive powers of (T-c): ord_inf((T-c)^(-j)) = j
          RatFn term = RatFn(Poly::constant(cj.rep().coeff(0))) * RatFn(lin).pow(-j);
          S += term;
          resid = resid - expand(term, vinf, resid.prec());
        } else {
          RatFn term = RatFn(Poly::constant(cj.rep().coeff(0))) * linv.pow(j);
          S += term;
          resid = resid - expand(term, vinf, resid.prec());
        }
      }
      beta += S * RatFn(Q);
    }
  }
  return beta;
}

}  // namespace wug
