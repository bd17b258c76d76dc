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

#include "wug/local_image.hpp"

#include <algorithm>
#include <cassert>

#include "wug/gflinalg.hpp"

namespace wug {

AdditiveMap::AdditiveMap(int nslots, std::vector<AdditiveMonomial> monomials)
    : nslots_(nslots), mono_(std::move(monomials)) {
  if (mono_.empty()) fail(errc::precondition_violated, "additive map with no monomials");
  for (auto& m : mono_)
    if (m.slot < 0 || m.slot >= nslots_ || m.e < 0)
      fail(errc::precondition_violated, "bad additive monomial");
}

RatFn AdditiveMap::eval(const std::vector<RatFn>& xs) const {
  RatFn acc(field());
  for (auto& m : mono_) acc += m.coeff * xs.at(static_cast<size_t>(m.slot)).frobenius(m.e);
  return acc;
}

LaurentLocal AdditiveMap::eval(const std::vector<LaurentLocal>& xs) const {
  bool first = true;
  LaurentLocal acc;
  for (auto& m : mono_) {
    LaurentLocal term = xs.at(static_cast<size_t>(m.slot)).frobenius(m.e).mul_exact(m.coeff);
    acc = first ? term : acc + term;
    first = false;
  }
  return acc;
}

AdditiveMap AdditiveMap::w_map(const RatFn& a) {
  const FqField& F = a.field();
  RatFn one = RatFn::from_int(F, 1);
  return AdditiveMap(2, {{0, 0, one}, {0, 1, one}, {1, 1, a}});
}

AdditiveMap AdditiveMap::v_map(const RatFn& a) {
  const FqField& F = a.field();
  RatFn one = RatFn::from_int(F, 1);
  return AdditiveMap(2, {{0, 0, one}, {0, 2, -one}, {1, 2, -a}});
}

// ---------------------------------------------------------------------------
// Newton iteration on the unit ball
// ---------------------------------------------------------------------------

LaurentLocal newton_solve(const AdditiveMap& g, const LaurentLocal& t) {
  const Place& v = t.place();
  RatFn c0(g.field());
  std::vector<const AdditiveMonomial*> rest;
  for (auto& m : g.monomials()) {
    if (m.slot != 0) continue;
    if (m.e == 0)
      c0 = c0 + m.coeff;
    else
      rest.push_back(&m);
  }
  if (c0.is_zero() || ord(c0, v) != 0)
    fail(errc::precondition_violated, "newton_solve needs a unit identity monomial in slot 0");
  auto to = t.ord();
  if (to && *to < 1) fail(errc::no_convergence, "newton_solve needs ord_v(t) >= 1");
  // every higher monomial must strictly gain valuation on the ball ord >= 1
  for (auto* m : rest) {
    long long pe = 1;
    for (int i = 0; i < m->e; ++i) pe *= g.field().p();
    if (m->coeff.is_zero()) continue;
    if (ord(m->coeff, v) + (pe - 1) < 1)
      fail(errc::no_convergence, "monomial does not gain valuation on the unit ball");
  }
  if (t.known_zero()) return LaurentLocal::unknown(v, t.prec());

  RatFn c0inv = c0.inverse();
  LaurentLocal x = t.mul_exact(c0inv);
  for (int iter = 0; iter < 4 * (t.prec() - *to) + 8; ++iter) {
    // x <- c0^{-1} (t - sum rest(x))
    LaurentLocal acc = t;
    for (auto* m : rest) acc = acc - x.frobenius(m->e).mul_exact(m->coeff);
    LaurentLocal nx = acc.mul_exact(c0inv);
    if (nx.prec() > t.prec()) nx = nx.truncated(t.prec());
    if (nx.agrees_with(x) && nx.prec() >= t.prec() && x.prec() >= t.prec()) {
      x = nx;
      break;
    }
    x = nx;
  }
  // verify residual to the target precision
  std::vector<LaurentLocal> args(static_cast<size_t>(g.nslots()), LaurentLocal::unknown(v, 1 << 27));
  args[0] = x;
  LaurentLocal r = t - g.eval(args);
  if (r.prec() > t.prec()) r = r.truncated(t.prec());
  if (!r.known_zero()) fail(errc::no_convergence, "newton_solve failed to converge");
  return x;
}

// ---------------------------------------------------------------------------
// Valuation-normal form for two-slot maps  c0 X + cE X^{p^E} + d Y^{p^E}
// ---------------------------------------------------------------------------

namespace {

struct NormalForm {
  const Place* v = nullptr;
  int p = 0;
  int E = 1;
  long long pE = 1;
  // map(X, Y) = c0 X + cE X^{p^E} + dlin Y + dfr Y^{p^E}
  LaurentLocal c0, cE, dlin, dfr;
  bool has_dlin = false, has_dfr = true;
  // original inputs: x = X + A*Y, y = B*Y
  LaurentLocal A, B;
  bool hasA = false;
  bool rigid = false;
  std::string note;

  int ord_c0 = 0, ord_cE = 0, ord_dlin = 0, ord_dfr = 0;
};

struct Shape {
  int xslot = -1, yslot = -1, E = 1;
  RatFn c0, cE, d;
};

bool extract_shape(const AdditiveMap& g, Shape& s) {
  if (g.nslots() != 2) return false;
  std::vector<const AdditiveMonomial*> per[2];
  for (auto& m : g.monomials()) per[static_cast<size_t>(m.slot)].push_back(&m);
  int xs = -1, ys = -1;
  for (int sl = 0; sl < 2; ++sl) {
    bool has_e0 = false;
    for (auto* m : per[static_cast<size_t>(sl)])
      if (m->e == 0) has_e0 = true;
    if (per[static_cast<size_t>(sl)].size() == 2 && has_e0) xs = sl;
    if (per[static_cast<size_t>(sl)].size() == 1 && !has_e0) ys = sl;
  }
  if (xs < 0 || ys < 0 || xs == ys) return false;
  int E1 = -1, E2 = -1;
  for (auto* m : per[static_cast<size_t>(xs)]) {
    if (m->e == 0)
      s.c0 = m->coeff;
    else {
      s.cE = m->coeff;
      E1 = m->e;
    }
  }
  s.d = per[static_cast<size_t>(ys)][0]->coeff;
  E2 = per[static_cast<size_t>(ys)][0]->e;
  if (E1 != E2 || E1 < 1) return false;
  if (s.c0.is_zero() || s.cE.is_zero() || s.d.is_zero()) return false;
  s.xslot = xs;
  s.yslot = ys;
  s.E = E1;
  return true;
}

NormalForm normalize(const AdditiveMap& g, const Place& v, int work_prec) {
  Shape s;
  if (!extract_shape(g, s))
    fail(errc::kind_unsupported,
         "image_member supports maps of the shape c0*X + cE*X^(p^E) + d*Y^(p^E)");
  const FqField& F = g.field();
  NormalForm nf;
  nf.v = &intern_place(v);
  nf.p = F.p();
  nf.E = s.E;
  nf.pE = 1;
  for (int i = 0; i < s.E; ++i) nf.pE *= F.p();
  if (ord(s.c0, v) != 0 || ord(s.cE, v) != 0)
    fail(errc::kind_unsupported, "X-slot coefficients must be v-units");

  const Place& vi = *nf.v;
  int W = work_prec;
  nf.c0 = expand(s.c0, vi, W);
  nf.cE = expand(s.cE, vi, W);
  nf.dfr = expand(s.d, vi, ord(s.d, vi) + W);
  nf.dlin = LaurentLocal::unknown(vi, W);
  nf.B = expand(RatFn::from_int(F, 1), vi, W);
  nf.A = LaurentLocal::unknown(vi, W);

  RatFn pi_rf = vi.is_infinity() ? RatFn::T(F).inverse() : RatFn(Poly(vi.pi()));

  for (int iter = 0; iter < 64; ++iter) {
    if (!nf.has_dfr || nf.dfr.known_zero()) {
      nf.has_dfr = false;
      break;
    }
    int D = *nf.dfr.ord();
    nf.ord_dfr = D;
    long long rem = ((static_cast<long long>(D) % nf.pE) + nf.pE) % nf.pE;
    long long remE = ((static_cast<long long>(nf.ord_cE) % nf.pE) + nf.pE) % nf.pE;
    if (rem != remE) {
      nf.rigid = true;
      break;
    }
    // scale Y so dfr's order matches cE's: Y_new = pi^k Y_old
    int k = (D - nf.ord_cE) / static_cast<int>(nf.pE);
    if (k != 0) {
      RatFn sk = pi_rf.pow(k);
      nf.dfr = nf.dfr.mul_exact(sk.pow(-static_cast<long long>(nf.pE)));
      if (nf.has_dlin) nf.dlin = nf.dlin.mul_exact(sk.inverse());
      nf.B = nf.B.mul_exact(sk.inverse());
      if (nf.hasA) nf.A = nf.A.mul_exact(sk.inverse());
    }
    // merge: X_new = X_old + c Y so the Frobenius leading terms cancel
    ResidueElem lead = nf.dfr.coeff(*nf.dfr.ord());
    ResidueElem cElead = nf.cE.coeff(nf.ord_cE);
    ResidueElem c = lead * cElead.inverse();
    for (int i = 0; i < nf.E; ++i) c = c.pth_root();
    LaurentLocal cmono = LaurentLocal::monomial(vi, c, 0, W);
    nf.dfr = nf.dfr - nf.cE * cmono.frobenius(nf.E);
    LaurentLocal newdlin = -(nf.c0 * cmono);
    nf.dlin = nf.has_dlin ? nf.dlin + newdlin : newdlin;
    nf.has_dlin = true;
    nf.A = nf.hasA ? nf.A - cmono : -cmono;
    nf.hasA = true;
  }
  if (!nf.has_dfr) {
    nf.rigid = false;
    nf.note = "Frobenius part of the Y slot vanished within working precision";
  }
  if (nf.has_dlin) {
    if (nf.dlin.known_zero())
      nf.has_dlin = false;
    else
      nf.ord_dlin = *nf.dlin.ord();
  }
  if (!nf.rigid && nf.note.empty()) nf.note = "normal form not reached within iteration budget";
  return nf;
}

// footprint minimum of input pi^i in the given slot (0 = X, 1 = Y)
long long footprint(const NormalForm& nf, int slot, long long i) {
  if (slot == 0)
    return std::min(i + nf.ord_c0, nf.pE * i + nf.ord_cE);
  long long best = nf.has_dfr ? nf.pE * i + nf.ord_dfr : (1LL << 40);
  if (nf.has_dlin) best = std::min(best, i + nf.ord_dlin);
  return best;
}

struct GenSet {
  std::vector<int> slot, idx, basis;   // slot: 0=X, 1=Y, 2=ball
  std::vector<LaurentLocal> image;     // truncated to [b_low, b_high)
  int dim_per_index = 0;
};

std::vector<uint8_t> coords_of(const LaurentLocal& x, int b_low, int b_high, int deg, int m) {
  int per = deg * m;
  std::vector<uint8_t> out(static_cast<size_t>(b_high - b_low) * static_cast<size_t>(per), 0);
  for (int i = std::max(b_low, x.minv()); i < b_high; ++i) {
    ResidueElem c = x.coeff(i);
    if (c.is_zero()) continue;
    for (int j = 0; j < deg; ++j) {
      FqElem cf = c.rep().coeff(j);
      for (int l = 0; l < m; ++l)
        out[static_cast<size_t>(i - b_low) * static_cast<size_t>(per) + static_cast<size_t>(j * m + l)] =
            static_cast<uint8_t>(cf.coeff(l));
    }
  }
  return out;
}

ResidueElem residue_basis_elem(const ResidueField& R, int b) {
  const FqField& F = R.base();
  int j = b / F.m(), l = b % F.m();
  Poly rep(F);
  std::vector<int> coeffs(static_cast<size_t>(F.m()), 0);
  coeffs[static_cast<size_t>(l)] = 1;
  rep.set_coeff(j, F.from_coeffs(coeffs));
  return R.from_poly(rep);
}

GenSet build_generators(const NormalForm& nf, Window w) {
  const Place& v = *nf.v;
  const ResidueField& R = ResidueField::at(v);
  const FqField& F = v.field();
  GenSet gs;
  gs.dim_per_index = v.degree() * F.m();

  auto push = [&](int slot, int i, int b, const LaurentLocal& img) {
    gs.slot.push_back(slot);
    gs.idx.push_back(i);
    gs.basis.push_back(b);
    LaurentLocal t = img;
    if (t.prec() > w.b_high) t = t.truncated(w.b_high);
    if (t.prec() < w.b_high) fail(errc::internal, "generator image under-resolved");
    gs.image.push_back(t);
  };

  // slot X inputs
  {
    long long i = w.b_low - std::abs(static_cast<long long>(nf.ord_cE)) - 4;
    while (footprint(nf, 0, i) < w.b_low) ++i;
    for (; footprint(nf, 0, i) < w.b_high; ++i) {
      for (int b = 0; b < gs.dim_per_index; ++b) {
        ResidueElem xi = residue_basis_elem(R, b);
        LaurentLocal inp = LaurentLocal::monomial(v, xi, static_cast<int>(i),
                                                  static_cast<int>(i) + (w.b_high - w.b_low) + 4);
        LaurentLocal img = nf.c0 * inp + nf.cE * inp.frobenius(nf.E);
        push(0, static_cast<int>(i), b, img);
      }
    }
  }
  // slot Y inputs
  if (nf.has_dfr || nf.has_dlin) {
    long long i = w.b_low - std::abs(static_cast<long long>(nf.ord_dfr)) -
                  std::abs(static_cast<long long>(nf.ord_dlin)) - 4;
    while (footprint(nf, 1, i) < w.b_low) ++i;
    for (; footprint(nf, 1, i) < w.b_high; ++i) {
      for (int b = 0; b < gs.dim_per_index; ++b) {
        ResidueElem xi = residue_basis_elem(R, b);
        LaurentLocal inp = LaurentLocal::monomial(v, xi, static_cast<int>(i),
                                                  static_cast<int>(i) + (w.b_high - w.b_low) + 4);
        LaurentLocal img = nf.has_dfr ? nf.dfr * inp.frobenius(nf.E)
                                      : LaurentLocal::unknown(v, w.b_high);
        if (nf.has_dlin) img = img + nf.dlin * inp;
        push(1, static_cast<int>(i), b, img);
      }
    }
  }
  // ball generators: in the image through slot-X Newton iteration
  for (int j = std::max(1, w.b_low); j < w.b_high; ++j)
    for (int b = 0; b < gs.dim_per_index; ++b)
      push(2, j, b, LaurentLocal::monomial(v, residue_basis_elem(R, b), j, w.b_high));
  return gs;
}

}  // namespace

Window default_window(const AdditiveMap& g, const Place& v, int ord_lambda) {
  Shape s;
  int orda = 0;
  if (extract_shape(g, s)) orda = std::abs(ord(s.d, v));
  int p = g.field().p();
  int b_low = std::min(ord_lambda, 0) - p * v.degree() - orda - 2;
  int b_high = std::max(p * (-b_low) + 1, 2);
  return {b_low, b_high};
}

std::vector<uint8_t> window_coords(const LaurentLocal& x, const Place& v, Window w) {
  return coords_of(x, w.b_low, w.b_high, v.degree(), v.field().m());
}

int certificate_pairing(const ImageCertificate& cert, const LaurentLocal& x) {
  const Place& v = x.place();
  int p = v.field().p();
  auto coords = coords_of(x, cert.window.b_low, cert.window.b_high, v.degree(), v.field().m());
  if (coords.size() != cert.functional.size())
    fail(errc::precondition_violated, "certificate window mismatch");
  int acc = 0;
  for (size_t i = 0; i < coords.size(); ++i)
    acc = (acc + cert.functional[i] * coords[i]) % p;
  return acc;
}

namespace {

// A slot whose only monomial is a unit e=0 term makes the map surjective.
std::optional<std::pair<int, RatFn>> surjective_slot(const AdditiveMap& g, const Place& v) {
  for (int sl = 0; sl < g.nslots(); ++sl) {
    int count = 0;
    RatFn c(g.field());
    bool pure = true;
    for (auto& m : g.monomials())
      if (m.slot == sl) {
        ++count;
        if (m.e != 0) pure = false;
        c = m.coeff;
      }
    if (count == 1 && pure && !c.is_zero() && ord(c, v) == 0) return std::make_pair(sl, c);
  }
  return std::nullopt;
}

}  // namespace

ImageDecision image_member(const AdditiveMap& g, const LaurentLocal& lambda, Window w) {
  if (w.b_low >= w.b_high) fail(errc::window_invalid, "window is empty");
  const Place& v = lambda.place();
  const FqField& F = g.field();
  ImageDecision out;
  out.window = w;

  if (lambda.prec() < w.b_high)
    fail(errc::insufficient_precision, "lambda known to less than the window top");

  if (auto sj = surjective_slot(g, v)) {
    out.verdict = ImageDecision::Verdict::member;
    out.witness.assign(static_cast<size_t>(g.nslots()), LaurentLocal::unknown(v, 1 << 27));
    out.witness[static_cast<size_t>(sj->first)] = lambda.mul_exact(sj->second.inverse());
    out.rigid = true;
    return out;
  }

  auto lo = lambda.ord();
  // fast path: the unit ball is in the image through the X slot
  if (!lo || *lo >= 1) {
    LaurentLocal x = newton_solve(g, lambda);
    out.verdict = ImageDecision::Verdict::member;
    out.witness.assign(static_cast<size_t>(g.nslots()), LaurentLocal::unknown(v, 1 << 27));
    out.witness[0] = x;
    out.rigid = true;
    return out;
  }

  // extend the window floor so the input-bound theorem applies
  int b_low = std::min(w.b_low, std::min(*lo, 0));
  Shape shp;
  int orda = extract_shape(g, shp) ? std::abs(ord(shp.d, v)) : 0;
  int work_prec = (w.b_high - b_low) + 2 * orda + 40;
  NormalForm nf = normalize(g, v, work_prec);

  if (nf.rigid && nf.has_dlin && nf.has_dfr) {
    // floor must reach the slot-Y linear/Frobenius crossover
    long long num = nf.ord_dlin - nf.ord_dfr;
    long long den = nf.pE - 1;
    long long theta = num >= 0 ? (num + den - 1) / den : -((-num) / den);
    long long crossover = theta + nf.ord_dlin;
    if (crossover < b_low) b_low = static_cast<int>(crossover);
  }
  Window used{b_low, w.b_high};
  out.window = used;
  out.rigid = nf.rigid;

  GenSet gs = build_generators(nf, used);
  int per = gs.dim_per_index;
  int rows = (used.b_high - used.b_low) * per;
  int cols = static_cast<int>(gs.image.size());
  std::vector<uint8_t> A(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
  for (int c = 0; c < cols; ++c) {
    auto col = coords_of(gs.image[static_cast<size_t>(c)], used.b_low, used.b_high, v.degree(), F.m());
    for (int r = 0; r < rows; ++r)
      A[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)] = col[static_cast<size_t>(r)];
  }
  auto b = coords_of(lambda, used.b_low, used.b_high, v.degree(), F.m());
  auto sol = gf_solve(F.p(), rows, cols, std::move(A), b);

  if (!sol.solvable) {
    if (nf.rigid) {
      out.verdict = ImageDecision::Verdict::non_member;
      out.certificate = ImageCertificate{used, sol.functional};
    } else {
      out.verdict = ImageDecision::Verdict::inconclusive;
      out.note = "window model not certified complete: " + nf.note;
    }
    return out;
  }

  // member: rebuild inputs in transformed coordinates, then back-substitute.
  // Ball-generator multiplicities are not materialized: they reappear in the
  // residual, which the final Newton pass absorbs.
  const ResidueField& R = ResidueField::at(v);
  int wp = used.b_high - used.b_low + 8;
  LaurentLocal X = LaurentLocal::unknown(v, 1 << 27);
  LaurentLocal Y = LaurentLocal::unknown(v, 1 << 27);
  for (int c = 0; c < cols; ++c) {
    int mult = sol.x[static_cast<size_t>(c)];
    if (!mult || gs.slot[static_cast<size_t>(c)] == 2) continue;
    ResidueElem coef = residue_basis_elem(R, gs.basis[static_cast<size_t>(c)]);
    ResidueElem acc = R.zero();
    for (int t = 0; t < mult; ++t) acc += coef;
    LaurentLocal term = LaurentLocal::monomial(v, acc, gs.idx[static_cast<size_t>(c)],
                                               gs.idx[static_cast<size_t>(c)] + wp);
    if (gs.slot[static_cast<size_t>(c)] == 0)
      X = X + term;
    else
      Y = Y + term;
  }
  LaurentLocal x_in = nf.hasA ? X + nf.A * Y : X;
  LaurentLocal y_in = nf.B * Y;
  std::vector<LaurentLocal> args(static_cast<size_t>(g.nslots()), LaurentLocal::unknown(v, 1 << 27));
  args[0] = x_in;
  args[1] = y_in;
  LaurentLocal resid = lambda - g.eval(args);
  if (resid.prec() > used.b_high) resid = resid.truncated(used.b_high);
  auto ro = resid.ord();
  if (ro && *ro < 1) fail(errc::internal, "window solve left a residual below the unit ball");
  LaurentLocal xfix = newton_solve(g, resid);
  args[0] = x_in + xfix;
  LaurentLocal check = lambda - g.eval(args);
  if (check.prec() > used.b_high) check = check.truncated(used.b_high);
  if (!check.known_zero()) fail(errc::internal, "membership witness verification failed");
  out.verdict = ImageDecision::Verdict::member;
  out.witness = {args[0], args[1]};
  return out;
}

std::vector<LaurentLocal> span_generators(const AdditiveMap& g, const Place& v, Window w) {
  Shape shp;
  int orda = extract_shape(g, shp) ? std::abs(ord(shp.d, v)) : 0;
  int work_prec = (w.b_high - w.b_low) + 2 * orda + 40;
  NormalForm nf = normalize(g, v, work_prec);
  GenSet gs = build_generators(nf, w);
  return gs.image;
}

LaurentLocal local_nontrivial_witness(const AdditiveMap& g, const Place& v, Window w) {
  if (w.b_low >= w.b_high) fail(errc::window_invalid, "window is empty");
  const FqField& F = g.field();
  const ResidueField& R = ResidueField::at(v);
  if (surjective_slot(g, v))
    fail(errc::not_found, "map is onto: every class is trivial");
  // candidates: single monomials xi * pi^n, n ascending from the window
  // floor, residue basis order within an index. Indices >= 1 are always in
  // the image, so the scan stops at 0.
  for (int n = w.b_low; n < std::min(w.b_high, 1); ++n) {
    for (int b = 0; b < v.degree() * F.m(); ++b) {
      LaurentLocal cand = LaurentLocal::monomial(v, residue_basis_elem(R, b), n, w.b_high);
      ImageDecision d = image_member(g, cand, w);
      if (d.verdict == ImageDecision::Verdict::non_member) return cand;
    }
  }
  fail(errc::not_found, "no nontrivial class found in window [" + std::to_string(w.b_low) + ", " +
                            std::to_string(w.b_high) + ")");
}

}  // namespace wug
