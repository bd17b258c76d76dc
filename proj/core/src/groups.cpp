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

#include "wug/groups.hpp"

#include <random>
#include <sstream>

namespace wug {

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::V: return "V";
    case GroupKind::W: return "W";
    case GroupKind::Wplus: return "Wplus";
    case GroupKind::U: return "U";
    case GroupKind::Uzeta: return "Uzeta";
    case GroupKind::Udescended: return "Udescended";
  }
  return "?";
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  os << kind_name(kind) << "[p=" << F->p() << ",q=" << F->q() << ",a=" << a.to_string() << "]";
  return os.str();
}

GroupSpec make_group(GroupKind kind, const FqField& F, const RatFn& a) {
  if (&a.field() != &F) fail(errc::ring_mismatch, "parameter a must live over the given field");
  if (a.is_zero() || is_pth_power(a).has_value())
    fail(errc::parameter_in_kp, "a must lie in k - k^p");
  GroupSpec s{kind, &F, a, std::nullopt};
  switch (kind) {
    case GroupKind::V:
    case GroupKind::W:
    case GroupKind::Wplus:
    case GroupKind::U:
      break;
    case GroupKind::Uzeta: {
      try {
        s.zeta = find_zeta(F);
      } catch (const Error& e) {
        fail(errc::zeta_missing, std::string("Uzeta needs F_{p^2} in the constants: ") + e.what());
      }
      break;
    }
    case GroupKind::Udescended: {
      if (F.p() != 2) fail(errc::kind_unsupported, "the descent construction is for p = 2");
      if (F.m() % 2 == 0)
        fail(errc::kind_unsupported,
             "F_4 lies in the constants; use Uzeta instead of the descended group");
      break;
    }
  }
  return s;
}

GroupCtx<RatFn> make_ctx(const GroupSpec& spec) {
  GroupCtx<RatFn> c;
  c.spec = &spec;
  c.a = spec.a;
  c.zeta = spec.zeta ? RatFn(Poly::constant(*spec.zeta)) : RatFn(spec.a.field());
  c.embed = [](const RatFn& x) { return x; };
  return c;
}

GroupCtx<EtaleElem> make_ctx(const GroupSpec& spec, const EtaleAlg& A) {
  if (&A.base_field() != &spec.a.field())
    fail(errc::ring_mismatch, "etale algebra base field mismatch");
  GroupCtx<EtaleElem> c;
  c.spec = &spec;
  c.a = A.embed(spec.a);
  c.zeta = spec.zeta ? A.embed(RatFn(Poly::constant(*spec.zeta))) : A.zero();
  c.embed = [&A](const RatFn& x) { return A.embed(x); };
  return c;
}

GroupCtx<LaurentLocal> make_ctx(const GroupSpec& spec, const Place& v, int prec) {
  GroupCtx<LaurentLocal> c;
  c.spec = &spec;
  const Place& vi = intern_place(v);
  c.a = expand(spec.a, vi, prec);
  c.zeta = spec.zeta ? expand(RatFn(Poly::constant(*spec.zeta)), vi, prec)
                     : LaurentLocal::unknown(vi, prec);
  c.embed = [&vi, prec](const RatFn& x) { return expand(x, vi, prec); };
  return c;
}

// ---------------------------------------------------------------------------
// descent verification
// ---------------------------------------------------------------------------

namespace {

// Galois conjugation of F_{q^2}(T) over F_q(T): constants to the q-th power.
RatFn conj_ratfn(const RatFn& x, long long q) {
  auto conj_poly = [q](const Poly& f) {
    Poly r(f.field());
    for (int i = 0; i <= f.degree(); ++i) r.set_coeff(i, f.coeff(i).pow(q));
    return r;
  };
  return RatFn(conj_poly(x.num()), conj_poly(x.den()));
}

// Well-defined when the etale modulus has sigma-fixed coefficients.
EtaleElem conj_etale(const EtaleElem& x, long long q) {
  std::vector<RatFn> c;
  for (int i = 0; i < x.alg().degree(); ++i) c.push_back(conj_ratfn(x.coeff(i), q));
  return x.alg().from_coeffs(std::move(c));
}

Pt2<EtaleElem> conj_pt(const Pt2<EtaleElem>& v, long long q) {
  return {conj_etale(v.x, q), conj_etale(v.y, q)};
}

Poly lift_poly_to(const FqField& big, const Poly& f) {
  Poly r(big);
  for (int i = 0; i <= f.degree(); ++i) r.set_coeff(i, big.embed(f.coeff(i)));
  return r;
}

RatFn lift_ratfn_to(const FqField& big, const RatFn& x) {
  return RatFn(lift_poly_to(big, x.num()), lift_poly_to(big, x.den()));
}

}  // namespace

DescentReport descent_twist(const GroupSpec& spec, int samples, uint64_t seed) {
  DescentReport rep;
  if (spec.kind != GroupKind::Udescended)
    fail(errc::kind_unsupported, "descent verification applies to the descended group");
  const FqField& F = *spec.F;
  const FqField& F2 = FqField::get(2, 2 * F.m());  // constants F_{q^2}, contains F_4
  long long q = F.q();
  RatFn a2 = lift_ratfn_to(F2, spec.a);
  FqElem zeta2 = find_zeta(F2);

  // host algebra over k' = F_{q^2}(T): Z^2 + Z + T (Artin-Schreier modulus,
  // separable, sigma-fixed coefficients)
  RatFn one = RatFn::from_int(F2, 1);
  EtaleAlg A({RatFn::T(F2), one, one});
  GroupSpec spec2{GroupKind::Uzeta, &F2, a2, zeta2};
  GroupCtx<EtaleElem> c = make_ctx(spec2, A);
  EtaleElem zeta = c.zeta;
  EtaleElem zeta1 = zeta + A.one();

  std::mt19937_64 rng(seed);
  auto rnd_ratfn = [&](int maxdeg) {
    Poly n(F2), d(F2);
    int dn = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    for (int i = 0; i <= dn; ++i)
      n.set_coeff(i, F2.by_index(static_cast<long long>(rng() % static_cast<unsigned long long>(F2.q()))));
    do {
      int dd = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
      d = Poly(F2);
      for (int i = 0; i <= dd; ++i)
        d.set_coeff(i, F2.by_index(static_cast<long long>(rng() % static_cast<unsigned long long>(F2.q()))));
    } while (d.is_zero());
    return RatFn(n, d);
  };
  auto rnd_elem = [&]() { return A.from_coeffs({rnd_ratfn(2), rnd_ratfn(2)}); };
  auto rnd_pt = [&]() { return Pt2<EtaleElem>{rnd_elem(), rnd_elem()}; };

  auto sigma_pt = [&](const Pt2<EtaleElem>& v) { return conj_pt(v, q); };
  auto phi = [&](const UPt<EtaleElem>& u) {
    return UPt<EtaleElem>{pt2_add(u.w, b_map(c, u.v)), u.v};
  };

  for (int it = 0; it < samples; ++it) {
    Pt2<EtaleElem> v1 = rnd_pt(), v2 = rnd_pt();
    // (i) h_{zeta+1} = h_zeta + h+ as a bi-additive identity
    Pt2<EtaleElem> lhs = hzeta_cocycle_with(c, zeta1, v1, v2);
    Pt2<EtaleElem> rhs = pt2_add(hzeta_cocycle_with(c, zeta, v1, v2), hplus_cocycle(c, v1, v2));
    if (!(lhs.x == rhs.x && lhs.y == rhs.y))
      rep.failures.push_back("cocycle difference identity failed at pair " + std::to_string(it));
    // (ii) [sigma] intertwines the zeta and zeta+1 group laws
    UPt<EtaleElem> P{rnd_pt(), v1}, Q{rnd_pt(), v2};
    UPt<EtaleElem> prod{pt2_add(pt2_add(P.w, Q.w), hzeta_cocycle_with(c, zeta, P.v, Q.v)),
                        pt2_add(P.v, Q.v)};
    UPt<EtaleElem> lhs2 = phi(prod);
    UPt<EtaleElem> p1 = phi(P), p2 = phi(Q);
    UPt<EtaleElem> rhs2{pt2_add(pt2_add(p1.w, p2.w), hzeta_cocycle_with(c, zeta1, p1.v, p2.v)),
                        pt2_add(p1.v, p2.v)};
    if (!(lhs2.w.x == rhs2.w.x && lhs2.w.y == rhs2.w.y && lhs2.v.x == rhs2.v.x &&
          lhs2.v.y == rhs2.v.y))
      rep.failures.push_back("[sigma] is not a homomorphism at pair " + std::to_string(it));
    ++rep.pairs_checked;

    // (iii) sigma*([sigma]) o [sigma] = id
    UPt<EtaleElem> R0{rnd_pt(), rnd_pt()};
    UPt<EtaleElem> step1 = phi(R0);
    UPt<EtaleElem> step2{sigma_pt(step1.w), sigma_pt(step1.v)};
    UPt<EtaleElem> step3 = phi(step2);
    UPt<EtaleElem> back{sigma_pt(step3.w), sigma_pt(step3.v)};
    if (!(back.w.x == R0.w.x && back.w.y == R0.w.y && back.v.x == R0.v.x && back.v.y == R0.v.y))
      rep.failures.push_back("descent datum round trip failed at point " + std::to_string(it));
    ++rep.points_checked;
  }

  // (iv) b carries V-points to W-points, on-curve points from Artin-Schreier
  // algebras k[Z]/(Z^4 + Z + a t^4)
  for (int it = 0; it < std::min(samples, 100); ++it) {
    Poly tn(F);
    int dn = static_cast<int>(rng() % 3u);
    for (int i = 0; i <= dn; ++i)
      tn.set_coeff(i, F.by_index(static_cast<long long>(rng() % static_cast<unsigned long long>(F.q()))));
    RatFn t(tn);
    RatFn onek = RatFn::from_int(F, 1);
    RatFn zero(F);
    EtaleAlg Ak({spec.a * t.frobenius(2), onek, zero, zero, onek});
    GroupCtx<EtaleElem> cck = make_ctx(spec, Ak);
    Pt2<EtaleElem> v{Ak.gen(), Ak.embed(t)};
    if (!on_V(cck, v)) {
      rep.failures.push_back("etale point is not on V at sample " + std::to_string(it));
      continue;
    }
    Pt2<EtaleElem> bw = b_map(cck, v);
    if (!detail::ring_zero(g_eval(cck, bw)))
      rep.failures.push_back("b(v) is not on W at sample " + std::to_string(it));
  }
  return rep;
}

}  // namespace wug
