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

/**
 * @file groups.hpp
 * @brief The wound unipotent family: V_a, W_a, W_a^+, and the central
 *        extensions U_a (p > 2), U_a^zeta (F_{p^2} in the constants), and the
 *        descended U_a (p = 2, F_4 not in the constants, handled in the
 *        coordinates where its group law is defined over k).
 *
 * Curves:
 *   V_a:  x = x^(p^2) + a y^(p^2)      f(x,y) = x - x^(p^2) - a y^(p^2)
 *   W_a:  x = -(x^p + a y^p)           g(x,y) = x + x^p + a y^p
 *   W_a+: x = x^p + a y^p              gplus(x,y) = x - x^p - a y^p
 *
 * Cocycles (bi-additive on all of G_a^2):
 *   h(v,v')     = (x x'^p - x^p x',  x y'^p - x' y^p)           -> W_a
 *   h+(v,v')    = (x x'^p + x^p x',  x y'^p + x' y^p)           -> W_a+
 *   h_zeta(v,v')= h+(v, zeta v')
 *   h_new(v,v') = (x x'^p, x y'^p)                 (p = 2 descent coordinates)
 *   b(v)        = (x^(p+1), x y^p)                 (h+ = b(v+v') - b(v) - b(v'))
 *
 * Group law on pairs (w, v): (w,v)(w',v') = (w + w' + h(v,v'), v + v'), with
 * h chosen by the group kind. Membership: v on V_a and g-of-the-kind(w) = 0,
 * except for the descended group where g(w) = x(v)^3 in its k-coordinates.
 *
 * Everything is templated over the coefficient ring (RatFn, EtaleElem,
 * LaurentLocal); a GroupCtx carries the embedded parameter a and zeta.
 */

#ifndef WUG_GROUPS_HPP
#define WUG_GROUPS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wug/etale.hpp"
#include "wug/laurent.hpp"

namespace wug {

enum class GroupKind { V, W, Wplus, U, Uzeta, Udescended };

std::string kind_name(GroupKind k);

struct GroupSpec {
  GroupKind kind;
  const FqField* F;
  RatFn a;
  std::optional<FqElem> zeta;  // present for Uzeta

  int p() const { return F->p(); }
  std::string to_string() const;  // e.g. "U[p=3,q=9,a=T^2+2*T]"
};

/// Validates a (not a p-th power), kind-specific constraints, and resolves
/// zeta where needed. Errors: ParameterInKp, ZetaMissing, KindUnsupported.
GroupSpec make_group(GroupKind kind, const FqField& F, const RatFn& a);

/// A point of G_a^2 with coordinates in the ring R.
template <class R>
struct Pt2 {
  R x, y;
};

/// A point of a U-kind group: w in the kernel fiber, v in V_a.
template <class R>
struct UPt {
  Pt2<R> w, v;
};

/// Per-ring evaluation context: the spec with its parameters embedded in R.
template <class R>
struct GroupCtx {
  const GroupSpec* spec;
  R a;
  R zeta;  // meaningful for Uzeta (zero otherwise)
  std::function<R(const RatFn&)> embed;

  int p() const { return spec->p(); }
};

GroupCtx<RatFn> make_ctx(const GroupSpec& spec);
GroupCtx<EtaleElem> make_ctx(const GroupSpec& spec, const EtaleAlg& A);
GroupCtx<LaurentLocal> make_ctx(const GroupSpec& spec, const Place& v, int prec);

// --- curve equations ---

template <class R>
R f_eval(const GroupCtx<R>& c, const Pt2<R>& v) {
  return v.x - v.x.frobenius(2) - c.a * v.y.frobenius(2);
}

template <class R>
R g_eval(const GroupCtx<R>& c, const Pt2<R>& w) {
  return w.x + w.x.frobenius(1) + c.a * w.y.frobenius(1);
}

template <class R>
R gplus_eval(const GroupCtx<R>& c, const Pt2<R>& w) {
  return w.x - w.x.frobenius(1) - c.a * w.y.frobenius(1);
}

// --- cocycles ---

template <class R>
Pt2<R> h_cocycle(const GroupCtx<R>&, const Pt2<R>& v1, const Pt2<R>& v2) {
  return {v1.x * v2.x.frobenius(1) - v1.x.frobenius(1) * v2.x,
          v1.x * v2.y.frobenius(1) - v2.x * v1.y.frobenius(1)};
}

template <class R>
Pt2<R> hplus_cocycle(const GroupCtx<R>&, const Pt2<R>& v1, const Pt2<R>& v2) {
  return {v1.x * v2.x.frobenius(1) + v1.x.frobenius(1) * v2.x,
          v1.x * v2.y.frobenius(1) + v2.x * v1.y.frobenius(1)};
}

template <class R>
Pt2<R> scale(const R& s, const Pt2<R>& v) {
  return {s * v.x, s * v.y};
}

/// h_zeta(v, v') = h+(v, zeta v'); pass an explicit zeta to realize the
/// Galois-conjugate cocycle h_{zeta+1} as well.
template <class R>
Pt2<R> hzeta_cocycle_with(const GroupCtx<R>& c, const R& zeta, const Pt2<R>& v1, const Pt2<R>& v2) {
  return hplus_cocycle(c, v1, scale(zeta, v2));
}

template <class R>
Pt2<R> hzeta_cocycle(const GroupCtx<R>& c, const Pt2<R>& v1, const Pt2<R>& v2) {
  return hzeta_cocycle_with(c, c.zeta, v1, v2);
}

/// p = 2 only: the cocycle of the descended group in its k-coordinates.
template <class R>
Pt2<R> hnew_cocycle(const GroupCtx<R>&, const Pt2<R>& v1, const Pt2<R>& v2) {
  return {v1.x * v2.x.frobenius(1), v1.x * v2.y.frobenius(1)};
}

/// b(x, y) = (x^(p+1), x y^p); maps V_a into W_a^+.
template <class R>
Pt2<R> b_map(const GroupCtx<R>&, const Pt2<R>& v) {
  return {v.x.frobenius(1) * v.x, v.x * v.y.frobenius(1)};
}

enum class CocycleVariant { by_kind, h, hplus, hzeta, hnew };

/// The cocycle the spec's kind uses, or an explicit variant.
template <class R>
Pt2<R> cocycle(const GroupCtx<R>& c, const Pt2<R>& v1, const Pt2<R>& v2,
               CocycleVariant variant = CocycleVariant::by_kind) {
  CocycleVariant use = variant;
  if (use == CocycleVariant::by_kind) {
    switch (c.spec->kind) {
      case GroupKind::U: use = CocycleVariant::h; break;
      case GroupKind::Uzeta: use = CocycleVariant::hzeta; break;
      case GroupKind::Udescended: use = CocycleVariant::hnew; break;
      default: fail(errc::kind_unsupported, "cocycle needs a U-kind spec or explicit variant");
    }
  }
  switch (use) {
    case CocycleVariant::h: return h_cocycle(c, v1, v2);
    case CocycleVariant::hplus: return hplus_cocycle(c, v1, v2);
    case CocycleVariant::hzeta: return hzeta_cocycle(c, v1, v2);
    case CocycleVariant::hnew: return hnew_cocycle(c, v1, v2);
    default: fail(errc::internal, "unreachable cocycle variant");
  }
}

// --- group law ---

template <class R>
Pt2<R> pt2_add(const Pt2<R>& a, const Pt2<R>& b) {
  return {a.x + b.x, a.y + b.y};
}

template <class R>
Pt2<R> pt2_neg(const Pt2<R>& a) {
  return {-a.x, -a.y};
}

template <class R>
UPt<R> identity(const GroupCtx<R>& c) {
  R z = c.embed(RatFn(c.spec->a.field()));
  return {{z, z}, {z, z}};
}

template <class R>
UPt<R> mul(const GroupCtx<R>& c, const UPt<R>& u1, const UPt<R>& u2) {
  return {pt2_add(pt2_add(u1.w, u2.w), cocycle(c, u1.v, u2.v)), pt2_add(u1.v, u2.v)};
}

/// (w, v)^{-1} = (-w - h(v, -v), -v)
template <class R>
UPt<R> inverse(const GroupCtx<R>& c, const UPt<R>& u) {
  Pt2<R> nv = pt2_neg(u.v);
  return {pt2_add(pt2_neg(u.w), pt2_neg(cocycle(c, u.v, nv))), nv};
}

template <class R>
UPt<R> commutator(const GroupCtx<R>& c, const UPt<R>& u1, const UPt<R>& u2) {
  return mul(c, mul(c, u1, u2), mul(c, inverse(c, u1), inverse(c, u2)));
}

// --- membership ---

namespace detail {
inline bool ring_zero(const RatFn& x) { return x.is_zero(); }
inline bool ring_zero(const EtaleElem& x) { return x.is_zero(); }
inline bool ring_zero(const LaurentLocal& x) { return x.known_zero(); }
}  // namespace detail

template <class R>
bool on_V(const GroupCtx<R>& c, const Pt2<R>& v) {
  return detail::ring_zero(f_eval(c, v));
}

/// Defining equations of the U-kind fiber coordinate w over a given v.
template <class R>
bool fiber_ok(const GroupCtx<R>& c, const Pt2<R>& w, const Pt2<R>& v) {
  switch (c.spec->kind) {
    case GroupKind::U: return detail::ring_zero(g_eval(c, w));
    case GroupKind::Uzeta: return detail::ring_zero(gplus_eval(c, w));
    case GroupKind::Udescended: {
      R c3 = v.x * v.x * v.x;
      return detail::ring_zero(g_eval(c, w) - c3);
    }
    default: fail(errc::kind_unsupported, "fiber_ok needs a U-kind spec");
  }
}

template <class R>
bool on_curve(const GroupCtx<R>& c, const UPt<R>& u) {
  return on_V(c, u.v) && fiber_ok(c, u.w, u.v);
}

// --- descent verification (p = 2, F_4 not in the constants) ---

struct DescentReport {
  int pairs_checked = 0;
  int points_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Verifies, over the constant-field extension F_{q^2}(T) and etale
/// extensions of it: h_{zeta+1} = h_zeta + h+, that [sigma]:(w,v)->(w+b(v),v)
/// intertwines the two group laws, that sigma*([sigma]) o [sigma] = id, and
/// that b carries V-points to W-points.
DescentReport descent_twist(const GroupSpec& spec, int samples = 1000, uint64_t seed = 20260809);

}  // namespace wug

#endif  // WUG_GROUPS_HPP
