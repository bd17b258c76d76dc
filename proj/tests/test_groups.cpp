// Group construction, cocycle identities, group axioms over k and over
// etale extension algebras, commutators, and the p = 2 descent datum.

#include <random>

#include "doctest.h"
#include "wug/groups.hpp"

using namespace wug;

namespace {

RatFn param_a(const FqField& F) { return RatFn::T(F) * (RatFn::T(F) - RatFn::from_int(F, 1)); }

RatFn rnd_ratfn(const FqField& F, int maxdeg, std::mt19937_64& rng) {
  auto rnd_poly = [&](int md) {
    Poly r(F);
    int d = static_cast<int>(rng() % static_cast<unsigned>(md + 1));
    for (int i = 0; i <= d; ++i)
      r.set_coeff(i, F.by_index(static_cast<long long>(rng() % static_cast<unsigned long long>(F.q()))));
    return r;
  };
  Poly n = rnd_poly(maxdeg);
  Poly d(F);
  do {
    d = rnd_poly(maxdeg);
  } while (d.is_zero());
  return RatFn(n, d);
}

template <class R>
bool pt_eq(const Pt2<R>& a, const Pt2<R>& b) {
  return a.x == b.x && a.y == b.y;
}
template <class R>
bool upt_eq(const UPt<R>& a, const UPt<R>& b) {
  return pt_eq(a.w, b.w) && pt_eq(a.v, b.v);
}

// V-point (Z, t) in k[Z]/(Z^(p^2) - Z + a t^(p^2))
struct EtaleVHost {
  EtaleAlg A;
  Pt2<EtaleElem> v;
  EtaleVHost(const GroupSpec& spec, const RatFn& t)
      : A(make_modulus(spec, t)), v{A.gen(), A.embed(t)} {}
  static EtaleAlg make_modulus(const GroupSpec& spec, const RatFn& t) {
    const FqField& F = spec.a.field();
    int psq = F.p() * F.p();
    std::vector<RatFn> m(static_cast<size_t>(psq) + 1, RatFn(F));
    m[0] = spec.a * t.frobenius(2);
    m[1] = -RatFn::from_int(F, 1);
    m[static_cast<size_t>(psq)] = RatFn::from_int(F, 1);
    return EtaleAlg(std::move(m));
  }
};

}  // namespace

TEST_CASE("make_group: validation per kind") {
  const FqField& F9 = FqField::get(3, 2);
  CHECK_NOTHROW(make_group(GroupKind::W, F9, param_a(F9)));
  CHECK_NOTHROW(make_group(GroupKind::U, F9, param_a(F9)));
  const FqField& F4 = FqField::get(2, 2);
  CHECK_THROWS_AS(make_group(GroupKind::V, F4, RatFn::T(F4).pow(2)), Error);
  CHECK_THROWS_AS(make_group(GroupKind::Udescended, F4, param_a(F4)), Error);
  const FqField& F2 = FqField::get(2, 1);
  CHECK_NOTHROW(make_group(GroupKind::Udescended, F2, param_a(F2)));
  CHECK_THROWS_AS(make_group(GroupKind::Uzeta, F2, param_a(F2)), Error);
  CHECK_NOTHROW(make_group(GroupKind::Uzeta, F4, param_a(F4)));
  CHECK_THROWS_AS(make_group(GroupKind::Udescended, F9, param_a(F9)), Error);
}

TEST_CASE("cocycle h: alternating, vanishes on (v, 0), bi-additive") {
  for (auto pm : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}}) {
    const FqField& F = FqField::get(pm.first, pm.second);
    GroupSpec spec = make_group(GroupKind::U, F, param_a(F));
    GroupCtx<RatFn> c = make_ctx(spec);
    std::mt19937_64 rng(11);
    RatFn zero(F);
    for (int it = 0; it < 1000; ++it) {
      Pt2<RatFn> v1{rnd_ratfn(F, 3, rng), rnd_ratfn(F, 3, rng)};
      Pt2<RatFn> v2{rnd_ratfn(F, 3, rng), rnd_ratfn(F, 3, rng)};
      Pt2<RatFn> v3{rnd_ratfn(F, 3, rng), rnd_ratfn(F, 3, rng)};
      CHECK(pt_eq(h_cocycle(c, v1, v1), Pt2<RatFn>{zero, zero}));
      CHECK(pt_eq(h_cocycle(c, v1, Pt2<RatFn>{zero, zero}), Pt2<RatFn>{zero, zero}));
      CHECK(pt_eq(h_cocycle(c, pt2_add(v1, v3), v2),
                  pt2_add(h_cocycle(c, v1, v2), h_cocycle(c, v3, v2))));
      CHECK(pt_eq(h_cocycle(c, v1, pt2_add(v2, v3)),
                  pt2_add(h_cocycle(c, v1, v2), h_cocycle(c, v1, v3))));
    }
  }
}

TEST_CASE("cocycle h+ is symmetric and equals b(v+v') - b(v) - b(v')") {
  const FqField& F = FqField::get(2, 2);
  GroupSpec spec = make_group(GroupKind::Uzeta, F, param_a(F));
  GroupCtx<RatFn> c = make_ctx(spec);
  std::mt19937_64 rng(13);
  for (int it = 0; it < 1000; ++it) {
    Pt2<RatFn> v1{rnd_ratfn(F, 3, rng), rnd_ratfn(F, 3, rng)};
    Pt2<RatFn> v2{rnd_ratfn(F, 3, rng), rnd_ratfn(F, 3, rng)};
    CHECK(pt_eq(hplus_cocycle(c, v1, v2), hplus_cocycle(c, v2, v1)));
    Pt2<RatFn> cob = pt2_add(b_map(c, pt2_add(v1, v2)),
                             pt2_neg(pt2_add(b_map(c, v1), b_map(c, v2))));
    CHECK(pt_eq(hplus_cocycle(c, v1, v2), cob));
    Pt2<RatFn> lhs = hzeta_cocycle(c, v1, v2);
    Pt2<RatFn> rhs = hplus_cocycle(c, scale(c.zeta.frobenius(1), v1), v2);
    CHECK(pt_eq(lhs, rhs));
  }
}

TEST_CASE("hnew bi-additivity (characteristic 2)") {
  const FqField& F = FqField::get(2, 1);
  GroupSpec spec = make_group(GroupKind::Udescended, F, param_a(F));
  GroupCtx<RatFn> c = make_ctx(spec);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 1000; ++it) {
    Pt2<RatFn> v1{rnd_ratfn(F, 3, rng), rnd_ratfn(F, 3, rng)};
    Pt2<RatFn> v2{rnd_ratfn(F, 3, rng), rnd_ratfn(F, 3, rng)};
    Pt2<RatFn> v3{rnd_ratfn(F, 3, rng), rnd_ratfn(F, 3, rng)};
    CHECK(pt_eq(hnew_cocycle(c, pt2_add(v1, v3), v2),
                pt2_add(hnew_cocycle(c, v1, v2), hnew_cocycle(c, v3, v2))));
    CHECK(pt_eq(hnew_cocycle(c, v1, pt2_add(v2, v3)),
                pt2_add(hnew_cocycle(c, v1, v2), hnew_cocycle(c, v1, v3))));
  }
}

TEST_CASE("cocycle lands on the right curve over etale V-points") {
  {
    const FqField& F = FqField::get(3, 2);
    GroupSpec spec = make_group(GroupKind::U, F, param_a(F));
    std::mt19937_64 rng(19);
    for (int it = 0; it < 25; ++it) {
      EtaleVHost host(spec, rnd_ratfn(F, 2, rng));
      GroupCtx<EtaleElem> c = make_ctx(spec, host.A);
      REQUIRE(on_V(c, host.v));
      Pt2<EtaleElem> v2{c.embed(RatFn(Poly::constant(F.by_index(static_cast<long long>(
                            rng() % static_cast<unsigned long long>(F.q())))))),
                        c.embed(RatFn(F))};
      REQUIRE(on_V(c, v2));
      CHECK(detail::ring_zero(g_eval(c, h_cocycle(c, host.v, v2))));
      CHECK(detail::ring_zero(g_eval(c, h_cocycle(c, host.v, pt2_add(host.v, v2)))));
    }
  }
  {
    const FqField& F = FqField::get(2, 2);
    GroupSpec spec = make_group(GroupKind::Uzeta, F, param_a(F));
    std::mt19937_64 rng(23);
    for (int it = 0; it < 25; ++it) {
      EtaleVHost host(spec, rnd_ratfn(F, 2, rng));
      GroupCtx<EtaleElem> c = make_ctx(spec, host.A);
      REQUIRE(on_V(c, host.v));
      Pt2<EtaleElem> v2{c.embed(RatFn(Poly::constant(F.by_index(static_cast<long long>(
                            rng() % static_cast<unsigned long long>(F.q())))))),
                        c.embed(RatFn(F))};
      REQUIRE(on_V(c, v2));
      CHECK(detail::ring_zero(gplus_eval(c, hzeta_cocycle(c, host.v, v2))));
    }
  }
  {
    const FqField& F = FqField::get(2, 1);
    GroupSpec spec = make_group(GroupKind::Udescended, F, param_a(F));
    std::mt19937_64 rng(29);
    for (int it = 0; it < 25; ++it) {
      EtaleVHost host(spec, rnd_ratfn(F, 2, rng));
      GroupCtx<EtaleElem> c = make_ctx(spec, host.A);
      REQUIRE(on_V(c, host.v));
      Pt2<EtaleElem> v1 = host.v;
      Pt2<EtaleElem> v2 = pt2_add(v1, Pt2<EtaleElem>{c.embed(RatFn::from_int(F, 1)), host.A.zero()});
      REQUIRE(on_V(c, v2));
      // g(hnew(v, v')) = c^2 c' + c c'^2 on V x V
      EtaleElem lhs = g_eval(c, hnew_cocycle(c, v1, v2));
      EtaleElem rhs = v1.x * v1.x * v2.x + v1.x * v2.x * v2.x;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("group axioms on random formal points") {
  struct Cfg {
    GroupKind kind;
    int p, m;
  };
  for (Cfg cfg : {Cfg{GroupKind::U, 3, 2}, Cfg{GroupKind::U, 5, 2}, Cfg{GroupKind::Uzeta, 2, 2},
                  Cfg{GroupKind::Udescended, 2, 1}}) {
    const FqField& F = FqField::get(cfg.p, cfg.m);
    GroupSpec spec = make_group(cfg.kind, F, param_a(F));
    GroupCtx<RatFn> c = make_ctx(spec);
    std::mt19937_64 rng(static_cast<unsigned>(100 * cfg.p + cfg.m));
    auto rnd_upt = [&]() {
      return UPt<RatFn>{{rnd_ratfn(F, 2, rng), rnd_ratfn(F, 2, rng)},
                        {rnd_ratfn(F, 2, rng), rnd_ratfn(F, 2, rng)}};
    };
    for (int it = 0; it < 1000; ++it) {
      UPt<RatFn> u1 = rnd_upt(), u2 = rnd_upt(), u3 = rnd_upt();
      CHECK(upt_eq(mul(c, mul(c, u1, u2), u3), mul(c, u1, mul(c, u2, u3))));
      CHECK(upt_eq(mul(c, u1, identity(c)), u1));
      CHECK(upt_eq(mul(c, identity(c), u1), u1));
      CHECK(upt_eq(mul(c, u1, inverse(c, u1)), identity(c)));
      CHECK(upt_eq(mul(c, inverse(c, u1), u1), identity(c)));
      UPt<RatFn> prod = mul(c, u1, u2);
      CHECK(pt_eq(prod.v, pt2_add(u1.v, u2.v)));
      UPt<RatFn> central{{u3.w.x, u3.w.y}, {RatFn(F), RatFn(F)}};
      CHECK(upt_eq(mul(c, central, u1), mul(c, u1, central)));
      UPt<RatFn> com = commutator(c, u1, u2);
      CHECK(com.v.x.is_zero());
      CHECK(com.v.y.is_zero());
      Pt2<RatFn> expected = pt2_add(cocycle(c, u1.v, u2.v), pt2_neg(cocycle(c, u2.v, u1.v)));
      CHECK(pt_eq(com.w, expected));
    }
  }
}

TEST_CASE("on-curve closure of mul over etale algebras (kinds U and Uzeta)") {
  struct Cfg {
    GroupKind kind;
    int p, m;
  };
  for (Cfg cfg : {Cfg{GroupKind::U, 3, 2}, Cfg{GroupKind::Uzeta, 2, 2}}) {
    const FqField& F = FqField::get(cfg.p, cfg.m);
    GroupSpec spec = make_group(cfg.kind, F, param_a(F));
    std::mt19937_64 rng(static_cast<unsigned>(7 * cfg.p));
    for (int it = 0; it < 20; ++it) {
      EtaleVHost host(spec, rnd_ratfn(F, 2, rng));
      GroupCtx<EtaleElem> c = make_ctx(spec, host.A);
      Pt2<EtaleElem> vc{c.embed(RatFn(Poly::constant(F.by_index(static_cast<long long>(
                            rng() % static_cast<unsigned long long>(F.q())))))),
                        c.embed(RatFn(F))};
      UPt<EtaleElem> u1{{host.A.zero(), host.A.zero()}, host.v};
      UPt<EtaleElem> u2{{host.A.zero(), host.A.zero()}, vc};
      REQUIRE(on_curve(c, u1));
      REQUIRE(on_curve(c, u2));
      UPt<EtaleElem> u12 = mul(c, u1, u2);
      CHECK(on_curve(c, u12));
      CHECK(on_curve(c, mul(c, u12, inverse(c, u1))));
      CHECK(on_curve(c, commutator(c, u1, u2)));
    }
  }
}

TEST_CASE("non-commutativity witnesses for p = 2, 3, 5") {
  struct Cfg {
    GroupKind kind;
    int p, m;
  };
  for (Cfg cfg : {Cfg{GroupKind::Uzeta, 2, 2}, Cfg{GroupKind::U, 3, 2}, Cfg{GroupKind::U, 5, 2}}) {
    const FqField& F = FqField::get(cfg.p, cfg.m);
    GroupSpec spec = make_group(cfg.kind, F, param_a(F));
    GroupCtx<RatFn> c = make_ctx(spec);
    RatFn zero(F);
    Pt2<RatFn> v1{RatFn::from_int(F, 1), zero};
    Pt2<RatFn> v2{RatFn(Poly::constant(F.gen())), zero};
    REQUIRE(on_V(c, v1));
    REQUIRE(on_V(c, v2));
    UPt<RatFn> u1{{zero, zero}, v1}, u2{{zero, zero}, v2};
    UPt<RatFn> com = commutator(c, u1, u2);
    bool nontrivial = !(com.w.x.is_zero() && com.w.y.is_zero());
    CHECK(nontrivial);
    CHECK(on_curve(c, com));
  }
}

TEST_CASE("descent verification report is clean (q = 2 and q = 8)") {
  for (int m : {1, 3}) {
    const FqField& F = FqField::get(2, m);
    GroupSpec spec = make_group(GroupKind::Udescended, F, param_a(F));
    DescentReport rep = descent_twist(spec, 64);
    CHECK(rep.ok());
    CHECK(rep.pairs_checked == 64);
    for (auto& f : rep.failures) MESSAGE(f);
  }
}

TEST_CASE("descended group: conic fiber points over k multiply correctly") {
  const FqField& F = FqField::get(2, 1);
  GroupSpec spec = make_group(GroupKind::Udescended, F, param_a(F));
  GroupCtx<RatFn> c = make_ctx(spec);
  std::mt19937_64 rng(37);
  RatFn zero(F);
  auto conic_point = [&](const RatFn& s) {
    RatFn den = s * s + c.a;
    return Pt2<RatFn>{s * s / den, s / den};
  };
  for (int it = 0; it < 200; ++it) {
    RatFn s1 = rnd_ratfn(F, 2, rng), s2 = rnd_ratfn(F, 2, rng);
    Pt2<RatFn> w1 = conic_point(s1), w2 = conic_point(s2);
    UPt<RatFn> u1{w1, {zero, zero}}, u2{w2, {zero, zero}};
    REQUIRE(on_curve(c, u1));
    REQUIRE(on_curve(c, u2));
    CHECK(on_curve(c, mul(c, u1, u2)));
    CHECK(on_curve(c, inverse(c, u1)));
  }
}
