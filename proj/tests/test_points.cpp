// Pole bounds, complete point enumeration, and the independent brute-force
// oracle for V_a(k) and W_a(k).

#include <set>

#include "doctest.h"
#include "wug/points.hpp"

using namespace wug;

namespace {
RatFn param_a(const FqField& F) { return RatFn::T(F) * (RatFn::T(F) - RatFn::from_int(F, 1)); }

std::set<std::pair<std::string, std::string>> as_set(const std::vector<Pt2<RatFn>>& pts) {
  std::set<std::pair<std::string, std::string>> s;
  for (auto& pt : pts) s.insert({pt.x.to_string(), pt.y.to_string()});
  return s;
}
}  // namespace

TEST_CASE("pole bounds: W with p > 3 allows no poles at all") {
  for (int p : {5, 7}) {
    const FqField& F = FqField::get(p, 2);
    GroupSpec spec = make_group(GroupKind::W, F, param_a(F));
    PoleBound pb = pole_bounds(spec);
    CHECK(pb.D.terms().empty());
  }
}

TEST_CASE("pole bounds: W with p = 3 allows a single pole at T+1") {
  const FqField& F = FqField::get(3, 2);
  GroupSpec spec = make_group(GroupKind::W, F, param_a(F));
  PoleBound pb = pole_bounds(spec);
  REQUIRE(pb.D.terms().size() == 1);
  Place vhalf = Place::finite(Poly::T(F) + Poly::constant(F.one()));
  CHECK(pb.D.coeff(vhalf) == 1);
}

TEST_CASE("pole bounds: V with p = 2, q = 4 allows no poles; oracle confirms") {
  const FqField& F = FqField::get(2, 2);
  GroupSpec spec = make_group(GroupKind::V, F, param_a(F));
  PoleBound pb = pole_bounds(spec);
  CHECK(pb.D.terms().empty());
  auto pts = enumerate_points(spec);
  auto oracle = brute_force_points(spec, 6);
  CHECK(as_set(pts) == as_set(oracle));
  CHECK(pts.size() == 4);  // (c, 0), c in F_4
}

TEST_CASE("W point counts match the closed forms") {
  {
    const FqField& F = FqField::get(3, 2);
    GroupSpec spec = make_group(GroupKind::W, F, param_a(F));
    auto pts = enumerate_points(spec);
    CHECK(pts.size() == 9);
    GroupCtx<RatFn> c = make_ctx(spec);
    RatFn tp1 = RatFn::T(F) + RatFn::from_int(F, 1);
    std::set<std::pair<std::string, std::string>> expected;
    for (long long i = 0; i < 9; ++i)
      for (long long j = 0; j < 9; ++j) {
        FqElem lam = F.by_index(i), mu = F.by_index(j);
        if (!(lam + lam.pow(3)).is_zero() || !(mu + mu.pow(3)).is_zero()) continue;
        RatFn x = RatFn(Poly::constant(lam)) + RatFn(Poly::constant(mu)) / tp1;
        RatFn y = RatFn(Poly::constant(mu)) / tp1;
        expected.insert({x.to_string(), y.to_string()});
      }
    CHECK(expected.size() == 9);
    CHECK(as_set(pts) == expected);
    for (auto& pt : pts) CHECK(g_eval(c, pt).is_zero());
  }
  for (int p : {5, 7}) {
    const FqField& F = FqField::get(p, 2);
    GroupSpec spec = make_group(GroupKind::W, F, param_a(F));
    auto pts = enumerate_points(spec);
    CHECK(static_cast<int>(pts.size()) == p);
    for (auto& pt : pts) {
      CHECK(pt.y.is_zero());
      CHECK(pt.x.is_polynomial());
      CHECK(pt.x.num().degree() <= 0);
      FqElem lam = pt.x.num().is_zero() ? F.zero() : pt.x.num().coeff(0);
      CHECK((lam + lam.pow(p)).is_zero());
    }
  }
}

TEST_CASE("V counts for the quadratic constant fields") {
  for (int p : {2, 3}) {
    const FqField& F = FqField::get(p, 2);
    GroupSpec spec = make_group(GroupKind::V, F, param_a(F));
    auto pts = enumerate_points(spec);
    CHECK(pts.size() == static_cast<size_t>(F.q()));
    for (auto& pt : pts) CHECK(pt.y.is_zero());
  }
}

TEST_CASE("brute force equals enumeration at H = 3 and H = 4 (p = 3, q = 9)") {
  const FqField& F = FqField::get(3, 2);
  GroupSpec spec = make_group(GroupKind::W, F, param_a(F));
  auto pts = enumerate_points(spec);
  CHECK(as_set(brute_force_points(spec, 3)) == as_set(pts));
  CHECK(as_set(brute_force_points(spec, 4)) == as_set(pts));
}

TEST_CASE("brute force at H = 0: constant points only") {
  const FqField& F = FqField::get(5, 2);
  GroupSpec spec = make_group(GroupKind::W, F, param_a(F));
  auto pts = brute_force_points(spec, 0);
  CHECK(pts.size() == 5);
  bool has_origin = false;
  for (auto& pt : pts)
    if (pt.x.is_zero() && pt.y.is_zero()) has_origin = true;
  CHECK(has_origin);
}

TEST_CASE("enumerated sets are subgroups (closed under + and -)") {
  for (auto [kind, p] : std::vector<std::pair<GroupKind, int>>{
           {GroupKind::W, 3}, {GroupKind::W, 5}, {GroupKind::V, 3}, {GroupKind::V, 2}}) {
    const FqField& F = FqField::get(p, 2);
    GroupSpec spec = make_group(kind, F, param_a(F));
    auto pts = enumerate_points(spec);
    auto s = as_set(pts);
    for (auto& a : pts)
      for (auto& b : pts) {
        Pt2<RatFn> sum{a.x + b.x, a.y + b.y};
        CHECK(s.count({sum.x.to_string(), sum.y.to_string()}) == 1);
      }
    for (auto& a : pts) {
      Pt2<RatFn> neg{-a.x, -a.y};
      CHECK(s.count({neg.x.to_string(), neg.y.to_string()}) == 1);
    }
  }
}

TEST_CASE("W at p = 2 has infinitely many points: enumeration refuses") {
  const FqField& F = FqField::get(2, 2);
  GroupSpec spec = make_group(GroupKind::W, F, param_a(F));
  CHECK_THROWS_AS(enumerate_points(spec), Error);
  auto pts = brute_force_points(spec, 2);
  GroupCtx<RatFn> c = make_ctx(spec);
  CHECK(pts.size() > 4);
  for (auto& pt : pts) CHECK(g_eval(c, pt).is_zero());
  RatFn s = RatFn::T(F);
  RatFn den = s * s + c.a;
  auto key = std::make_pair((s * s / den).to_string(), (s / den).to_string());
  CHECK(as_set(pts).count(key) == 1);
}

TEST_CASE("every returned point is on-curve exactly") {
  for (auto [kind, p] : std::vector<std::pair<GroupKind, int>>{{GroupKind::W, 3}, {GroupKind::V, 2}}) {
    const FqField& F = FqField::get(p, 2);
    GroupSpec spec = make_group(kind, F, param_a(F));
    GroupCtx<RatFn> c = make_ctx(spec);
    for (auto& pt : enumerate_points(spec)) {
      if (kind == GroupKind::W)
        CHECK(g_eval(c, pt).is_zero());
      else
        CHECK(f_eval(c, pt).is_zero());
    }
    for (auto& pt : brute_force_points(spec, 2)) {
      if (kind == GroupKind::W)
        CHECK(g_eval(c, pt).is_zero());
      else
        CHECK(f_eval(c, pt).is_zero());
    }
  }
}
