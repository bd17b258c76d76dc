// Weak/strong approximation over F_q(T).

#include <random>

#include "doctest.h"
#include "wug/approx.hpp"

using namespace wug;

namespace {
RatFn random_ratfn(const FqField& F, int maxdeg, std::mt19937_64& rng) {
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
  if (n.is_zero()) n = Poly::constant(F.one());
  return RatFn(n, d);
}
}  // namespace

TEST_CASE("single target 1/T at (T)") {
  const FqField& F = FqField::get(3, 2);
  Place vT = Place::finite(Poly::T(F));
  RatFn target = RatFn::T(F).inverse();
  LaurentLocal t = expand(target, vT, 1);
  RatFn beta = approximate({{vT, t, 1}});
  RatFn diff = beta - target;
  if (!diff.is_zero()) CHECK(ord(diff, vT) >= 1);
}

TEST_CASE("two finite targets with prescribed principal parts, strong mode") {
  std::mt19937_64 rng(3);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
    const FqField& F = FqField::get(p, m);
    Place v0 = Place::finite(Poly::T(F));
    Place v1 = Place::finite(Poly::T(F) - Poly::constant(F.one()));
    for (int it = 0; it < 40; ++it) {
      RatFn x0 = random_ratfn(F, 4, rng), x1 = random_ratfn(F, 4, rng);
      if (x0.is_zero() || x1.is_zero()) continue;
      int N0 = 1, N1 = 2;
      LaurentLocal t0 = expand(x0, v0, N0), t1 = expand(x1, v1, N1);
      RatFn beta = approximate({{v0, t0, N0}, {v1, t1, N1}}, {.integral_away_from_infinity = true});
      // re-expansion matches to requested precision
      LaurentLocal r0 = expand(beta, v0, N0), r1 = expand(beta, v1, N1);
      CHECK(r0.agrees_with(t0));
      CHECK(r1.agrees_with(t1));
      // integral away from infinity outside the target set
      Divisor D = support(beta);
      for (auto& [v, n] : D.terms()) {
        if (v.is_infinity() || v == v0 || v == v1) continue;
        CHECK(n >= 0);
      }
    }
  }
}

TEST_CASE("infinity truncation step: alpha = head of the expansion") {
  // z in k_inf: alpha := sum_{n <= 0} c_n T^{-n} has ord_inf(alpha - z) > 0
  // and alpha integral elsewhere.
  std::mt19937_64 rng(11);
  const FqField& F = FqField::get(3, 2);
  Place vinf = Place::infinity(F);
  for (int it = 0; it < 50; ++it) {
    RatFn z = random_ratfn(F, 5, rng);
    if (z.is_zero()) continue;
    LaurentLocal t = expand(z, vinf, 1);
    RatFn alpha = approximate({{vinf, t, 1}}, {.integral_away_from_infinity = true});
    CHECK(alpha.is_polynomial());
    RatFn diff = alpha - z;
    if (!diff.is_zero()) CHECK(ord(diff, vinf) >= 1);
  }
}

TEST_CASE("weak mode: high precision at infinity plus finite windows") {
  std::mt19937_64 rng(13);
  const FqField& F = FqField::get(3, 2);
  Place v0 = Place::finite(Poly::T(F));
  Place vinf = Place::infinity(F);
  for (int it = 0; it < 30; ++it) {
    RatFn x0 = random_ratfn(F, 3, rng), xi = random_ratfn(F, 3, rng);
    if (x0.is_zero() || xi.is_zero()) continue;
    int N0 = 3, Ni = 4;
    LaurentLocal t0 = expand(x0, v0, N0), ti = expand(xi, vinf, Ni);
    RatFn beta = approximate({{v0, t0, N0}, {vinf, ti, Ni}});
    CHECK(expand(beta, v0, N0).agrees_with(t0));
    CHECK(expand(beta, vinf, Ni).agrees_with(ti));
  }
}

TEST_CASE("strong mode rejects unreachable infinity precision") {
  const FqField& F = FqField::get(3, 2);
  Place v0 = Place::finite(Poly::T(F));
  Place vinf = Place::infinity(F);
  LaurentLocal t0 = expand(RatFn::T(F).inverse(), v0, 1);
  LaurentLocal ti = expand(RatFn::T(F).inverse(), vinf, 5);
  CHECK_THROWS_AS(approximate({{v0, t0, 1}, {vinf, ti, 5}}, {.integral_away_from_infinity = true}),
                  Error);
}
