// Truncated Laurent series: expansion, arithmetic, precision semantics.

#include <random>

#include "doctest.h"
#include "wug/laurent.hpp"

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

TEST_CASE("expand: geometric series at (T)") {
  const FqField& F = FqField::get(3, 2);
  RatFn x = (RatFn::from_int(F, 1) - RatFn::T(F)).inverse();
  Place vT = Place::finite(Poly::T(F));
  LaurentLocal e = expand(x, vT, 3);
  CHECK(e.minv() == 0);
  CHECK(e.prec() == 3);
  for (int i = 0; i < 3; ++i) CHECK(e.coeff(i) == ResidueField::at(vT).one());
}

TEST_CASE("expand: T(T-1) at infinity is u^-2 - u^-1 + O(1)") {
  const FqField& F = FqField::get(3, 2);
  RatFn a = RatFn::T(F) * (RatFn::T(F) - RatFn::from_int(F, 1));
  Place vinf = Place::infinity(F);
  LaurentLocal e = expand(a, vinf, 0);
  const ResidueField& R = ResidueField::at(vinf);
  CHECK(e.minv() == -2);
  CHECK(e.coeff(-2) == R.one());
  CHECK(e.coeff(-1) == -R.one());
}

TEST_CASE("expand then lift recovers the function to precision") {
  std::mt19937_64 rng(5);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
    const FqField& F = FqField::get(p, m);
    Place vT = Place::finite(Poly::T(F));
    Place v1 = Place::finite(Poly::T(F) - Poly::constant(F.one()));
    Place vinf = Place::infinity(F);
    for (const Place& v : {vT, v1, vinf}) {
      for (int it = 0; it < 40; ++it) {
        RatFn x = random_ratfn(F, 4, rng);
        if (x.is_zero()) continue;
        int prec = ord(x, v) + 9;
        LaurentLocal e = expand(x, v, prec);
        RatFn diff = x - e.lift();
        if (!diff.is_zero()) CHECK(ord(diff, v) >= prec);
      }
    }
  }
}

TEST_CASE("precision soundness: recomputing at higher precision agrees") {
  std::mt19937_64 rng(17);
  const FqField& F = FqField::get(3, 2);
  Place vT = Place::finite(Poly::T(F));
  for (int it = 0; it < 60; ++it) {
    RatFn x = random_ratfn(F, 4, rng), y = random_ratfn(F, 4, rng);
    if (x.is_zero() || y.is_zero()) continue;
    LaurentLocal lo_x = expand(x, vT, 4), hi_x = expand(x, vT, 9);
    LaurentLocal lo_y = expand(y, vT, 4), hi_y = expand(y, vT, 9);
    CHECK((lo_x * lo_y).agrees_with(hi_x * hi_y));
    CHECK((lo_x + lo_y).agrees_with(hi_x + hi_y));
    CHECK(lo_x.inverse().agrees_with(hi_x.inverse()));
    CHECK(lo_x.frobenius(1).agrees_with(hi_x.frobenius(1)));
  }
}

TEST_CASE("arithmetic matches expansion of exact arithmetic") {
  std::mt19937_64 rng(19);
  const FqField& F = FqField::get(2, 2);
  Place vinf = Place::infinity(F);
  for (int it = 0; it < 60; ++it) {
    RatFn x = random_ratfn(F, 4, rng), y = random_ratfn(F, 4, rng);
    if (x.is_zero() || y.is_zero()) continue;
    LaurentLocal ex = expand(x, vinf, 8), ey = expand(y, vinf, 8);
    CHECK((ex + ey).agrees_with(expand(x + y, vinf, 8)));
    CHECK((ex * ey).agrees_with(expand(x * y, vinf, 16)));
    CHECK(ex.inverse().agrees_with(expand(x.inverse(), vinf, 8)));
    CHECK(ex.frobenius(1).agrees_with(expand(x.frobenius(1), vinf, 16)));
    CHECK(ex.mul_exact(y).agrees_with(expand(x * y, vinf, 16)));
  }
}

TEST_CASE("inverse requires a known leading term") {
  const FqField& F = FqField::get(3, 2);
  Place vT = Place::finite(Poly::T(F));
  LaurentLocal z = LaurentLocal::unknown(vT, 5);
  CHECK_THROWS_AS(z.inverse(), Error);
}

TEST_CASE("residue field coefficients at a degree-2 place") {
  const FqField& F = FqField::get(2, 2);
  auto irr2 = monic_irreducibles(F, 2);
  REQUIRE(!irr2.empty());
  Place v = Place::finite(irr2[0]);
  CHECK(ResidueField::at(v).order() == 16);
  std::mt19937_64 rng(23);
  for (int it = 0; it < 20; ++it) {
    RatFn x = random_ratfn(F, 3, rng);
    if (x.is_zero()) continue;
    LaurentLocal e = expand(x, v, ord(x, v) + 6);
    RatFn diff = x - e.lift();
    if (!diff.is_zero()) CHECK(ord(diff, v) >= e.prec());
  }
}
