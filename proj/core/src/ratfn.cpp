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

#include "wug/ratfn.hpp"

namespace wug {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFn::normalize() {
  if (den_.is_zero()) fail(errc::zero_input, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field().one());
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FqElem lc = den_.leading();
  if (!lc.is_one()) {
    FqElem inv = lc.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFn RatFn::operator+(const RatFn& o) const { return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFn RatFn::operator-(const RatFn& o) const { return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}
RatFn RatFn::operator*(const RatFn& o) const { return RatFn(num_ * o.num_, den_ * o.den_); }
RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) fail(errc::zero_input, "division by zero");
  return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::inverse() const {
  if (is_zero()) fail(errc::zero_input, "inverse of zero");
  return RatFn(den_, num_);
}

RatFn RatFn::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFn r = RatFn::from_int(field(), 1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

RatFn RatFn::frobenius(int e) const { return RatFn(num_.frobenius(e), den_.frobenius(e)); }

RatFn RatFn::derivative() const {
  return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Poly RatFn::polynomial_part() const { return num_.divmod(den_).first; }

FqElem RatFn::eval(const FqElem& x) const {
  FqElem d = den_.eval(x);
  if (d.is_zero()) fail(errc::pole_at_place, "evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RatFn::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  return "(" + n + ")/(" + d + ")";
}

int RatFn::cmp(const RatFn& a, const RatFn& b) {
  int c = Poly::cmp(a.den_, b.den_);
  if (c != 0) return c;
  return Poly::cmp(a.num_, b.num_);
}

namespace {
// p-th root of a polynomial that is a p-th power, else nullopt.
std::optional<Poly> poly_pth_root(const Poly& f) {
  const FqField& F = f.field();
  int p = F.p();
  if (f.is_zero()) return Poly(F);
  Poly r(F);
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    if (i % p != 0) return std::nullopt;
    r.set_coeff(i / p, f.coeff(i).pth_root());
  }
  return r;
}
}  // namespace

std::optional<RatFn> is_pth_power(const RatFn& x) {
  // num and den are coprime with den monic, so x = y^p iff both num and den
  // are p-th powers in F_q[T] (F_q perfect makes coefficient roots exact).
  auto rn = poly_pth_root(x.num());
  if (!rn) return std::nullopt;
  auto rd = poly_pth_root(x.den());
  if (!rd) return std::nullopt;
  return RatFn(*rn, *rd);
}

std::optional<RatFn> is_pe_power(const RatFn& x, int e) {
  RatFn cur = x;
  for (int i = 0; i < e; ++i) {
    auto r = is_pth_power(cur);
    if (!r) return std::nullopt;
    cur = *r;
  }
  return cur;
}

}  // namespace wug
