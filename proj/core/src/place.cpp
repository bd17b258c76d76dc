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

#include "wug/place.hpp"

#include <algorithm>
#include <mutex>

namespace wug {

// ---------------------------------------------------------------------------
// Place
// ---------------------------------------------------------------------------

Place Place::finite(const Poly& pi) {
  if (pi.degree() < 1) fail(errc::precondition_violated, "place polynomial must be nonconstant");
  Poly m = pi.monic();
  if (!is_irreducible(m)) fail(errc::precondition_violated, "place polynomial must be irreducible: " + m.to_string());
  Place v;
  v.F_ = &pi.field();
  v.infinite_ = false;
  v.pi_ = m;
  v.deg_ = m.degree();
  return v;
}

Place Place::infinity(const FqField& F) {
  Place v;
  v.F_ = &F;
  v.infinite_ = true;
  v.deg_ = 1;
  return v;
}

const Poly& Place::pi() const {
  if (infinite_) fail(errc::precondition_violated, "infinity has no finite uniformizer polynomial");
  return pi_;
}

bool Place::operator==(const Place& o) const {
  if (F_ != o.F_) return false;
  if (infinite_ != o.infinite_) return false;
  return infinite_ || pi_ == o.pi_;
}

int Place::cmp(const Place& a, const Place& b) {
  if (a.infinite_ != b.infinite_) return a.infinite_ ? -1 : 1;
  if (a.infinite_) return 0;
  return Poly::cmp(a.pi_, b.pi_);
}

std::string Place::to_string() const { return infinite_ ? "inf" : pi_.to_string(); }

// ---------------------------------------------------------------------------
// Divisor
// ---------------------------------------------------------------------------

void Divisor::add(const Place& v, int n) {
  if (n == 0) return;
  auto it = std::lower_bound(t_.begin(), t_.end(), v, [](const auto& kv, const Place& p) {
    return Place::cmp(kv.first, p) < 0;
  });
  if (it != t_.end() && it->first == v) {
    it->second += n;
    if (it->second == 0) t_.erase(it);
  } else {
    t_.insert(it, {v, n});
  }
}

int Divisor::coeff(const Place& v) const {
  for (auto& [p, n] : t_)
    if (p == v) return n;
  return 0;
}

int Divisor::degree() const {
  int d = 0;
  for (auto& [p, n] : t_) d += p.degree() * n;
  return d;
}

// ---------------------------------------------------------------------------
// ord
// ---------------------------------------------------------------------------

int ord(const RatFn& x, const Place& v) {
  if (x.is_zero()) fail(errc::zero_input, "ord of zero");
  if (v.is_infinity()) return x.den().degree() - x.num().degree();
  return x.num().multiplicity(v.pi()) - x.den().multiplicity(v.pi());
}

// ---------------------------------------------------------------------------
// ResidueField / ResidueElem
// ---------------------------------------------------------------------------

ResidueField::ResidueField(const Place& v) : v_(v) {
  order_ = 1;
  for (int i = 0; i < v.degree(); ++i) order_ *= v.field().q();
}

const ResidueField& ResidueField::at(const Place& v) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<ResidueField>> cache;
  std::lock_guard<std::mutex> lk(mu);
  for (auto& r : cache)
    if (r->place() == v) return *r;
  cache.push_back(std::unique_ptr<ResidueField>(new ResidueField(v)));
  return *cache.back();
}

ResidueElem ResidueField::make(Poly rep) const {
  ResidueElem e;
  e.R_ = this;
  e.rep_ = std::move(rep);
  return e;
}

ResidueElem ResidueField::from_poly(const Poly& f) const {
  if (v_.is_infinity()) {
    if (f.degree() > 0) fail(errc::precondition_violated, "nonconstant residue at infinity");
    return make(f);
  }
  return make(f % v_.pi());
}

ResidueElem ResidueField::by_index(long long idx) const {
  Poly rep(base());
  for (int i = 0; i < degree(); ++i) {
    rep.set_coeff(i, base().by_index(idx % base().q()));
    idx /= base().q();
  }
  return make(rep);
}

ResidueElem ResidueElem::operator+(const ResidueElem& o) const {
  if (R_ != o.R_) fail(errc::ring_mismatch, "residue elements of different places");
  return R_->from_poly(rep_ + o.rep_);
}
ResidueElem ResidueElem::operator-(const ResidueElem& o) const { return *this + (-o); }
ResidueElem ResidueElem::operator-() const {
  ResidueElem r = *this;
  r.rep_ = -r.rep_;
  return r;
}
ResidueElem ResidueElem::operator*(const ResidueElem& o) const {
  if (R_ != o.R_) fail(errc::ring_mismatch, "residue elements of different places");
  return R_->from_poly(rep_ * o.rep_);
}

ResidueElem ResidueElem::inverse() const {
  if (is_zero()) fail(errc::zero_input, "inverse of zero residue");
  if (R_->place().is_infinity() || R_->degree() == 1) {
    Poly rep = Poly::constant(rep_.coeff(0).inverse());
    return R_->from_poly(rep);
  }
  auto g = xgcd(rep_, R_->place().pi());
  if (g.g.degree() != 0) fail(errc::internal, "non-invertible residue representative");
  return R_->from_poly(g.u * Poly::constant(g.g.coeff(0).inverse()));
}

ResidueElem ResidueElem::pow(long long e) const {
  if (is_zero()) {
    if (e == 0) return R_->one();
    if (e < 0) fail(errc::zero_input, "negative power of zero");
    return R_->zero();
  }
  long long qm1 = R_->order() - 1;
  e %= qm1;
  if (e < 0) e += qm1;
  ResidueElem r = R_->one(), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

ResidueElem ResidueElem::frobenius(int e) const {
  ResidueElem r = *this;
  for (int i = 0; i < e; ++i) r = r.pow(R_->p());
  return r;
}

ResidueElem ResidueElem::pth_root() const {
  // x -> x^(Q/p) inverts Frobenius on a field of order Q.
  if (is_zero()) return *this;
  return pow(R_->order() / R_->p());
}

long long ResidueElem::lex_index() const {
  long long idx = 0;
  for (int i = R_->degree() - 1; i >= 0; --i)
    idx = idx * R_->base().q() + rep_.coeff(i).lex_index();
  return idx;
}

bool is_pminus1_power(const ResidueElem& x) {
  if (x.is_zero()) return true;
  long long Q = x.rfield().order();
  int p = x.rfield().p();
  return x.pow((Q - 1) / (p - 1)).is_one();
}

// ---------------------------------------------------------------------------
// residue
// ---------------------------------------------------------------------------

ResidueElem residue(const RatFn& x, const Place& v) {
  const ResidueField& R = ResidueField::at(v);
  if (x.is_zero()) return R.zero();
  if (ord(x, v) < 0) fail(errc::pole_at_place, "residue at a pole: " + v.to_string());
  if (v.is_infinity()) {
    int dn = x.num().degree(), dd = x.den().degree();
    if (dn < dd) return R.zero();
    return R.from_base(x.num().leading() / x.den().leading());
  }
  // strip pi from num and den, then invert den mod pi
  const Poly& pi = v.pi();
  Poly n = x.num(), d = x.den();
  int en = 0, ed = 0;
  for (;;) {
    auto [q, r] = n.divmod(pi);
    if (!r.is_zero()) break;
    n = q;
    ++en;
  }
  for (;;) {
    auto [q, r] = d.divmod(pi);
    if (!r.is_zero()) break;
    d = q;
    ++ed;
  }
  if (en > ed) return R.zero();
  ResidueElem rn = R.from_poly(n), rd = R.from_poly(d);
  return rn * rd.inverse();
}

// ---------------------------------------------------------------------------
// differentials
// ---------------------------------------------------------------------------

int ord_differential(const RatFn& b, const Place& v) {
  RatFn db = b.derivative();
  if (db.is_zero()) fail(errc::exact_differential_zero, "db = 0: b is a p-th power");
  if (v.is_infinity()) return ord(db, v) - 2;
  return ord(db, v);
}

ResidueElem diff_ratio(const RatFn& b, const Place& v, int m) {
  const FqField& F = b.field();
  int p = F.p();
  if (m % p == 0) fail(errc::precondition_violated, "m must be coprime to p");
  int o = ord_differential(b, v);
  if (o + 1 != m * (p - 1))
    fail(errc::precondition_violated, "ord_v(db) + 1 != m(p-1) at " + v.to_string());
  RatFn bp = b.derivative();
  int minv_int = ((m % p) + p) % p;
  FqElem minv = F.from_int(minv_int).inverse();
  RatFn quantity(F);
  if (v.is_infinity()) {
    // uniformizer u = 1/T: db/du = -T^2 b'(T); u^(1-m(p-1)) = T^(m(p-1)-1)
    RatFn t = RatFn::T(F);
    quantity = RatFn(Poly::constant(-minv)) * t.pow(m * (p - 1) + 1) * bp;
  } else {
    // db/dpi = b' / pi'; pi' is a v-unit
    RatFn pip(Poly(v.pi().derivative()));
    quantity = RatFn(Poly::constant(minv)) * RatFn(Poly(v.pi())).pow(1 - m * (p - 1)) * bp / pip;
  }
  if (!quantity.is_zero() && ord(quantity, v) != 0)
    fail(errc::internal, "diff_ratio quantity is not a v-unit");
  return residue(quantity, v);
}

Divisor support(const RatFn& x) {
  if (x.is_zero()) fail(errc::zero_input, "support of zero");
  Divisor D;
  for (auto& pf : factor(x.num())) D.add(Place::finite(pf.p), pf.mult);
  for (auto& pf : factor(x.den())) D.add(Place::finite(pf.p), -pf.mult);
  int oi = ord(x, Place::infinity(x.field()));
  D.add(Place::infinity(x.field()), oi);
  return D;
}

}  // namespace wug
