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

#include "wug/poly.hpp"

#include <sstream>

namespace wug {

void Poly::prune() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FqElem& c) {
  Poly r(c.field());
  if (!c.is_zero()) r.c_.push_back(c);
  return r;
}

Poly Poly::T(const FqField& F) {
  Poly r(F);
  r.c_ = {F.zero(), F.one()};
  return r;
}

Poly Poly::from_ints(const FqField& F, const std::vector<long long>& lo) {
  Poly r(F);
  r.c_.reserve(lo.size());
  for (auto v : lo) r.c_.push_back(F.from_int(v));
  r.prune();
  return r;
}

const FqElem& Poly::leading() const {
  if (c_.empty()) fail(errc::zero_input, "leading coefficient of zero polynomial");
  return c_.back();
}

void Poly::set_coeff(int i, const FqElem& v) {
  if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1, F_->zero());
  c_[static_cast<size_t>(i)] = v;
  prune();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*F_);
  size_t n = std::max(c_.size(), o.c_.size());
  r.c_.reserve(n);
  for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
  r.prune();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(*F_);
  Poly r(*F_);
  r.c_.assign(c_.size() + o.c_.size() - 1, F_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.prune();
  return r;
}

Poly Poly::operator*(const FqElem& s) const {
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  r.prune();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (degree() != o.degree()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Poly Poly::shift(int k) const {
  if (is_zero()) return *this;
  Poly r(*F_);
  r.c_.assign(c_.size() + static_cast<size_t>(k), F_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(errc::zero_input, "division by zero polynomial");
  Poly q(*F_), r = *this;
  FqElem lcinv = d.leading().inverse();
  int dd = d.degree();
  while (r.degree() >= dd) {
    int k = r.degree() - dd;
    FqElem c = r.leading() * lcinv;
    q.set_coeff(k, c);
    r -= d.shift(k) * c;
  }
  return {q, r};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  Poly r(*F_);
  if (degree() < 1) return r;
  r.c_.reserve(c_.size() - 1);
  for (int i = 1; i <= degree(); ++i) r.c_.push_back(c_[static_cast<size_t>(i)] * F_->from_int(i));
  r.prune();
  return r;
}

Poly Poly::frobenius(int e) const {
  // (sum c_i T^i)^(p^e) = sum c_i^(p^e) T^(i p^e) in characteristic p
  Poly r(*F_);
  if (is_zero()) return r;
  long long pe = 1;
  for (int i = 0; i < e; ++i) pe *= F_->p();
  r.c_.assign(static_cast<size_t>(degree()) * static_cast<size_t>(pe) + 1, F_->zero());
  for (int i = 0; i <= degree(); ++i)
    r.c_[static_cast<size_t>(i) * static_cast<size_t>(pe)] = c_[static_cast<size_t>(i)].frobenius(e);
  r.prune();
  return r;
}

Poly Poly::pow(long long e) const {
  Poly r = Poly::constant(F_->one());
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

FqElem Poly::eval(const FqElem& x) const {
  FqElem acc = F_->zero();
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
  return acc;
}

int Poly::multiplicity(const Poly& d) const {
  if (is_zero()) fail(errc::zero_input, "multiplicity in zero polynomial");
  if (d.degree() < 1) fail(errc::precondition_violated, "multiplicity of constant divisor");
  int k = 0;
  Poly r = *this;
  for (;;) {
    auto [q, rem] = r.divmod(d);
    if (!rem.is_zero()) return k;
    ++k;
    r = q;
  }
}

int Poly::cmp(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    long long ia = a.coeff(i).lex_index(), ib = b.coeff(i).lex_index();
    if (ia != ib) return ia < ib ? -1 : 1;
  }
  return 0;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const FqField& F = *F_;
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    FqElem c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    // render coefficient as F_p polynomial in z if needed
    bool unit = c.is_one();
    std::string cs;
    if (!unit) {
      std::ostringstream co;
      bool cfirst = true;
      int terms = 0;
      for (int j = F.m() - 1; j >= 0; --j) {
        int v = c.coeff(j);
        if (!v) continue;
        ++terms;
        if (!cfirst) co << "+";
        cfirst = false;
        if (j == 0 || v != 1) co << v;
        if (j > 0 && v != 1) co << "*";
        if (j == 1) co << "z";
        if (j > 1) co << "z^" << j;
      }
      cs = co.str();
      if (terms > 1 && i > 0) cs = "(" + cs + ")";
    }
    if (i == 0) {
      os << (unit ? "1" : cs);
    } else {
      if (!unit) os << cs << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
  const FqField& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F.one()), s1(F);
  Poly t0(F), t1 = Poly::constant(F.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FqElem lcinv = r0.leading().inverse();
  return {r0 * lcinv, s0 * lcinv, t0 * lcinv};
}

Poly powmod(const Poly& base, long long e, const Poly& mod) {
  Poly r = Poly::constant(base.field().one()) % mod;
  Poly b = base % mod;
  while (e > 0) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

}  // namespace wug
