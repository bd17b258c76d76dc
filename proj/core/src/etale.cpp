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

#include "wug/etale.hpp"

#include <sstream>

namespace wug {
namespace {

// polynomial helpers over the coefficient field k = F_q(T)
using RPoly = std::vector<RatFn>;

int rdeg(const RPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[static_cast<size_t>(i)].is_zero()) return i;
  return -1;
}

RPoly rderiv(const RPoly& a, const FqField& F) {
  RPoly r;
  for (int i = 1; i <= rdeg(a); ++i)
    r.push_back(a[static_cast<size_t>(i)] * RatFn::from_int(F, i));
  return r;
}

RPoly rmod(RPoly a, const RPoly& b) {
  int db = rdeg(b);
  if (db < 0) fail(errc::zero_input, "rmod by zero");
  RatFn lcinv = b[static_cast<size_t>(db)].inverse();
  for (int da = rdeg(a); da >= db; da = rdeg(a)) {
    RatFn c = a[static_cast<size_t>(da)] * lcinv;
    for (int j = 0; j <= db; ++j)
      a[static_cast<size_t>(da - db + j)] -= c * b[static_cast<size_t>(j)];
    if (rdeg(a) >= da) fail(errc::internal, "rmod did not reduce degree");
  }
  return a;
}

bool rcoprime(RPoly a, RPoly b) {
  if (rdeg(a) < rdeg(b)) std::swap(a, b);
  while (rdeg(b) >= 0) {
    RPoly r = rmod(a, b);
    a = b;
    b = r;
  }
  return rdeg(a) == 0;
}

}  // namespace

EtaleAlg::EtaleAlg(std::vector<RatFn> modulus) : mod_(std::move(modulus)) {
  int d = rdeg(mod_);
  if (d < 1) fail(errc::precondition_violated, "etale modulus must be nonconstant");
  mod_.resize(static_cast<size_t>(d) + 1, RatFn(mod_.at(0).field()));
  const FqField& F = base_field();
  if (!(mod_.back() == RatFn::from_int(F, 1)))
    fail(errc::precondition_violated, "etale modulus must be monic");
  RPoly diff = rderiv(mod_, F);
  if (rdeg(diff) < 0 || !rcoprime(mod_, diff))
    fail(errc::precondition_violated, "etale modulus must be separable");
}

EtaleElem EtaleAlg::zero() const {
  EtaleElem e;
  e.A_ = this;
  e.c_.assign(static_cast<size_t>(degree()), RatFn(base_field()));
  return e;
}

EtaleElem EtaleAlg::one() const { return embed(RatFn::from_int(base_field(), 1)); }

EtaleElem EtaleAlg::embed(const RatFn& c) const {
  EtaleElem e = zero();
  e.c_[0] = c;
  return e;
}

EtaleElem EtaleAlg::gen() const {
  if (degree() < 2) fail(errc::precondition_violated, "degree-1 algebra has no generator");
  EtaleElem e = zero();
  e.c_[1] = RatFn::from_int(base_field(), 1);
  return e;
}

EtaleElem EtaleAlg::from_coeffs(std::vector<RatFn> lo) const {
  if (static_cast<int>(lo.size()) > degree())
    fail(errc::precondition_violated, "too many coordinates for the algebra");
  EtaleElem e = zero();
  for (size_t i = 0; i < lo.size(); ++i) e.c_[i] = lo[i];
  return e;
}

bool EtaleElem::is_zero() const {
  for (auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool EtaleElem::is_scalar() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

EtaleElem EtaleElem::operator+(const EtaleElem& o) const {
  if (A_ != o.A_) fail(errc::ring_mismatch, "etale elements of different algebras");
  EtaleElem r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

EtaleElem EtaleElem::operator-(const EtaleElem& o) const { return *this + (-o); }

EtaleElem EtaleElem::operator-() const {
  EtaleElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

EtaleElem EtaleElem::operator*(const EtaleElem& o) const {
  if (A_ != o.A_) fail(errc::ring_mismatch, "etale elements of different algebras");
  const FqField& F = A_->base_field();
  int d = A_->degree();
  std::vector<RatFn> prod(static_cast<size_t>(2 * d - 1), RatFn(F));
  for (int i = 0; i < d; ++i) {
    if (c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[static_cast<size_t>(j)].is_zero()) continue;
      prod[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
  }
  const auto& m = A_->modulus();
  for (int i = 2 * d - 2; i >= d; --i) {
    RatFn c = prod[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    prod[static_cast<size_t>(i)] = RatFn(F);
    for (int j = 0; j < d; ++j) prod[static_cast<size_t>(i - d + j)] -= c * m[static_cast<size_t>(j)];
  }
  EtaleElem r = A_->zero();
  for (int j = 0; j < d; ++j) r.c_[static_cast<size_t>(j)] = prod[static_cast<size_t>(j)];
  return r;
}

bool EtaleElem::operator==(const EtaleElem& o) const {
  if (A_ != o.A_) fail(errc::ring_mismatch, "etale elements of different algebras");
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

EtaleElem EtaleElem::frobenius(int e) const {
  EtaleElem r = *this;
  int p = A_->base_field().p();
  for (int s = 0; s < e; ++s) r = r.pow(p);
  return r;
}

EtaleElem EtaleElem::pow(long long e) const {
  EtaleElem r = A_->one(), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string EtaleElem::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (int i = A_->degree() - 1; i >= 0; --i) {
    const RatFn& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (any) os << " + ";
    any = true;
    os << "(" << c.to_string() << ")";
    if (i == 1) os << "*Z";
    if (i > 1) os << "*Z^" << i;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace wug
