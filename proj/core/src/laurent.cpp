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

#include "wug/laurent.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace wug {

const Place& intern_place(const Place& v) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<Place>> cache;
  std::lock_guard<std::mutex> lk(mu);
  for (auto& p : cache)
    if (*p == v) return *p;
  cache.push_back(std::make_unique<Place>(v));
  return *cache.back();
}

LaurentLocal LaurentLocal::unknown(const Place& v, int prec) {
  LaurentLocal x;
  x.v_ = &intern_place(v);
  x.minv_ = prec;
  x.prec_ = prec;
  return x;
}

LaurentLocal LaurentLocal::monomial(const Place& v, const ResidueElem& c, int i, int prec) {
  if (i >= prec) fail(errc::precondition_violated, "monomial index beyond precision");
  LaurentLocal x;
  x.v_ = &intern_place(v);
  x.minv_ = i;
  x.prec_ = prec;
  x.c_.assign(static_cast<size_t>(prec - i), ResidueField::at(v).zero());
  x.c_[0] = c;
  return x;
}

LaurentLocal LaurentLocal::from_coeffs(const Place& v, int minv, std::vector<ResidueElem> c) {
  LaurentLocal x;
  x.v_ = &intern_place(v);
  x.minv_ = minv;
  x.prec_ = minv + static_cast<int>(c.size());
  x.c_ = std::move(c);
  return x;
}

ResidueElem LaurentLocal::coeff(int i) const {
  if (i >= prec_) fail(errc::insufficient_precision, "coefficient beyond known precision");
  if (i < minv_) return rfield().zero();
  return c_[static_cast<size_t>(i - minv_)];
}

std::optional<int> LaurentLocal::ord() const {
  for (int i = minv_; i < prec_; ++i)
    if (!c_[static_cast<size_t>(i - minv_)].is_zero()) return i;
  return std::nullopt;
}

LaurentLocal LaurentLocal::operator+(const LaurentLocal& o) const {
  if (v_ != o.v_) fail(errc::ring_mismatch, "Laurent values at different places");
  LaurentLocal r;
  r.v_ = v_;
  r.prec_ = std::min(prec_, o.prec_);
  r.minv_ = std::min(std::min(minv_, o.minv_), r.prec_);
  r.c_.assign(static_cast<size_t>(r.prec_ - r.minv_), rfield().zero());
  for (int i = r.minv_; i < r.prec_; ++i) r.c_[static_cast<size_t>(i - r.minv_)] = coeff(i) + o.coeff(i);
  return r;
}

LaurentLocal LaurentLocal::operator-(const LaurentLocal& o) const { return *this + (-o); }

LaurentLocal LaurentLocal::operator-() const {
  LaurentLocal r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentLocal LaurentLocal::operator*(const LaurentLocal& o) const {
  if (v_ != o.v_) fail(errc::ring_mismatch, "Laurent values at different places");
  LaurentLocal r;
  r.v_ = v_;
  // unknown tails enter at prec + other.minv
  r.prec_ = std::min(prec_ + o.minv_, o.prec_ + minv_);
  r.minv_ = std::min(minv_ + o.minv_, r.prec_);
  const ResidueField& R = rfield();
  if (v_->degree() == 1) {
    // digit lifts are constants: no carries
    r.c_.assign(static_cast<size_t>(r.prec_ - r.minv_), R.zero());
    for (int i = minv_; i < prec_; ++i) {
      const ResidueElem& a = c_[static_cast<size_t>(i - minv_)];
      if (a.is_zero()) continue;
      for (int j = o.minv_; j < o.prec_ && i + j < r.prec_; ++j) {
        const ResidueElem& b = o.c_[static_cast<size_t>(j - o.minv_)];
        if (b.is_zero()) continue;
        r.c_[static_cast<size_t>(i + j - r.minv_)] += a * b;
      }
    }
    return r;
  }
  // degree >= 2: convolve the polynomial lifts, then renormalize with carries
  const FqField& F = v_->field();
  std::vector<Poly> acc(static_cast<size_t>(r.prec_ - r.minv_), Poly(F));
  for (int i = minv_; i < prec_; ++i) {
    const ResidueElem& a = c_[static_cast<size_t>(i - minv_)];
    if (a.is_zero()) continue;
    Poly la = R.lift(a);
    for (int j = o.minv_; j < o.prec_ && i + j < r.prec_; ++j) {
      const ResidueElem& b = o.c_[static_cast<size_t>(j - o.minv_)];
      if (b.is_zero()) continue;
      acc[static_cast<size_t>(i + j - r.minv_)] += la * R.lift(b);
    }
  }
  r.c_.assign(static_cast<size_t>(r.prec_ - r.minv_), R.zero());
  Poly carry(F);
  const Poly& pi = v_->pi();
  for (size_t k = 0; k < acc.size(); ++k) {
    Poly cur = acc[k] + carry;
    auto [q, rem] = cur.divmod(pi);
    r.c_[k] = R.from_poly(rem);
    carry = q;
  }
  return r;
}

LaurentLocal LaurentLocal::mul_exact(const RatFn& x) const {
  if (x.is_zero()) return unknown(*v_, 1 << 28);  // exact zero
  int ox = wug::ord(x, *v_);
  // expand x far enough that its truncation does not limit the product
  LaurentLocal ex = expand(x, *v_, prec_ - minv_ + ox + 1);
  LaurentLocal r = *this * ex;
  // exactness of x means the only precision limit is prec_ + ord(x)
  r.prec_ = std::min(r.prec_, prec_ + ox);
  if (r.prec_ < r.minv_) r.minv_ = r.prec_;
  r.c_.resize(static_cast<size_t>(r.prec_ - r.minv_), rfield().zero());
  return r;
}

LaurentLocal LaurentLocal::frobenius(int e) const {
  long long pe = 1;
  for (int i = 0; i < e; ++i) pe *= rfield().p();
  LaurentLocal r;
  r.v_ = v_;
  // (x + O(pi^prec))^(p^e) = x^(p^e) + O(pi^(prec * p^e))
  // precisions at or beyond the cap mean "effectively exact"
  constexpr long long kCap = 1 << 27;
  long long prec_ll = std::min(static_cast<long long>(prec_) * pe, kCap);
  long long minv_ll = std::min(static_cast<long long>(minv_) * pe, prec_ll);
  if (minv_ll < -kCap) fail(errc::internal, "frobenius window overflow");
  r.prec_ = static_cast<int>(prec_ll);
  r.minv_ = static_cast<int>(minv_ll);
  if (minv_ == prec_) {  // pure unknown
    r.minv_ = r.prec_;
    return r;
  }
  const ResidueField& R = rfield();
  r.c_.assign(static_cast<size_t>(r.prec_ - r.minv_), R.zero());
  if (v_->degree() == 1) {
    for (int i = minv_; i < prec_; ++i) {
      const ResidueElem& a = c_[static_cast<size_t>(i - minv_)];
      if (a.is_zero()) continue;
      r.c_[static_cast<size_t>(static_cast<long long>(i) * pe - r.minv_)] = a.frobenius(e);
    }
    return r;
  }
  // degree >= 2: lift(a)^(p^e) spreads beyond one digit; renormalize
  const FqField& F = v_->field();
  const Poly& pi = v_->pi();
  std::vector<Poly> acc(static_cast<size_t>(r.prec_ - r.minv_), Poly(F));
  for (int i = minv_; i < prec_; ++i) {
    const ResidueElem& a = c_[static_cast<size_t>(i - minv_)];
    if (a.is_zero()) continue;
    acc[static_cast<size_t>(static_cast<long long>(i) * pe - r.minv_)] += R.lift(a).frobenius(e);
  }
  Poly carry(F);
  for (size_t k = 0; k < acc.size(); ++k) {
    Poly cur = acc[k] + carry;
    auto [q, rem] = cur.divmod(pi);
    r.c_[k] = R.from_poly(rem);
    carry = q;
  }
  return r;
}

LaurentLocal LaurentLocal::inverse() const {
  auto o = ord();
  if (!o) fail(errc::insufficient_precision, "inverse of a value with no known nonzero coefficient");
  int n = *o;
  int len = prec_ - n;  // relative precision
  const ResidueField& R = rfield();
  if (v_->degree() == 1) {
    // digit lifts are constants: plain power-series inversion
    std::vector<ResidueElem> a(static_cast<size_t>(len), R.zero());
    for (int i = 0; i < len; ++i) a[static_cast<size_t>(i)] = coeff(n + i);
    std::vector<ResidueElem> b(static_cast<size_t>(len), R.zero());
    b[0] = a[0].inverse();
    for (int i = 1; i < len; ++i) {
      ResidueElem s = R.zero();
      for (int j = 0; j < i; ++j) s += b[static_cast<size_t>(j)] * a[static_cast<size_t>(i - j)];
      b[static_cast<size_t>(i)] = -(s * b[0]);
    }
    LaurentLocal r;
    r.v_ = v_;
    r.minv_ = -n;
    r.prec_ = -n + len;
    r.c_ = std::move(b);
    return r;
  }
  // degree >= 2: Newton iteration b <- b + b (1 - x b) with carry-aware
  // multiplication; precision doubles per step
  LaurentLocal x = with_minv(n);  // window starts at the unit part
  LaurentLocal one = LaurentLocal::monomial(*v_, R.one(), 0, len);
  LaurentLocal b = LaurentLocal::monomial(*v_, coeff(n).inverse(), -n, 1 - n);
  for (int reached = 1; reached < len; reached *= 2) {
    LaurentLocal resid = one - (x * b).truncated(std::min(2 * reached, len));
    b = (b + b * resid);
    if (b.prec() > std::min(2 * reached, len) - n) b = b.truncated(std::min(2 * reached, len) - n);
  }
  LaurentLocal check = (x * b);
  if (check.prec() > len) check = check.truncated(len);
  if (!(check - one.truncated(check.prec())).known_zero())
    fail(errc::internal, "series inversion failed to converge");
  return b;
}

LaurentLocal LaurentLocal::truncated(int new_prec) const {
  if (new_prec > prec_) fail(errc::insufficient_precision, "cannot extend precision by truncation");
  LaurentLocal r = *this;
  r.prec_ = new_prec;
  r.minv_ = std::min(minv_, new_prec);
  r.c_.resize(static_cast<size_t>(r.prec_ - r.minv_), rfield().zero());
  return r;
}

LaurentLocal LaurentLocal::with_minv(int new_minv) const {
  LaurentLocal r;
  r.v_ = v_;
  r.minv_ = std::min(new_minv, prec_);
  r.prec_ = prec_;
  r.c_.assign(static_cast<size_t>(r.prec_ - r.minv_), rfield().zero());
  for (int i = r.minv_; i < r.prec_; ++i) {
    ResidueElem v = coeff(i);
    if (i < minv_ || v.is_zero()) continue;
    r.c_[static_cast<size_t>(i - r.minv_)] = v;
  }
  // verify nothing nonzero was dropped
  for (int i = minv_; i < std::min(prec_, r.minv_); ++i)
    if (!coeff(i).is_zero()) fail(errc::precondition_violated, "with_minv would drop nonzero terms");
  return r;
}

RatFn LaurentLocal::lift() const { return lift_head(prec_ - 1); }

RatFn LaurentLocal::lift_head(int cut) const {
  const FqField& F = v_->field();
  RatFn acc(F);
  RatFn pi = v_->is_infinity() ? RatFn::T(F).inverse() : RatFn(Poly(v_->pi()));
  const ResidueField& R = rfield();
  for (int i = minv_; i < prec_ && i <= cut; ++i) {
    ResidueElem ci = coeff(i);
    if (ci.is_zero()) continue;
    acc += RatFn(R.lift(ci)) * pi.pow(i);
  }
  return acc;
}

bool LaurentLocal::agrees_with(const LaurentLocal& o) const {
  if (v_ != o.v_) return false;
  int hi = std::min(prec_, o.prec_);
  for (int i = std::min(minv_, o.minv_); i < hi; ++i)
    if (coeff(i) != o.coeff(i)) return false;
  return true;
}

std::string LaurentLocal::to_string() const {
  std::ostringstream os;
  os << "v=" << v_->to_string() << "; ";
  if (minv_ == prec_) {
    os << "O(u^" << prec_ << ")";
    return os.str();
  }
  os << "u^" << minv_ << "*(";
  bool any = false;
  for (int i = minv_; i < prec_; ++i) {
    ResidueElem ci = coeff(i);
    if (ci.is_zero()) continue;
    if (any) os << " + ";
    os << "(" << ci.to_string() << ")";
    if (i > minv_) os << "*u^" << (i - minv_);
    any = true;
  }
  if (!any) os << "0";
  os << ") + O(u^" << prec_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

LaurentLocal expand(const RatFn& x, const Place& v, int prec) {
  const Place& vi = intern_place(v);
  const ResidueField& R = ResidueField::at(vi);
  if (x.is_zero()) return LaurentLocal::unknown(vi, prec);
  int o = ord(x, vi);
  if (prec <= o) return LaurentLocal::unknown(vi, prec);
  int len = prec - o;

  std::vector<ResidueElem> digits;
  digits.reserve(static_cast<size_t>(len));

  if (vi.is_infinity()) {
    // substitute T = 1/u: x = u^o * (n*(u) / d*(u)) with unit constant terms
    const FqField& F = x.field();
    int dn = x.num().degree(), dd = x.den().degree();
    // n*(u) = u^dn * num(1/u) has coefficients reversed
    std::vector<FqElem> nstar(static_cast<size_t>(len), F.zero());
    std::vector<FqElem> dstar(static_cast<size_t>(len), F.zero());
    for (int i = 0; i <= dn && i < len; ++i) nstar[static_cast<size_t>(i)] = x.num().coeff(dn - i);
    for (int i = 0; i <= dd && i < len; ++i) dstar[static_cast<size_t>(i)] = x.den().coeff(dd - i);
    // power series division nstar / dstar to len terms
    std::vector<FqElem> q(static_cast<size_t>(len), F.zero());
    FqElem lc = dstar[0].inverse();
    for (int i = 0; i < len; ++i) {
      FqElem s = nstar[static_cast<size_t>(i)];
      for (int j = 1; j <= i; ++j) s -= dstar[static_cast<size_t>(j)] * q[static_cast<size_t>(i - j)];
      q[static_cast<size_t>(i)] = s * lc;
    }
    for (int i = 0; i < len; ++i) digits.push_back(R.from_base(q[static_cast<size_t>(i)]));
  } else {
    const Poly& pi = vi.pi();
    // strip pi-power, compute n/d mod pi^len by digit extraction
    Poly n = x.num(), d = x.den();
    while (true) {
      auto [qq, r] = n.divmod(pi);
      if (!r.is_zero()) break;
      n = qq;
    }
    while (true) {
      auto [qq, r] = d.divmod(pi);
      if (!r.is_zero()) break;
      d = qq;
    }
    // r := n * d^{-1} digit by digit: maintain remainder polynomial
    // invariant: value = (num_cur / d) with digits emitted so far subtracted
    Poly cur = n;
    ResidueElem dinv = R.from_poly(d).inverse();
    for (int i = 0; i < len; ++i) {
      ResidueElem digit = R.from_poly(cur) * dinv;
      digits.push_back(digit);
      Poly sub = cur - R.lift(digit) * d;
      auto [qq, r] = sub.divmod(pi);
      if (!r.is_zero()) fail(errc::internal, "digit extraction misaligned");
      cur = qq;
    }
  }
  return LaurentLocal::from_coeffs(vi, o, std::move(digits));
}

}  // namespace wug
