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

#include "wug/fq.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace wug {
namespace {

// --- helpers on raw F_p polynomial vectors (low-to-high, no invariants) ---

int vdeg(const std::vector<uint8_t>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

std::vector<uint8_t> vmulmod(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b,
                             const std::vector<uint8_t>& mod, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  // reduce by monic mod
  int dm = vdeg(mod);
  for (int i = static_cast<int>(prod.size()) - 1; i >= dm; --i) {
    int c = prod[static_cast<size_t>(i)];
    if (!c) continue;
    prod[static_cast<size_t>(i)] = 0;
    for (int j = 0; j < dm; ++j) {
      auto& t = prod[static_cast<size_t>(i - dm + j)];
      t = (t - c * mod[static_cast<size_t>(j)]) % p;
      if (t < 0) t += p;
    }
  }
  std::vector<uint8_t> out(static_cast<size_t>(dm), 0);
  for (int j = 0; j < dm && j < static_cast<int>(prod.size()); ++j)
    out[static_cast<size_t>(j)] = static_cast<uint8_t>(prod[static_cast<size_t>(j)]);
  return out;
}

std::vector<uint8_t> vpowmod(std::vector<uint8_t> base, long long e, const std::vector<uint8_t>& mod,
                             int p) {
  int dm = vdeg(mod);
  std::vector<uint8_t> r(static_cast<size_t>(dm), 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = vmulmod(r, base, mod, p);
    base = vmulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

std::vector<uint8_t> vgcd(std::vector<uint8_t> a, std::vector<uint8_t> b, int p) {
  auto inv_fp = [p](int v) {
    int r = 1, b2 = v % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b2 % p;
      b2 = b2 * b2 % p;
      e >>= 1;
    }
    return r;
  };
  while (vdeg(b) >= 0) {
    // a mod b
    int db = vdeg(b);
    int lcinv = inv_fp(b[static_cast<size_t>(db)]);
    while (vdeg(a) >= db) {
      int da = vdeg(a);
      int c = a[static_cast<size_t>(da)] * lcinv % p;
      for (int j = 0; j <= db; ++j) {
        auto& t = a[static_cast<size_t>(da - db + j)];
        int nt = (t - c * b[static_cast<size_t>(j)]) % p;
        a[static_cast<size_t>(da - db + j)] = static_cast<uint8_t>(nt < 0 ? nt + p : nt);
      }
    }
    std::swap(a, b);
  }
  return a;
}

// Irreducibility over F_p: x^(p^m) == x mod f, and gcd(x^(p^(m/r)) - x, f) = 1
// for every prime r | m.
bool irreducible(const std::vector<uint8_t>& f, int p) {
  int m = vdeg(f);
  if (m <= 0) return false;
  std::vector<uint8_t> x(static_cast<size_t>(m), 0);
  if (m == 1) return true;
  x[1] = 1;
  long long pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  auto xq = vpowmod(x, pm, f, p);
  // x^(p^m) - x must be 0 mod f
  {
    auto d = xq;
    d.resize(std::max(d.size(), x.size()), 0);
    d[1] = static_cast<uint8_t>(((d[1] - 1) % p + p) % p);
    if (vdeg(d) >= 0) return false;
  }
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    bool isprime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) isprime = false;
    if (!isprime) continue;
    long long e = 1;
    for (int i = 0; i < m / r; ++i) e *= p;
    auto xe = vpowmod(x, e, f, p);
    auto d = xe;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = static_cast<uint8_t>(((d[1] - 1) % p + p) % p);
    if (vdeg(d) < 0) return false;  // x^(p^(m/r)) == x: f splits
    if (vdeg(vgcd(d, f, p)) != 0) return false;
  }
  return true;
}

std::vector<uint8_t> smallest_irreducible(int p, int m) {
  // Lexicographic order on (c_0, c_1, ..., c_{m-1}); modulus is monic.
  std::vector<uint8_t> f(static_cast<size_t>(m) + 1, 0);
  f[static_cast<size_t>(m)] = 1;
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  for (long long idx = 0; idx < total; ++idx) {
    long long t = idx;
    for (int i = 0; i < m; ++i) {
      f[static_cast<size_t>(i)] = static_cast<uint8_t>(t % p);
      t /= p;
    }
    if (irreducible(f, p)) return f;
  }
  fail(errc::internal, "no irreducible polynomial found");
}

}  // namespace

// ---------------------------------------------------------------------------
// FqField
// ---------------------------------------------------------------------------

FqField::FqField(int p, int m) : p_(p), m_(m) {
  if (p < 2 || m < 1 || m > kMaxFqDegree) fail(errc::precondition_violated, "bad field parameters");
  for (int s = 2; s * s <= p; ++s)
    if (p % s == 0) fail(errc::precondition_violated, "p not prime");
  q_ = 1;
  for (int i = 0; i < m; ++i) q_ *= p;
  mod_ = smallest_irreducible(p, m);
  // reduction rows: x^(m+i) mod modulus for i in [0, m-1)
  red_.assign(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
  std::vector<uint8_t> cur(static_cast<size_t>(m), 0);
  // row 0: x^m = -(mod_0 + mod_1 x + ...)
  for (int j = 0; j < m; ++j) cur[static_cast<size_t>(j)] = static_cast<uint8_t>((p - mod_[static_cast<size_t>(j)]) % p);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) red_[static_cast<size_t>(i) * m_ + j] = cur[static_cast<size_t>(j)];
    // multiply cur by x mod modulus
    int hi = cur[static_cast<size_t>(m - 1)];
    for (int j = m - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
    cur[0] = 0;
    if (hi) {
      for (int j = 0; j < m; ++j) {
        int t = (cur[static_cast<size_t>(j)] + hi * (p - mod_[static_cast<size_t>(j)])) % p;
        cur[static_cast<size_t>(j)] = static_cast<uint8_t>(t);
      }
    }
  }
}

const FqField& FqField::get(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FqField>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<FqField>(new FqField(p, m))).first;
  return *it->second;
}

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::from_int(long long v) const {
  FqElem e = zero();
  long long r = v % p_;
  if (r < 0) r += p_;
  e.c_[0] = static_cast<uint8_t>(r);
  return e;
}

FqElem FqField::from_coeffs(const std::vector<int>& lo) const {
  if (static_cast<int>(lo.size()) > m_) fail(errc::precondition_violated, "too many coefficients");
  FqElem e = zero();
  for (size_t i = 0; i < lo.size(); ++i) {
    int r = lo[i] % p_;
    if (r < 0) r += p_;
    e.c_[i] = static_cast<uint8_t>(r);
  }
  return e;
}

FqElem FqField::gen() const {
  if (m_ < 2) fail(errc::precondition_violated, "prime field has no generator element x");
  FqElem e = zero();
  e.c_[1] = 1;
  return e;
}

FqElem FqField::by_index(long long idx) const {
  FqElem e = zero();
  for (int i = 0; i < m_; ++i) {
    e.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

std::string FqField::descriptor() const {
  std::ostringstream os;
  os << p_ << "^" << m_ << ":";
  for (int i = m_; i >= 0; --i) {
    os << static_cast<int>(mod_[static_cast<size_t>(i)]);
    if (i) os << ",";
  }
  return os.str();
}

FqElem FqField::embed(const FqElem& sub) const {
  const FqField* S = sub.field_ptr();
  if (S == this) return sub;
  if (S->p() != p_ || m_ % S->m() != 0)
    fail(errc::precondition_violated, "no canonical embedding between these fields");
  // find cached root of S's modulus in this field
  const FqElem* root = nullptr;
  for (auto& kv : embeddings_)
    if (kv.first == S) root = &kv.second;
  if (!root) {
    // smallest (lex) element r with sub-modulus(r) = 0
    for (long long idx = 0; idx < q_; ++idx) {
      FqElem r = by_index(idx);
      FqElem acc = zero();
      for (int i = S->m(); i >= 0; --i) acc = acc * r + from_int(S->modulus()[static_cast<size_t>(i)]);
      if (acc.is_zero()) {
        embeddings_.emplace_back(S, r);
        root = &embeddings_.back().second;
        break;
      }
    }
    if (!root) fail(errc::internal, "embedding root not found");
  }
  FqElem acc = zero();
  for (int i = S->m() - 1; i >= 0; --i) acc = acc * (*root) + from_int(sub.coeff(i));
  return acc;
}

// ---------------------------------------------------------------------------
// FqElem
// ---------------------------------------------------------------------------

FqElem FqElem::inverse() const {
  if (is_zero()) fail(errc::zero_input, "inverse of zero");
  return pow(F_->q() - 2);
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inverse(); }

FqElem FqElem::pow(long long e) const {
  long long qm1 = F_->q() - 1;
  if (is_zero()) {
    if (e == 0) return F_->one();
    if (e < 0) fail(errc::zero_input, "negative power of zero");
    return F_->zero();
  }
  e %= qm1;
  if (e < 0) e += qm1;
  FqElem r = F_->one(), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FqElem FqElem::frobenius(int e) const {
  FqElem r = *this;
  for (int i = 0; i < e; ++i) r = r.pow(F_->p());
  return r;
}

FqElem FqElem::pth_root() const {
  // Frobenius is bijective: x^(p^(m-1)) is the inverse of x -> x^p.
  FqElem r = *this;
  for (int i = 0; i < F_->m() - 1; ++i) r = r.pow(F_->p());
  return r;
}

long long FqElem::lex_index() const {
  long long idx = 0;
  for (int i = F_->m() - 1; i >= 0; --i) idx = idx * F_->p() + c_[static_cast<size_t>(i)];
  return idx;
}

std::string FqElem::to_string() const {
  std::ostringstream os;
  for (int i = F_->m() - 1; i >= 0; --i) {
    os << static_cast<int>(c_[static_cast<size_t>(i)]);
    if (i) os << ",";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

bool is_pminus1_power(const FqElem& x) {
  if (x.is_zero()) return true;
  long long q = x.field().q();
  int p = x.field().p();
  return x.pow((q - 1) / (p - 1)).is_one();
}

FqElem find_zeta(const FqField& F) {
  if (F.m() % 2 != 0)
    fail(errc::not_present, "F_{p^2} is not a subfield of " + F.descriptor());
  // Deterministic: scan in lex order, return the first element of F_{p^2}-F_p.
  for (long long idx = 0; idx < F.q(); ++idx) {
    FqElem z = F.by_index(idx);
    if (z.frobenius(2) == z && z.frobenius(1) != z) {
      if (F.p() == 2) {
        // primitive cube root of unity: z^2 + z + 1 = 0
        if (!(z * z + z + F.one()).is_zero()) continue;
      }
      return z;
    }
  }
  fail(errc::not_present, "no element of F_{p^2} - F_p found");
}

}  // namespace wug
