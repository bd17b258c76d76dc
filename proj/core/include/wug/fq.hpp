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

/**
 * @file fq.hpp
 * @brief Exact arithmetic in F_p and F_q = F_p[x]/(modulus), q = p^m.
 *
 * The modulus is the lexicographically smallest monic irreducible polynomial
 * of degree m over F_p, so every serialized value is reproducible across runs.
 * Fields are interned: FqField::get(p, m) returns a stable reference and
 * FqElem carries a pointer to its owner.
 */

#ifndef WUG_FQ_HPP
#define WUG_FQ_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wug/errors.hpp"

namespace wug {

class FqField;

/// Maximum supported extension degree over F_p.
inline constexpr int kMaxFqDegree = 8;

class FqElem {
 public:
  FqElem() : F_(nullptr), c_{} {}

  const FqField& field() const { return *F_; }
  const FqField* field_ptr() const { return F_; }

  inline bool is_zero() const;
  inline bool is_one() const;

  inline FqElem operator+(const FqElem& o) const;
  inline FqElem operator-(const FqElem& o) const;
  inline FqElem operator-() const;
  inline FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }

  inline bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

  FqElem inverse() const;
  FqElem pow(long long e) const;
  /// x^(p^e), e >= 0.
  FqElem frobenius(int e = 1) const;
  /// Unique y with y^p = *this (F_q is perfect).
  FqElem pth_root() const;

  /// Coefficient of x^i over F_p, 0 <= i < m.
  int coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  /// Lexicographic index: sum coeff(i) * p^i; total order used for determinism.
  long long lex_index() const;

  /// Spec text form "c_{m-1},...,c_0" (base-p digits, high to low).
  std::string to_string() const;

 private:
  friend class FqField;
  const FqField* F_;
  std::array<uint8_t, kMaxFqDegree> c_;
};

class FqField {
 public:
  /// Interned field with the deterministic (lex-smallest) modulus.
  static const FqField& get(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  long long q() const { return q_; }
  /// Modulus coefficients, degree m monic, low-to-high (size m+1).
  const std::vector<uint8_t>& modulus() const { return mod_; }

  inline FqElem zero() const;
  FqElem one() const;
  /// row i: x^(m+i) reduced mod the modulus (m entries)
  const uint8_t* reduction_row(int i) const { return &red_[static_cast<size_t>(i) * static_cast<size_t>(m_)]; }
  /// Embedding of integers (lands in the prime field).
  FqElem from_int(long long v) const;
  /// Element from F_p coefficients, low-to-high; shorter vectors are padded.
  FqElem from_coeffs(const std::vector<int>& lo_to_hi) const;
  /// Class of x (requires m > 1).
  FqElem gen() const;
  /// Element with the given lex_index in [0, q).
  FqElem by_index(long long idx) const;

  /// "p^m:modulus-coeffs" descriptor, e.g. "3^2:1,0,1".
  std::string descriptor() const;

  /// Image of an element of a subfield F_{p^d} (d | m) under the canonical
  /// embedding (smallest root of the subfield modulus, in lex order).
  FqElem embed(const FqElem& sub) const;

  bool operator==(const FqField& o) const { return this == &o; }

 private:
  FqField(int p, int m);
  friend class FqElem;

  int p_, m_;
  long long q_;
  std::vector<uint8_t> mod_;           // monic, degree m
  std::vector<uint8_t> red_;           // reduction rows for x^m .. x^(2m-2), m of them, each m wide
  mutable std::vector<std::pair<const FqField*, FqElem>> embeddings_;  // cached subfield gens
};

// --- inline hot-path arithmetic -------------------------------------------

inline FqElem FqField::zero() const {
  FqElem e;
  e.F_ = this;
  e.c_.fill(0);
  return e;
}


inline bool FqElem::is_zero() const {
  for (int i = 0; i < F_->m(); ++i)
    if (c_[static_cast<size_t>(i)]) return false;
  return true;
}

inline bool FqElem::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < F_->m(); ++i)
    if (c_[static_cast<size_t>(i)]) return false;
  return true;
}

inline bool FqElem::operator==(const FqElem& o) const {
  if (F_ != o.F_) fail(errc::ring_mismatch, "comparing elements of different fields");
  for (int i = 0; i < F_->m(); ++i)
    if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) return false;
  return true;
}

inline FqElem FqElem::operator+(const FqElem& o) const {
  if (F_ != o.F_) fail(errc::ring_mismatch, "adding elements of different fields");
  FqElem r = *this;
  int p = F_->p();
  for (int i = 0; i < F_->m(); ++i) {
    int t = r.c_[static_cast<size_t>(i)] + o.c_[static_cast<size_t>(i)];
    if (t >= p) t -= p;
    r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(t);
  }
  return r;
}

inline FqElem FqElem::operator-() const {
  FqElem r = *this;
  int p = F_->p();
  for (int i = 0; i < F_->m(); ++i)
    r.c_[static_cast<size_t>(i)] =
        static_cast<uint8_t>(c_[static_cast<size_t>(i)] ? p - c_[static_cast<size_t>(i)] : 0);
  return r;
}

inline FqElem FqElem::operator-(const FqElem& o) const { return *this + (-o); }

inline FqElem FqElem::operator*(const FqElem& o) const {
  if (F_ != o.F_) fail(errc::ring_mismatch, "multiplying elements of different fields");
  int p = F_->p(), m = F_->m();
  // accumulate raw products (bounded by m^2 (p-1)^2 + m (p-1)^2 < 2^15 for
  // m <= 8, p <= 7; wider p still fits int) and reduce once
  int prod[2 * kMaxFqDegree - 1] = {0};
  for (int i = 0; i < m; ++i) {
    int ci = c_[static_cast<size_t>(i)];
    if (!ci) continue;
    for (int j = 0; j < m; ++j) prod[i + j] += ci * o.c_[static_cast<size_t>(j)];
  }
  int acc[kMaxFqDegree] = {0};
  for (int j = 0; j < m; ++j) acc[j] = prod[j];
  for (int i = 0; i < m - 1; ++i) {
    int hi = prod[m + i] % p;
    if (!hi) continue;
    const uint8_t* row = F_->reduction_row(i);
    for (int j = 0; j < m; ++j) acc[j] += hi * row[j];
  }
  FqElem r = F_->zero();
  for (int j = 0; j < m; ++j) r.c_[static_cast<size_t>(j)] = static_cast<uint8_t>(acc[j] % p);
  return r;
}

/// True iff x is a (p-1)st power in its field: x = 0 or x^((q-1)/(p-1)) = 1.
bool is_pminus1_power(const FqElem& x);

/// p = 2: zeta with zeta^2+zeta+1 = 0 when F_4 is a subfield; p > 2: an
/// element of F_{p^2} - F_p. Throws Error(not_present) when F_{p^2} is not
/// inside F_q (i.e. m odd).
FqElem find_zeta(const FqField& F);

}  // namespace wug

#endif  // WUG_FQ_HPP
