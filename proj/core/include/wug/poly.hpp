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

/// @file poly.hpp
/// Dense univariate polynomials over F_q (variable T). Zero polynomial has an
/// empty coefficient vector and degree -1.

#ifndef WUG_POLY_HPP
#define WUG_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "wug/fq.hpp"

namespace wug {

class Poly {
 public:
  Poly() : F_(nullptr) {}
  explicit Poly(const FqField& F) : F_(&F) {}
  Poly(const FqField& F, std::vector<FqElem> lo_to_hi) : F_(&F), c_(std::move(lo_to_hi)) { prune(); }
  static Poly constant(const FqElem& c);
  static Poly T(const FqField& F);                 // the variable
  static Poly from_ints(const FqField& F, const std::vector<long long>& lo_to_hi);

  const FqField& field() const { return *F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return degree() == 0 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const FqElem& leading() const;
  /// 0 outside [0, degree].
  FqElem coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F_->zero();
    return c_[static_cast<size_t>(i)];
  }
  void set_coeff(int i, const FqElem& v);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FqElem& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Multiply by T^k (k >= 0).
  Poly shift(int k) const;
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly monic() const;

  /// Formal derivative d/dT.
  Poly derivative() const;
  /// x -> x^(p^e) on coefficients and exponents: returns this(T)^(p^e).
  Poly frobenius(int e = 1) const;
  Poly pow(long long e) const;

  FqElem eval(const FqElem& x) const;
  /// Evaluate with coefficients mapped through `lift` into any ring E.
  template <class E, class Lift>
  E eval_in(const E& x, Lift lift) const {
    E acc = lift(F_->zero());
    for (int i = degree(); i >= 0; --i) acc = acc * x + lift(coeff(i));
    return acc;
  }

  /// Multiplicity of divisor d (deg >= 1) in *this (0 if not divisible).
  int multiplicity(const Poly& d) const;

  /// deterministic total order (degree, then lex on coefficients high-to-low)
  static int cmp(const Poly& a, const Poly& b);

  std::string to_string() const;  // "T^2+2*T+z"-style, canonical

 private:
  void prune();
  const FqField* F_;
  std::vector<FqElem> c_;
};

Poly gcd(const Poly& a, const Poly& b);
/// g = gcd(a,b) together with u,v such that u*a + v*b = g (g monic).
struct XGcd {
  Poly g, u, v;
};
XGcd xgcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, long long e, const Poly& mod);

}  // namespace wug

#endif  // WUG_POLY_HPP
