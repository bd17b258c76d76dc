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

/// @file ratfn.hpp
/// Elements of k = F_q(T), kept normalized: gcd(num, den) = 1, den monic.

#ifndef WUG_RATFN_HPP
#define WUG_RATFN_HPP

#include <optional>
#include <string>

#include "wug/poly.hpp"

namespace wug {

class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(const FqField& F) : num_(F), den_(Poly::constant(F.one())) {}
  RatFn(Poly num, Poly den);
  /// Polynomial as a rational function.
  explicit RatFn(const Poly& num) : num_(num), den_(Poly::constant(num.field().one())) {}

  static RatFn from_int(const FqField& F, long long v) { return RatFn(Poly::constant(F.from_int(v))); }
  static RatFn T(const FqField& F) { return RatFn(Poly::T(F)); }

  const FqField& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator-() const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  RatFn inverse() const;
  RatFn pow(long long e) const;
  /// x -> x^(p^e).
  RatFn frobenius(int e = 1) const;
  /// Quotient-rule formal derivative d/dT.
  RatFn derivative() const;

  /// Polynomial part (floor of num/den); *this minus it is a proper fraction.
  Poly polynomial_part() const;

  FqElem eval(const FqElem& x) const;  // PoleAtPlace if den vanishes
  std::string to_string() const;

  static int cmp(const RatFn& a, const RatFn& b);

 private:
  void normalize();
  Poly num_, den_;
};

/// y with y^p = x if x is a p-th power in F_q(T), else nullopt.
std::optional<RatFn> is_pth_power(const RatFn& x);
/// Iterated: y with y^(p^e) = x.
std::optional<RatFn> is_pe_power(const RatFn& x, int e);

}  // namespace wug

#endif  // WUG_RATFN_HPP
