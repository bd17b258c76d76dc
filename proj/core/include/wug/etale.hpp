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
 * @file etale.hpp
 * @brief Etale algebras k[Z]/(m) with m separable over k = F_q(T): the
 *        factorization-free stand-in for points over the separable closure.
 */

#ifndef WUG_ETALE_HPP
#define WUG_ETALE_HPP

#include <memory>
#include <vector>

#include "wug/ratfn.hpp"

namespace wug {

class EtaleElem;

class EtaleAlg {
 public:
  /// modulus low-to-high over k; must be monic of degree >= 1 and separable
  /// (gcd(m, m') = 1).
  explicit EtaleAlg(std::vector<RatFn> modulus);

  const FqField& base_field() const { return mod_.at(0).field(); }
  int degree() const { return static_cast<int>(mod_.size()) - 1; }
  const std::vector<RatFn>& modulus() const { return mod_; }

  EtaleElem zero() const;
  EtaleElem one() const;
  EtaleElem embed(const RatFn& c) const;
  EtaleElem gen() const;  // the class of Z
  EtaleElem from_coeffs(std::vector<RatFn> lo_to_hi) const;

 private:
  std::vector<RatFn> mod_;
};

class EtaleElem {
 public:
  EtaleElem() = default;

  const EtaleAlg& alg() const { return *A_; }
  bool is_zero() const;
  /// Coefficient of Z^i.
  const RatFn& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
  /// True iff all coordinates above degree 0 vanish.
  bool is_scalar() const;
  /// The degree-0 coordinate.
  const RatFn& scalar_part() const { return c_.at(0); }

  EtaleElem operator+(const EtaleElem& o) const;
  EtaleElem operator-(const EtaleElem& o) const;
  EtaleElem operator-() const;
  EtaleElem operator*(const EtaleElem& o) const;
  EtaleElem& operator+=(const EtaleElem& o) { return *this = *this + o; }
  EtaleElem& operator-=(const EtaleElem& o) { return *this = *this - o; }
  EtaleElem& operator*=(const EtaleElem& o) { return *this = *this * o; }
  bool operator==(const EtaleElem& o) const;
  bool operator!=(const EtaleElem& o) const { return !(*this == o); }
  /// x -> x^(p^e).
  EtaleElem frobenius(int e = 1) const;
  EtaleElem pow(long long e) const;

  std::string to_string() const;

 private:
  friend class EtaleAlg;
  const EtaleAlg* A_ = nullptr;
  std::vector<RatFn> c_;  // size = degree of the algebra
};

}  // namespace wug

#endif  // WUG_ETALE_HPP
