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
 * @file laurent.hpp
 * @brief Finite-precision model of the completion k_v: truncated Laurent
 *        series in the canonical uniformizer with k(v) coefficients.
 *
 * A value is sum_{i in [minv, prec)} c_i pi^i + O(pi^prec). Coefficients
 * beyond prec are unknown, not zero; arithmetic tracks precision
 * pessimistically. Frobenius powers gain precision (characteristic p).
 */

#ifndef WUG_LAURENT_HPP
#define WUG_LAURENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "wug/place.hpp"

namespace wug {

class LaurentLocal {
 public:
  LaurentLocal() = default;
  /// Zero to precision prec: O(pi^prec).
  static LaurentLocal unknown(const Place& v, int prec);
  static LaurentLocal zero(const Place& v, int prec) { return unknown(v, prec); }
  /// Single term c * pi^i, known through prec.
  static LaurentLocal monomial(const Place& v, const ResidueElem& c, int i, int prec);
  static LaurentLocal from_coeffs(const Place& v, int minv, std::vector<ResidueElem> c);

  const Place& place() const { return *v_; }
  const ResidueField& rfield() const { return ResidueField::at(*v_); }
  int minv() const { return minv_; }
  int prec() const { return prec_; }
  ResidueElem coeff(int i) const;  // zero outside [minv, prec); error for i >= prec

  /// Index of the first nonzero known coefficient; nullopt when all known
  /// coefficients vanish (the value is O(pi^prec)).
  std::optional<int> ord() const;
  bool known_zero() const { return !ord().has_value(); }

  LaurentLocal operator+(const LaurentLocal& o) const;
  LaurentLocal operator-(const LaurentLocal& o) const;
  LaurentLocal operator-() const;
  LaurentLocal operator*(const LaurentLocal& o) const;
  /// Multiplication by an exact rational function (expanded on demand).
  LaurentLocal mul_exact(const RatFn& x) const;
  /// x -> x^(p^e); exact in characteristic p, precision grows to p^e-scale.
  LaurentLocal frobenius(int e = 1) const;
  /// Multiplicative inverse; requires a known-nonzero leading coefficient.
  LaurentLocal inverse() const;

  LaurentLocal truncated(int new_prec) const;
  /// Restrict/extend the window start (coefficients below stay implicit zero).
  LaurentLocal with_minv(int new_minv) const;

  /// Exact rational lift sum c_i pi^i over the known window.
  RatFn lift() const;
  /// The part with indices <= cut (lifted exactly); used by the strong
  /// approximation step at infinity.
  RatFn lift_head(int cut) const;

  /// Agreement on the overlap of known windows.
  bool agrees_with(const LaurentLocal& o) const;

  std::string to_string() const;  // "v=<place>; u^<minv>*(c0 + c1*u + ...) + O(u^<prec>)"

 private:
  const Place* v_ = nullptr;  // interned place pointer (owned by intern table)
  int minv_ = 0, prec_ = 0;
  std::vector<ResidueElem> c_;  // size prec - minv
};

/// Interned copy of a place (stable address for LaurentLocal).
const Place& intern_place(const Place& v);

/// Laurent expansion of x at v, exact through index prec - 1.
LaurentLocal expand(const RatFn& x, const Place& v, int prec);

}  // namespace wug

#endif  // WUG_LAURENT_HPP
