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
 * @file place.hpp
 * @brief Places of F_q(T) (monic irreducibles and infinity), valuations,
 *        residue fields, divisors, and orders of differentials.
 *
 * Canonical uniformizers: the monic irreducible pi itself at a finite place,
 * and 1/T at infinity.
 */

#ifndef WUG_PLACE_HPP
#define WUG_PLACE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wug/factor.hpp"
#include "wug/ratfn.hpp"

namespace wug {

class Place {
 public:
  /// Finite place defined by a monic irreducible (validated).
  static Place finite(const Poly& pi);
  static Place infinity(const FqField& F);

  bool is_infinity() const { return infinite_; }
  const Poly& pi() const;  // finite places only
  int degree() const { return deg_; }
  const FqField& field() const { return *F_; }

  bool operator==(const Place& o) const;
  bool operator!=(const Place& o) const { return !(*this == o); }
  /// Total order: infinity first, then by (degree, lex).
  static int cmp(const Place& a, const Place& b);
  bool operator<(const Place& o) const { return cmp(*this, o) < 0; }

  std::string to_string() const;  // "inf" or the monic polynomial

 private:
  Place() = default;
  const FqField* F_ = nullptr;
  bool infinite_ = false;
  Poly pi_;
  int deg_ = 1;
};

/// Divisor: finite formal sum of places with integer coefficients.
class Divisor {
 public:
  void add(const Place& v, int n);
  int coeff(const Place& v) const;
  const std::vector<std::pair<Place, int>>& terms() const { return t_; }
  int degree() const;

 private:
  std::vector<std::pair<Place, int>> t_;  // sorted by Place::cmp, nonzero coeffs
};

/// ord_v(x); ZeroInput for x = 0. Product formula: sum deg(v) ord_v(x) = 0.
int ord(const RatFn& x, const Place& v);

// ---------------------------------------------------------------------------
// Residue fields k(v) = F_q[T]/(pi) (finite v) or F_q (infinity), represented
// as polynomials of degree < deg(v) over F_q.
// ---------------------------------------------------------------------------

class ResidueField;

class ResidueElem {
 public:
  ResidueElem() = default;
  const ResidueField& rfield() const { return *R_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_.is_one(); }
  ResidueElem operator+(const ResidueElem& o) const;
  ResidueElem operator-(const ResidueElem& o) const;
  ResidueElem operator-() const;
  ResidueElem operator*(const ResidueElem& o) const;
  ResidueElem& operator+=(const ResidueElem& o) { return *this = *this + o; }
  ResidueElem& operator-=(const ResidueElem& o) { return *this = *this - o; }
  ResidueElem& operator*=(const ResidueElem& o) { return *this = *this * o; }
  bool operator==(const ResidueElem& o) const { return rep_ == o.rep_; }
  bool operator!=(const ResidueElem& o) const { return !(*this == o); }
  ResidueElem inverse() const;
  ResidueElem pow(long long e) const;
  ResidueElem frobenius(int e = 1) const;  // x -> x^(p^e)
  ResidueElem pth_root() const;

  /// Representative polynomial (degree < deg v).
  const Poly& rep() const { return rep_; }
  long long lex_index() const;
  std::string to_string() const { return rep_.to_string(); }

 private:
  friend class ResidueField;
  const ResidueField* R_ = nullptr;
  Poly rep_;
};

class ResidueField {
 public:
  /// Interned per place.
  static const ResidueField& at(const Place& v);

  const Place& place() const { return v_; }
  const FqField& base() const { return v_.field(); }
  int degree() const { return v_.degree(); }
  long long order() const { return order_; }  // q^deg
  int p() const { return base().p(); }

  ResidueElem zero() const { return make(Poly(base())); }
  ResidueElem one() const { return make(Poly::constant(base().one())); }
  ResidueElem from_base(const FqElem& c) const { return make(Poly::constant(c)); }
  ResidueElem from_poly(const Poly& f) const;  // reduce mod pi (finite places)
  ResidueElem by_index(long long idx) const;
  /// Canonical lift to F_q[T] (the representative itself).
  Poly lift(const ResidueElem& x) const { return x.rep_; }

 private:
  explicit ResidueField(const Place& v);
  ResidueElem make(Poly rep) const;
  friend class ResidueElem;
  Place v_;
  long long order_;
};

/// Image of x in k(v); requires ord_v(x) >= 0 (PoleAtPlace otherwise).
ResidueElem residue(const RatFn& x, const Place& v);

/// True iff x = 0 or x^((Q-1)/(p-1)) = 1 in k(v), Q = q^deg(v).
bool is_pminus1_power(const ResidueElem& x);

// ---------------------------------------------------------------------------
// Differentials
// ---------------------------------------------------------------------------

/// ord_v(db) for the differential db = b' dT: ord_v(b') at finite places
/// (d pi / dT is a v-unit), ord_inf(b') - 2 at infinity.
/// Throws ExactDifferentialZero when b is a p-th power.
int ord_differential(const RatFn& b, const Place& v);

/// Residue in k(v) of pi^(1 - m(p-1)) / m * (db/dpi) for the canonical
/// uniformizer. Precondition: ord_v(db) + 1 = m(p-1) and gcd(m, p) = 1.
ResidueElem diff_ratio(const RatFn& b, const Place& v, int m);

/// Finite and infinite places where ord_v(x) != 0 (uses factorization).
Divisor support(const RatFn& x);

}  // namespace wug

#endif  // WUG_PLACE_HPP
