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
 * @file local_image.hpp
 * @brief Additive polynomial maps on completions k_v, Newton solving on the
 *        unit ball, and the decision procedure for membership in g(k_v^r).
 *
 * Membership is decided on a finite window [B_low, B_high) of Laurent tail
 * indices. Inputs whose monomial images could reach below the window are
 * excluded, which keeps the modeled span inside the true image; the unit
 * ball ord >= 1 lies in the image by Newton iteration and absorbs everything
 * above the window. A valuation-normal form (Frobenius-leading coefficient
 * classes distinct mod p^E) makes the converse input bound provable, so
 * non-membership verdicts carry an exact F_p-linear certificate. When the
 * normal form cannot be reached within the precision budget the verdict is
 * inconclusive, never a guess.
 */

#ifndef WUG_LOCAL_IMAGE_HPP
#define WUG_LOCAL_IMAGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "wug/laurent.hpp"

namespace wug {

/// coeff * X_slot^(p^e)
struct AdditiveMonomial {
  int slot;
  int e;
  RatFn coeff;
};

/// F_p-linear polynomial map k^nslots -> k built from Frobenius-power
/// monomials; additivity is structural.
class AdditiveMap {
 public:
  AdditiveMap(int nslots, std::vector<AdditiveMonomial> monomials);

  int nslots() const { return nslots_; }
  const std::vector<AdditiveMonomial>& monomials() const { return mono_; }
  const FqField& field() const { return mono_.at(0).coeff.field(); }

  RatFn eval(const std::vector<RatFn>& xs) const;
  LaurentLocal eval(const std::vector<LaurentLocal>& xs) const;

  /// g(x,y) = x + x^p + a y^p, the W_a presentation kernel map.
  static AdditiveMap w_map(const RatFn& a);
  /// f(x,y) = x - x^(p^2) - a y^(p^2), the V_a presentation kernel map.
  static AdditiveMap v_map(const RatFn& a);

 private:
  int nslots_;
  std::vector<AdditiveMonomial> mono_;
};

/// Solve g(x, 0, ..) = t for the slot-0 input when g's slot-0 part is
/// X + (higher Frobenius terms) with unit-valuation coefficients; requires
/// ord_v(t) >= 1 so every correction strictly gains valuation.
LaurentLocal newton_solve(const AdditiveMap& g, const LaurentLocal& t);

struct Window {
  int b_low;
  int b_high;  // exclusive
};

/// Non-membership certificate: an F_p-linear functional on window
/// coordinates vanishing on the modeled image span but not on lambda.
struct ImageCertificate {
  Window window;
  std::vector<uint8_t> functional;  // length (b_high-b_low) * deg(v) * m
};

struct ImageDecision {
  enum class Verdict { member, non_member, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  std::vector<LaurentLocal> witness;          // member: inputs with g(witness) = lambda + O(pi^b_high)
  std::optional<ImageCertificate> certificate;  // non_member
  Window window{0, 0};
  bool rigid = false;   // completeness of the window model was certified
  std::string note;     // reason for inconclusive
};

/// Default window for the given map and class representative order.
Window default_window(const AdditiveMap& g, const Place& v, int ord_lambda);

/// Decide lambda in g(k_v^2) on the given window. lambda must be known to
/// precision >= window.b_high.
ImageDecision image_member(const AdditiveMap& g, const LaurentLocal& lambda, Window w);

/// F_p coordinates of the window part of a series (index-major, then residue
/// coordinates); used to evaluate certificates.
std::vector<uint8_t> window_coords(const LaurentLocal& x, const Place& v, Window w);

/// Pairing of a certificate functional with a series (0 means annihilated).
int certificate_pairing(const ImageCertificate& cert, const LaurentLocal& x);

/// Search the window lattice (lex order, most negative index first) for a
/// class not in the image; NotFound error when the span covers the window.
LaurentLocal local_nontrivial_witness(const AdditiveMap& g, const Place& v, Window w);

/// Test-facing: the generator images (window-truncated) of the span model,
/// in the deterministic enumeration order used by image_member, plus the
/// ball generators. Exposed so an exhaustive oracle can enumerate the same
/// span independently.
std::vector<LaurentLocal> span_generators(const AdditiveMap& g, const Place& v, Window w);

}  // namespace wug

#endif  // WUG_LOCAL_IMAGE_HPP
