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
 * @file cohomology.hpp
 * @brief Connecting maps of inner twists of the central extension
 *        1 -> W -> U -> V -> 1, in closed form and through the generic
 *        etale-algebra evaluation; the constructive global solver behind
 *        Sha(V) = 0; local nontriviality witnesses for H^1(k_v, W).
 *
 * H^1(k, V) = k/f(k^2) and H^1(k, W) = k/g(k^2) with f(x,y) = x - x^(p^2)
 * - a y^(p^2) and g(x,y) = x + x^p + a y^p. For beta in k the twisted
 * connecting map delta_beta: V(k) -> k/g(k^2) is represented by
 *   2 c^p beta                        (p > 2)
 *   c^2 beta                          (p = 2, F_4 in the constants)
 *   c^2 beta + c^3                    (p = 2, descended)
 * at (c, d) in V(k); the generic route evaluates
 * g(h(X, v)) - g(h(v, X)) + g(n(v)) over k[Z]/(Z^(p^2) - Z + beta) with
 * X = (Z, 0) and checks the value is rational.
 */

#ifndef WUG_COHOMOLOGY_HPP
#define WUG_COHOMOLOGY_HPP

#include <optional>
#include <variant>

#include "wug/groups.hpp"
#include "wug/local_image.hpp"

namespace wug {

struct CohClassRep {
  GroupKind kind;       // V or W side
  RatFn rep;            // representative in k
  std::string modulus;  // "k/f(k^2)" or "k/g(k^2)"
};

/// Closed-form delta_beta(c, d); (c, d) must lie on V_a(k).
CohClassRep delta_closed(const GroupSpec& uspec, const RatFn& beta, const RatFn& c, const RatFn& d);

/// Generic-route delta_beta(c, d) through the etale algebra hosting a
/// separable-closure point above beta; throws ValueNotRational if higher
/// coordinates survive (they cannot). For the descended case the
/// g(n(v)) = c^3 sub-evaluation is recomputed over the constant-field
/// extension and asserted.
RatFn delta_generic(const GroupSpec& uspec, const RatFn& beta, const RatFn& c, const RatFn& d);

/// The g(n(v)) sub-evaluation of the descended case, computed over the
/// constant-field extension F_{q^2}(T); equals c^3 on V-points.
RatFn descended_gn(const GroupSpec& uspec, const RatFn& c, const RatFn& d);

/// Explicit preimage certifying delta_beta is trivial when beta = f(x0, y0):
/// a pair (w1, w2) with g(w1, w2) = the closed-form representative minus the
/// beta-independent part (c^3 for the descended case).
Pt2<RatFn> delta_trivial_preimage(const GroupSpec& uspec, const Pt2<RatFn>& x0y0, const RatFn& c,
                                  const RatFn& d);

struct GlobalWitness {
  Place v;
  LaurentLocal x, y;  // f(x, y) = lambda in k_v to the stated precision
};

struct SolveFailure {
  Place stalled_at;
  std::string reason;
};

using SolveResult = std::variant<Pt2<RatFn>, SolveFailure>;

/// Constructive Sha(V) = 0: from local solutions of f(x, y) = lambda at the
/// finite poles of lambda and at infinity, produce an exact global solution.
/// Finite witnesses must match lambda to order >= 0 (and the infinite one to
/// order >= 1); the final identity f(x, y) = lambda is verified exactly.
SolveResult solve_global_V(const GroupSpec& vspec, const RatFn& lambda,
                           const std::vector<GlobalWitness>& witnesses);

struct Che1Witness {
  Place v;
  LaurentLocal lambda_v;        // nontrivial class in H^1(k_v, W) = k_v/g(k_v^2)
  ImageCertificate certificate;
  int height_checked = 0;       // desk-scale evidence bound
  long long candidates_checked = 0;
  std::string note;  // the global non-lifting claim is paper-cited, not recomputed
};

/// Adelic class nontrivial at v and trivial elsewhere, with its local
/// non-membership certificate and a bounded-height global scan as evidence.
Che1Witness che1_witness(const GroupSpec& wspec, const Place& v, int height = 1);

}  // namespace wug

#endif  // WUG_COHOMOLOGY_HPP
