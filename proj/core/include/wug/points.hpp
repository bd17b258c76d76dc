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
 * @file points.hpp
 * @brief Provably complete enumeration of V_a(k) and W_a(k).
 *
 * The pole bound comes from ord_v(dx) >= ord_v(x) - 1 applied to the curve
 * equation: at a place where ord_v(x) < 0,
 *     ord_v(x) >= ceil((ord_v(a) - ord_v(da) - 1) / (p^E - 1)),
 * with E = 1 for W and E = 2 for V, and such a pole is possible only when
 * p^E | ord_v(a). Outside supp(a), supp(da) and infinity the bound forces
 * ord_v(x) >= 0, so the candidate x-space is the finite Riemann-Roch space
 * L(D) of the bound divisor, and y is recovered by p^E-th root extraction.
 *
 * The independent oracle enumerates x-denominators of height <= H and solves
 * the p^E-th power condition as an F_p-linear system on numerators.
 */

#ifndef WUG_POINTS_HPP
#define WUG_POINTS_HPP

#include <vector>

#include "wug/groups.hpp"
#include "wug/place.hpp"

namespace wug {

struct PoleBoundEntry {
  Place v;
  int allowed_pole;  // x may have ord_v(x) >= -allowed_pole
  std::string rule;  // which inequality produced the bound
};

struct PoleBound {
  GroupSpec spec;
  Divisor D;  // ord_v(x) >= -D_v for every rational point
  std::vector<PoleBoundEntry> per_place;
};

/// Kind V or W only; a not a p-th power (guaranteed by make_group).
PoleBound pole_bounds(const GroupSpec& spec);

/// All k-rational points, complete by the pole bound; deterministic order.
/// InfinitePointSet for the p = 2 W-family (a rational conic).
std::vector<Pt2<RatFn>> enumerate_points(const GroupSpec& spec);

/// Independent oracle: all points whose coordinates are ratios of polynomials
/// of degree <= H.
std::vector<Pt2<RatFn>> brute_force_points(const GroupSpec& spec, int H);

/// Deterministic point order used by both enumerations.
bool point_less(const Pt2<RatFn>& a, const Pt2<RatFn>& b);

}  // namespace wug

#endif  // WUG_POINTS_HPP
