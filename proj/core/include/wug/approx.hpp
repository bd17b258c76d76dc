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
 * @file approx.hpp
 * @brief Weak and strong approximation over F_q(T): produce beta in k with
 *        ord_v(beta - t_v) >= N_v at finitely many places.
 *
 * Finite targets are met by CRT in F_q[T] (partial fractions), so in
 * strong mode (integral_away_from_infinity) beta has no poles at finite
 * places outside the target set. An infinity target is met afterwards:
 * in weak mode with powers of 1/(T-c) for a helper value c outside the
 * target set; in strong mode by polynomial-part truncation, which reaches
 * precision 1 beyond the polynomial part (the Riemann-Roch limit on P^1 when
 * no finite denominators are allowed).
 */

#ifndef WUG_APPROX_HPP
#define WUG_APPROX_HPP

#include <vector>

#include "wug/laurent.hpp"

namespace wug {

struct ApproxTarget {
  Place v;
  LaurentLocal t;  // desired expansion (known at least through N - 1)
  int N;           // require ord_v(beta - t) >= N
};

struct ApproxOptions {
  bool integral_away_from_infinity = false;
};

RatFn approximate(const std::vector<ApproxTarget>& targets, const ApproxOptions& opt = {});

}  // namespace wug

#endif  // WUG_APPROX_HPP
