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

/// @file factor.hpp
/// Factorization over F_q[T]: squarefree split, distinct-degree, and
/// Cantor-Zassenhaus equal-degree splitting (odd and even q). Randomness is
/// seeded from the input polynomial, so results are reproducible.

#ifndef WUG_FACTOR_HPP
#define WUG_FACTOR_HPP

#include <vector>

#include "wug/poly.hpp"

namespace wug {

struct PolyFactor {
  Poly p;    // monic irreducible
  int mult;  // multiplicity
};

/// Full factorization of a nonzero polynomial into monic irreducibles,
/// sorted by (degree, lex). The unit (leading coefficient) is dropped.
std::vector<PolyFactor> factor(const Poly& f);

bool is_irreducible(const Poly& f);

/// All monic irreducibles of the exact given degree, in lex order. Intended
/// for small q^deg only (place enumeration for reports and tests).
std::vector<Poly> monic_irreducibles(const FqField& F, int deg);

}  // namespace wug

#endif  // WUG_FACTOR_HPP
