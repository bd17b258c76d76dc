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

#include "wug/tamagawa.hpp"

#include <numeric>
#include <sstream>

namespace wug {

Fraction Fraction::reduced(long long n, long long d) {
  if (d == 0) fail(errc::zero_input, "fraction with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  return Fraction{n / g, d / g};
}

std::string Fraction::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

NormalizedW normalize_W(const GroupSpec& spec) {
  if (spec.kind != GroupKind::W) fail(errc::kind_unsupported, "normalize_W needs kind W");
  return NormalizedW{spec.a.pow(spec.p() - 1)};
}

namespace {
long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

ComputeN compute_N(const RatFn& b) {
  RatFn db = b.derivative();
  if (db.is_zero()) fail(errc::exact_differential_zero, "db = 0");
  const FqField& F = b.field();
  int p = F.p();
  ComputeN out;
  Divisor supp = support(db);  // zeros and poles of b' and the place infinity
  bool saw_inf = false;
  for (auto& [v, n] : supp.terms()) {
    int o = ord_differential(b, v);
    if (v.is_infinity()) saw_inf = true;
    if (o == 0) continue;
    long long term = floordiv(o, static_cast<long long>(p) * (p - 1)) * v.degree();
    out.table.push_back({v, o, term});
    out.N += term;
  }
  if (!saw_inf) {
    Place vinf = Place::infinity(F);
    int o = ord_differential(b, vinf);
    if (o != 0) {
      long long term = floordiv(o, static_cast<long long>(p) * (p - 1));
      out.table.push_back({vinf, o, term});
      out.N += term;
    }
  }
  return out;
}

ComputeL compute_l(const RatFn& b) {
  const FqField& F = b.field();
  int p = F.p();
  if (p == 2)
    fail(errc::unsupported_characteristic,
         "l counts every place when p = 2 (p - 1 = 1): not a finite quantity");
  RatFn db = b.derivative();
  if (db.is_zero()) fail(errc::exact_differential_zero, "db = 0");
  ComputeL out;
  Divisor supp = support(db);
  bool saw_inf = false;
  for (auto& [v, n] : supp.terms()) {
    if (v.is_infinity()) saw_inf = true;
    int o = ord_differential(b, v);
    if ((o + 1) % (p - 1) != 0) continue;
    int m = (o + 1) / (p - 1);
    if (m % p == 0)
      fail(errc::precondition_violated, "ord_v(db) = -1 mod p is impossible in characteristic p");
    ResidueElem r = diff_ratio(b, v, m);
    bool power = is_pminus1_power(r);
    out.places.push_back({v, m, r, power});
    if (power) ++out.l;
  }
  if (!saw_inf) {
    Place vinf = Place::infinity(F);
    int o = ord_differential(b, vinf);
    if (o != 0) fail(errc::internal, "support missed a nonzero infinite order");
    // o = 0: o + 1 = 1 is not a multiple of p - 1 >= 2
  }
  return out;
}

TamagawaReport tamagawa_number(const GroupSpec& spec) {
  if (spec.kind != GroupKind::W) fail(errc::kind_unsupported, "tamagawa_number needs kind W");
  const FqField& F = *spec.F;
  if (F.p() == 2)
    fail(errc::infinite_point_set, "W is a rational conic for p = 2: #W(k) is infinite");
  TamagawaReport rep;
  rep.spec = spec;
  rep.b = normalize_W(spec).b;
  ComputeN cn = compute_N(rep.b);
  // revalidate the sum against the per-place table
  long long check = 0;
  for (auto& e : cn.table) check += e.floor_term;
  if (check != cn.N) fail(errc::internal, "N does not telescope against its per-place table");
  rep.N = cn.N;
  rep.n_table = std::move(cn.table);
  ComputeL cl = compute_l(rep.b);
  rep.l = cl.l;
  rep.l_places = std::move(cl.places);
  rep.point_count = static_cast<long long>(enumerate_points(spec).size());
  // tau = q^(1 - g + N) p^l / #W(k), g = 0
  long long e = 1 + rep.N;
  long long num = 1, den = rep.point_count;
  for (int i = 0; i < rep.l; ++i) num *= F.p();
  if (e >= 0)
    for (long long i = 0; i < e; ++i) num *= F.q();
  else
    for (long long i = 0; i < -e; ++i) den *= F.q();
  rep.tau = Fraction::reduced(num, den);
  return rep;
}

CounterexampleReport counterexample_report_from(const std::string& label, Fraction tau_w, int p,
                                                bool sha_w_trivial) {
  CounterexampleReport rep;
  rep.u_spec = label;
  rep.tau_w = tau_w;
  rep.tau_u_identity = "tau(U) = tau(W) tau(V)";
  rep.assumptions.push_back(sha_w_trivial ? "ShaW_trivial" : "ShaW_unknown");
  std::ostringstream ex;
  ex << "(Z/" << p << ")^2";
  rep.ext1_w_expected = ex.str();
  if (!sha_w_trivial) {
    // without the flag only the inequality #Ext^1(W) >= tau(W) is certified
    rep.ext1_w_order = tau_w;
    rep.discrepancy_factor = tau_w;
  } else {
    rep.ext1_w_order = tau_w;  // #Ext^1(W, G_m) = tau(W) #Sha(W) = tau(W)
    rep.discrepancy_factor = tau_w;
  }
  rep.counterexample = !(rep.discrepancy_factor == Fraction{1, 1});
  return rep;
}

CounterexampleReport counterexample_report(const GroupSpec& uspec, bool sha_w_trivial) {
  if (uspec.kind != GroupKind::U && uspec.kind != GroupKind::Uzeta &&
      uspec.kind != GroupKind::Udescended)
    fail(errc::kind_unsupported, "counterexample_report needs a U-kind spec");
  const FqField& F = *uspec.F;
  if (F.p() == 2)
    fail(errc::unsupported_characteristic,
         "the quantitative discrepancy is computed for p > 2 only");
  if (F.m() % 2 != 0)
    fail(errc::precondition_violated, "the computation assumes q = p^(2n)");
  GroupSpec wspec = make_group(GroupKind::W, F, uspec.a);
  TamagawaReport wt = tamagawa_number(wspec);
  CounterexampleReport rep =
      counterexample_report_from(uspec.to_string(), wt.tau, F.p(), sha_w_trivial);
  rep.point_count_w = wt.point_count;
  return rep;
}

}  // namespace wug
