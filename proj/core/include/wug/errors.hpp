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

#ifndef WUG_ERRORS_HPP
#define WUG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wug {

enum class errc {
  zero_input,
  pole_at_place,
  exact_differential_zero,
  precondition_violated,
  parameter_in_kp,
  zeta_missing,
  not_present,
  ring_mismatch,
  off_curve,
  kind_unsupported,
  infinite_point_set,
  unsupported_characteristic,
  value_not_rational,
  insufficient_precision,
  no_convergence,
  window_invalid,
  window_too_small,
  not_found,
  seed_failure,
  parse_error,
  internal,
};

/// Library-wide exception type; `code()` is stable for machine handling.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_input: return "ZeroInput";
    case errc::pole_at_place: return "PoleAtPlace";
    case errc::exact_differential_zero: return "ExactDifferentialZero";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::parameter_in_kp: return "ParameterInKp";
    case errc::zeta_missing: return "ZetaMissing";
    case errc::not_present: return "NotPresent";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::off_curve: return "OffCurve";
    case errc::kind_unsupported: return "KindUnsupported";
    case errc::infinite_point_set: return "InfinitePointSet";
    case errc::unsupported_characteristic: return "UnsupportedCharacteristic";
    case errc::value_not_rational: return "ValueNotRational";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::no_convergence: return "NoConvergence";
    case errc::window_invalid: return "WindowInvalid";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::not_found: return "NotFound";
    case errc::seed_failure: return "SeedFailure";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace wug

#endif  // WUG_ERRORS_HPP
