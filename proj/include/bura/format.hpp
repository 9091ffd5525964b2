#pragma once

#include <bura/scalar.hpp>

#include <charconv>
#include <cstdio>
#include <string>

namespace bura {

/// Decimal digits sufficient for exact binary round-trip of `x` at the
/// precision it carries.
inline int roundtrip_digits(double) { return std::numeric_limits<double>::max_digits10; }

inline int roundtrip_digits(const MpFloat& x) {
  const long bits = mpfr_get_prec(x.backend().data());
  return static_cast<int>(bits * 0.30103) + 2;
}

/// Full-precision decimal serialization; parsing the result at the same
/// working precision recovers the value bit-exactly.
inline std::string to_full_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", roundtrip_digits(x) - 1, x);
  return buf;
}

inline std::string to_full_string(const MpFloat& x) {
  return x.str(roundtrip_digits(x), std::ios_base::scientific);
}

template <typename Real>
inline Real parse_real(const std::string& s) {
  return static_cast<Real>(std::stod(s));
}

template <>
inline double parse_real<double>(const std::string& s) {
  return std::stod(s);
}

template <>
inline MpFloat parse_real<MpFloat>(const std::string& s) {
  return MpFloat(s);
}

}  // namespace bura
