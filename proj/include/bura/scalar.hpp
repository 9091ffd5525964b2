#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bura {

namespace mp = boost::multiprecision;

/// Arbitrary-precision real with runtime-selectable working precision.
/// The working precision is a process-wide setting (decimal digits);
/// see PrecisionGuard for scoped changes.
using MpFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

template <typename Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXd = Eigen::VectorXd;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interpolation data admits more than a one-dimensional weight nullspace.
class DegenerateInterpolant : public Error {
 public:
  using Error::Error;
};

/// A pole came out complex, non-negative, or went missing.
class PoleExtractionError : public Error {
 public:
  using Error::Error;
};

/// Requested problem size exceeds the configured memory budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// RAII setter for the MpFloat working precision in decimal digits.
/// Restores the previous setting on destruction. The underlying setting is
/// process-global, so scopes at different precisions must not overlap across
/// threads; all multiprecision phases in this library are single-threaded.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(MpFloat::default_precision()) {
    if (digits10 > 0) MpFloat::default_precision(digits10);
  }
  ~PrecisionGuard() { MpFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// Decimal digits carried by the scalar type (current working precision for
/// MpFloat, significand digits for double).
template <typename Real>
inline unsigned working_digits() {
  return std::numeric_limits<Real>::digits10;
}

template <>
inline unsigned working_digits<MpFloat>() {
  return MpFloat::default_precision();
}

/// Unit roundoff of `x` at the precision it actually carries.
inline double unit_roundoff(double) { return std::numeric_limits<double>::epsilon(); }

inline MpFloat unit_roundoff(const MpFloat& x) {
  MpFloat eps(1);
  return ldexp(eps, 1 - static_cast<long>(mpfr_get_prec(x.backend().data())));
}

template <typename Real>
inline Real pi() {
  return boost::math::constants::pi<Real>();
}

template <>
inline double pi<double>() {
  return M_PI;
}

/// Re-rounds a copy of `x` to the current working precision. Used when a
/// phase escalates precision and previously computed values feed new
/// arithmetic.
inline MpFloat at_working_precision(const MpFloat& x) {
  MpFloat y(x);
  y.precision(MpFloat::default_precision());
  return y;
}

inline double at_working_precision(double x) { return x; }

template <typename Real>
inline Vector<Real> at_working_precision(const Vector<Real>& v) {
  Vector<Real> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = at_working_precision(v[i]);
  return out;
}

template <typename Real>
inline bool is_finite(const Real& x) {
  using std::isfinite;
  return isfinite(x);
}

template <>
inline bool is_finite<MpFloat>(const MpFloat& x) {
  return mpfr_number_p(x.backend().data()) != 0;
}

/// Order of magnitude floor(log10 |x|).
template <typename Real>
inline long order_of_magnitude(const Real& x) {
  using std::abs;
  using std::floor;
  using std::log10;
  if (x == 0) throw Error("order_of_magnitude: zero argument");
  return static_cast<long>(floor(log10(abs(x))));
}

template <typename From, typename To>
inline Vector<To> cast_vector(const Vector<From>& v) {
  Vector<To> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = static_cast<To>(v[i]);
  return out;
}

}  // namespace bura
