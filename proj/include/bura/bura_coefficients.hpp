#pragma once

#include <bura/parallel.hpp>
#include <bura/partial_fraction.hpp>
#include <bura/sampling.hpp>
#include <bura/scalar.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace bura {

/// Solver-ready coefficients of the pole expansion
///   A^{-alpha} f ~ c0 f + sum_i c_i (A - dtilde_i I)^{-1} f,
/// with c_i > 0 and 0 > dtilde_k > ... > dtilde_1 (|dtilde_1| largest).
/// Terms are stored 0-based: c[i-1], dtilde[i-1] hold the i-th pair.
template <typename Real>
struct BuraCoefficients {
  Real alpha;
  int k = 0;
  Real lambda1 = Real(1);
  Real c0 = Real(0);
  Vector<Real> c;
  Vector<Real> dtilde;
};

/// Reduced sum: the k-k' leading terms (largest |dtilde_i|) folded into the
/// constant, keeping k' pole terms. Reduction with kprime == k is the
/// identity.
template <typename Real>
struct ReducedBura {
  Real alpha;
  int k = 0;
  Real lambda1 = Real(1);
  int kprime = 0;
  Real c0_reduced = Real(0);
  Vector<Real> c;       // retained terms, original indices k-k'+1 .. k
  Vector<Real> dtilde;
};

/// Change of variable from the partial fractions of the minimax element
/// r(t) = C + sum b_i/(t - d_i) of t^alpha to the solver coefficients of
/// lambda1^{-alpha} r(lambda1 / lambda):
///   dtilde_i = lambda1 / d_i,
///   c_i      = -lambda1^{1-alpha} b_i / d_i^2,
///   c0       = lambda1^{-alpha} (C - sum b_i / d_i).
/// For lambda1 = 1 this is the classical dtilde_i = 1/d_i form. Signs are
/// checked: every c_i must be positive and every dtilde_i negative.
template <typename Real>
BuraCoefficients<Real> to_bura_coefficients(const PartialFractionForm<Real>& pf,
                                            const Real& alpha, const Real& lambda1) {
  using std::pow;
  if (!(lambda1 >= 1)) throw Error("to_bura_coefficients: lambda1 must be >= 1");
  const int k = pf.order();
  BuraCoefficients<Real> out;
  out.alpha = alpha;
  out.k = k;
  out.lambda1 = lambda1;
  out.c.resize(k);
  out.dtilde.resize(k);
  Real fold(0);
  for (int i = 0; i < k; ++i) {
    const Real d = pf.poles[i];
    const Real b = pf.residues[i];
    out.dtilde[i] = lambda1 / d;
    out.c[i] = -pow(lambda1, 1 - alpha) * b / (d * d);
    fold += b / d;
    if (!(out.c[i] > 0))
      throw Error("to_bura_coefficients: c_" + std::to_string(i + 1) +
                  " is not positive; input is not a converged minimax element");
    if (!(out.dtilde[i] < 0))
      throw Error("to_bura_coefficients: dtilde_" + std::to_string(i + 1) + " is not negative");
  }
  out.c0 = pow(lambda1, -alpha) * (pf.constant - fold);
  return out;
}

/// Folds the k-k' terms with the largest |dtilde_i| into the constant:
/// c0' = c0 - sum_{i<=k-k'} c_i/dtilde_i. Retained terms are unchanged.
template <typename Real>
ReducedBura<Real> reduce(const BuraCoefficients<Real>& coeffs, int kprime) {
  if (kprime < 1 || kprime > coeffs.k) throw Error("reduce: kprime out of range");
  const int folded = coeffs.k - kprime;
  ReducedBura<Real> out;
  out.alpha = coeffs.alpha;
  out.k = coeffs.k;
  out.lambda1 = coeffs.lambda1;
  out.kprime = kprime;
  Real fold(0);
  for (int i = 0; i < folded; ++i) fold += coeffs.c[i] / coeffs.dtilde[i];
  out.c0_reduced = coeffs.c0 - fold;
  out.c = coeffs.c.tail(kprime);
  out.dtilde = coeffs.dtilde.tail(kprime);
  return out;
}

/// Scalar evaluation c0 + sum_i c_i/(z - dtilde_i) in fixed ascending-i
/// order. Approximates z^{-alpha} for z in the spectral interval.
template <typename Real>
Real eval_rational(const BuraCoefficients<Real>& coeffs, const Real& z) {
  Real acc = coeffs.c0;
  for (int i = 0; i < coeffs.k; ++i) acc += coeffs.c[i] / (z - coeffs.dtilde[i]);
  return acc;
}

template <typename Real>
Real eval_rational(const ReducedBura<Real>& reduced, const Real& z) {
  Real acc = reduced.c0_reduced;
  for (int i = 0; i < reduced.kprime; ++i) acc += reduced.c[i] / (z - reduced.dtilde[i]);
  return acc;
}

/// Max of |z^{-alpha} - R(z)| over z in [1, 1/delta] on a log-clustered grid
/// with golden-section refinement; a lower bound at the reported resolution.
template <typename Rational, typename Real>
SupremumEstimate<Real> error_indicator(const Rational& coeffs, const Real& alpha,
                                       const Real& delta, const SamplingPlan& plan = {}) {
  using std::abs;
  using std::pow;
  if (!(delta > 0 && delta < 1)) throw Error("error_indicator: delta must lie in (0,1)");
  const auto err = [&](const Real& z) {
    return Real(abs(pow(z, -alpha) - eval_rational(coeffs, z)));
  };
  const Vector<Real> grid = detail::log_grid(Real(1), 1 / delta, plan.grid_points);
  Vector<Real> values(grid.size());
  parallel_for(0, grid.size(), plan.threads, [&](long i) { values[i] = err(grid[i]); });
  return detail::refine_grid_maxima(err, grid, values, plan.refine_iterations);
}

/// Upper bound on the indicator gap (Etilde - E) from the first retained
/// magnitude ordering:
///   delta^{-1}/(delta^{-1} - dtilde_{k-k'}) * (k-k') c_{k-k'} / (-dtilde_{k-k'}).
template <typename Real>
Real error_gap_bound(const BuraCoefficients<Real>& coeffs, int kprime, const Real& delta) {
  if (kprime >= coeffs.k || kprime < 1) throw Error("error_gap_bound: need 1 <= kprime < k");
  const int i = coeffs.k - kprime;  // last folded term, 1-based
  const Real d = coeffs.dtilde[i - 1];
  const Real c = coeffs.c[i - 1];
  const Real inv_delta = 1 / delta;
  return inv_delta / (inv_delta - d) * (Real(i) * c / (-d));
}

/// Order-of-magnitude estimate of the gap Etilde - E for a given reduction:
/// ord(delta^{-1}) + ord(c_{k-k'}/(-dtilde_{k-k'})) - ord(-dtilde_{k-k'}).
template <typename Real>
long predicted_gap_order(const BuraCoefficients<Real>& coeffs, int kprime, const Real& delta) {
  if (kprime >= coeffs.k || kprime < 1) throw Error("predicted_gap_order: need 1 <= kprime < k");
  const int i = coeffs.k - kprime;
  const Real d = coeffs.dtilde[i - 1];
  const Real c = coeffs.c[i - 1];
  return order_of_magnitude(1 / delta) + order_of_magnitude(c / (-d)) - order_of_magnitude(-d);
}

/// Minimal k' whose predicted gap order falls strictly below `target_order`
/// (typically the order of E itself); returns k when no reduction qualifies.
template <typename Real>
int suggest_kprime(const BuraCoefficients<Real>& coeffs, const Real& delta, long target_order) {
  for (int kprime = 1; kprime < coeffs.k; ++kprime)
    if (predicted_gap_order(coeffs, kprime, delta) < target_order) return kprime;
  return coeffs.k;
}

/// Soft diagnostics for the sign and monotonicity patterns every computed
/// coefficient set has exhibited; violations are reported, not fatal.
struct CoefficientDiagnostics {
  bool c_positive = true;
  bool dtilde_negative = true;
  bool dtilde_magnitude_strictly_decreasing = true;
  bool c_strictly_decreasing = true;
  bool ratio_magnitude_strictly_increasing = true;
  std::vector<std::string> notes;

  bool all_hold() const {
    return c_positive && dtilde_negative && dtilde_magnitude_strictly_decreasing &&
           c_strictly_decreasing && ratio_magnitude_strictly_increasing;
  }
};

template <typename Real>
CoefficientDiagnostics check_coefficients(const BuraCoefficients<Real>& coeffs) {
  using std::abs;
  CoefficientDiagnostics diag;
  for (int i = 0; i < coeffs.k; ++i) {
    if (!(coeffs.c[i] > 0)) {
      diag.c_positive = false;
      diag.notes.push_back("c_" + std::to_string(i + 1) + " not positive");
    }
    if (!(coeffs.dtilde[i] < 0)) {
      diag.dtilde_negative = false;
      diag.notes.push_back("dtilde_" + std::to_string(i + 1) + " not negative");
    }
  }
  for (int i = 0; i + 1 < coeffs.k; ++i) {
    if (!(abs(coeffs.dtilde[i]) > abs(coeffs.dtilde[i + 1]))) {
      diag.dtilde_magnitude_strictly_decreasing = false;
      diag.notes.push_back("|dtilde| not strictly decreasing at i=" + std::to_string(i + 1));
    }
    if (!(coeffs.c[i] > coeffs.c[i + 1])) {
      diag.c_strictly_decreasing = false;
      diag.notes.push_back("c not strictly decreasing at i=" + std::to_string(i + 1));
    }
    if (!(abs(coeffs.c[i] / coeffs.dtilde[i]) < abs(coeffs.c[i + 1] / coeffs.dtilde[i + 1]))) {
      diag.ratio_magnitude_strictly_increasing = false;
      diag.notes.push_back("|c/dtilde| not strictly increasing at i=" + std::to_string(i + 1));
    }
  }
  return diag;
}

template <typename Real>
BuraCoefficients<double> to_double(const BuraCoefficients<Real>& coeffs) {
  BuraCoefficients<double> out;
  out.alpha = static_cast<double>(coeffs.alpha);
  out.k = coeffs.k;
  out.lambda1 = static_cast<double>(coeffs.lambda1);
  out.c0 = static_cast<double>(coeffs.c0);
  out.c = cast_vector<Real, double>(coeffs.c);
  out.dtilde = cast_vector<Real, double>(coeffs.dtilde);
  return out;
}

template <typename Real>
ReducedBura<double> to_double(const ReducedBura<Real>& reduced) {
  ReducedBura<double> out;
  out.alpha = static_cast<double>(reduced.alpha);
  out.k = reduced.k;
  out.lambda1 = static_cast<double>(reduced.lambda1);
  out.kprime = reduced.kprime;
  out.c0_reduced = static_cast<double>(reduced.c0_reduced);
  out.c = cast_vector<Real, double>(reduced.c);
  out.dtilde = cast_vector<Real, double>(reduced.dtilde);
  return out;
}

}  // namespace bura
