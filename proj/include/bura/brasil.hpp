#pragma once

#include <bura/barycentric.hpp>
#include <bura/parallel.hpp>
#include <bura/sampling.hpp>
#include <bura/scalar.hpp>

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <utility>

namespace bura {

/// The function being approximated: t^alpha on [a, b] at a given working
/// precision (decimal digits; 16 selects plain double elsewhere in the
/// toolkit, larger values the multiprecision path).
template <typename Real>
struct ApproximationTarget {
  Real alpha;
  Real a = Real(0);
  Real b = Real(1);
  unsigned precision = 16;

  Real operator()(const Real& t) const {
    using std::pow;
    if (t == 0) return Real(0);
    return pow(t, alpha);
  }
};

template <typename Real>
void validate(const ApproximationTarget<Real>& target) {
  if (!(target.alpha > 0 && target.alpha < 1))
    throw Error("approximation target: alpha must lie in (0,1)");
  if (!(target.a < target.b)) throw Error("approximation target: empty interval");
}

/// Controls for the interval-equilibration iteration.
struct IterationOptions {
  int max_iterations = 1000;
  double tolerance = 1e-3;        // relative deviation (max-min)/min of local errors
  double damping = 0.5;           // initial exponent tau in the length update (mean/err)^tau
  double max_rescale = 10.0;      // cap on any single-step length rescale factor
  double cluster_exponent = 0.0;  // initial node clustering toward t=0; 0 = automatic
  int local_search_iterations = 60;
  // The update oscillates for large k when tau is too big; after this many
  // iterations without improving the best deviation, tau is halved and the
  // iteration restarts from the best iterate (floor 0.02).
  int stall_window = 10;
};

/// Convergence record of one equilibration run: the interpolation nodes, the
/// per-subinterval error maxima (2k+2 of them), their relative deviation,
/// and the locations/signed values of the error extrema.
template <typename Real>
struct EquioscillationInfo {
  Vector<Real> nodes;
  Vector<Real> local_errors;
  Vector<Real> extrema;
  Vector<Real> signed_errors;
  Real deviation = Real(0);
  int iterations = 0;
  bool converged = false;
};

template <typename Real>
struct BrasilResult {
  BarycentricRational<Real> rational;
  EquioscillationInfo<Real> info;
};

/// Closed-form estimate 4^(alpha+1) sin(alpha pi) exp(-2 pi sqrt(alpha k))
/// of the minimax error of t^alpha on [0,1].
template <typename Real>
Real asymptotic_error_estimate(const Real& alpha, int k) {
  using std::exp;
  using std::pow;
  using std::sin;
  using std::sqrt;
  const Real p = pi<Real>();
  return pow(Real(4), alpha + 1) * sin(alpha * p) * exp(-2 * p * sqrt(alpha * Real(k)));
}

namespace detail {

/// Initial clustering exponent: places the first node near the expected
/// innermost error extremum of t^alpha, whose distance from zero scales as
/// the minimax error to the power 1/alpha.
template <typename Real>
double auto_cluster_exponent(const Real& alpha, int k) {
  using std::log10;
  const double est = static_cast<double>(asymptotic_error_estimate(alpha, k));
  const double a = static_cast<double>(alpha);
  const double x1 = std::pow(std::max(est, 1e-300), 1.0 / a);
  const double q = -std::log10(x1) / std::log10(2.0 * k + 2.0);
  return std::clamp(q, 2.0, 64.0);
}

template <typename Real>
Vector<Real> initial_nodes(const ApproximationTarget<Real>& target, int k, double q) {
  using std::pow;
  const int m = 2 * k + 1;
  Vector<Real> nodes(m);
  for (int j = 1; j <= m; ++j)
    nodes[j - 1] = target.a + (target.b - target.a) * pow(Real(j) / Real(2 * k + 2), Real(q));
  return nodes;
}

/// Geometric mean of a positive vector, with infinities ignored (they arise
/// transiently when an iterate carries a pole inside the interval).
template <typename Real>
Real geometric_mean(const Vector<Real>& v) {
  using std::exp;
  using std::log;
  Real acc(0);
  long count = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_finite(v[i]) || v[i] <= 0) continue;
    acc += log(v[i]);
    ++count;
  }
  if (count == 0) throw Error("brasil: no finite local errors");
  return exp(acc / Real(count));
}

}  // namespace detail

/// Interval-equilibration computation of the best uniform rational
/// approximation of t^alpha on [a,b]: interpolate at 2k+1 nodes, measure the
/// 2k+2 per-subinterval error maxima, and iteratively rescale the
/// subinterval lengths until the local errors equilibrate. On convergence
/// the approximation satisfies the equioscillation characterization of the
/// minimax optimum to the requested tolerance.
///
/// `warm_start` optionally supplies initial nodes (e.g. resampled from a
/// neighbouring degree); pass an empty vector for the default power-law
/// initialization.
template <typename Real>
BrasilResult<Real> brasil_approximate(const ApproximationTarget<Real>& target, int k,
                                      const IterationOptions& opts = {},
                                      const Vector<Real>& warm_start = {}) {
  using std::abs;
  using std::pow;
  validate(target);
  if (k < 1) throw Error("brasil: degree must be at least 1");

  const int m = 2 * k + 1;    // interpolation nodes
  const int niv = 2 * k + 2;  // subintervals between consecutive nodes and endpoints

  const double q = opts.cluster_exponent > 0 ? opts.cluster_exponent
                                             : detail::auto_cluster_exponent(target.alpha, k);
  Vector<Real> nodes =
      warm_start.size() == m ? warm_start : detail::initial_nodes(target, k, q);

  BrasilResult<Real> best;
  Real best_deviation = std::numeric_limits<Real>::infinity();
  double tau = opts.damping;
  int stalled = 0;

  Vector<Real> values(m), lengths(niv), local_errors(niv), extrema(niv), signed_errors(niv);

  for (int it = 1; it <= opts.max_iterations; ++it) {
    for (int j = 0; j < m; ++j) values[j] = target(nodes[j]);
    BarycentricRational<Real> r = interpolate_rational(nodes, values);

    const auto err = [&](const Real& t) { return Real(abs(target(t) - eval_barycentric(r, t))); };
    for (int j = 0; j < niv; ++j) {
      const Real lo = j == 0 ? target.a : nodes[j - 1];
      const Real hi = j == niv - 1 ? target.b : nodes[j];
      auto [x, e] = detail::golden_max<Real>(err, lo, hi, opts.local_search_iterations);
      extrema[j] = x;
      local_errors[j] = e;
      signed_errors[j] = target(x) - eval_barycentric(r, x);
    }

    Real emax(0), emin = std::numeric_limits<Real>::infinity();
    for (int j = 0; j < niv; ++j) {
      emax = std::max(emax, local_errors[j]);
      emin = std::min(emin, local_errors[j]);
    }
    const Real deviation = emin > 0 && is_finite(emax) ? (emax - emin) / emin
                                                       : std::numeric_limits<Real>::infinity();

    if (deviation < best_deviation) {
      best.rational = r;
      best.info.nodes = nodes;
      best.info.local_errors = local_errors;
      best.info.extrema = extrema;
      best.info.signed_errors = signed_errors;
      best.info.deviation = deviation;
      best.info.iterations = it;
      best_deviation = deviation;
      stalled = 0;
    } else if (++stalled >= opts.stall_window && tau > 0.02) {
      tau = std::max(tau / 2, 0.02);
      nodes = best.info.nodes;
      stalled = 0;
      continue;
    }

    if (deviation <= Real(opts.tolerance)) {
      bool alternating = true;
      for (int j = 0; j + 1 < niv; ++j)
        if (signed_errors[j] * signed_errors[j + 1] >= 0) alternating = false;
      best.info.converged = alternating;
      if (alternating) return best;
    }

    // Rescale subinterval lengths toward equal local errors. Intervals with
    // above-average error shrink; the step factor is damped and capped.
    const Real ebar = detail::geometric_mean(local_errors);
    for (int j = 0; j < niv; ++j) {
      const Real lo = j == 0 ? target.a : nodes[j - 1];
      const Real hi = j == niv - 1 ? target.b : nodes[j];
      Real factor;
      if (!is_finite(local_errors[j]) || local_errors[j] <= 0) {
        factor = Real(1.0 / opts.max_rescale);
      } else {
        factor = pow(ebar / local_errors[j], Real(tau));
        factor = std::clamp(factor, Real(1.0 / opts.max_rescale), Real(opts.max_rescale));
      }
      lengths[j] = (hi - lo) * factor;
    }
    lengths *= (target.b - target.a) / lengths.sum();
    Real pos = target.a;
    for (int j = 0; j < m; ++j) {
      pos += lengths[j];
      nodes[j] = pos;
    }
  }

  best.info.iterations = opts.max_iterations;
  best.info.converged = false;
  return best;
}

/// Monotone resampling of a converged node set to a different node count:
/// interpolates the index -> log(node) profile piecewise-linearly, which
/// preserves the clustering structure. Used to warm-start neighbouring
/// degrees.
template <typename Real>
Vector<Real> resample_nodes(const Vector<Real>& nodes, int new_count, const Real& a,
                            const Real& b) {
  using std::exp;
  using std::log;
  const long m = nodes.size();
  const auto lx = [&](long i) { return Real(log(nodes[i] - a)); };
  Vector<Real> out(new_count);
  for (int j = 1; j <= new_count; ++j) {
    const Real u = Real(j) * Real(m + 1) / Real(new_count + 1);  // fractional old index
    Real l;
    if (u <= 1 || m == 1) {
      // geometric extrapolation below the innermost node keeps the decay rate
      const long i1 = std::min<long>(1, m - 1);
      l = lx(0) - (Real(1) - u) * (lx(i1) - lx(0));
    } else if (u >= Real(m)) {
      const Real frac = u - Real(m);
      l = lx(m - 1) + frac * (log(b - a) - lx(m - 1));
    } else {
      const long i0 = static_cast<long>(u) - 1;  // u lies in [i0+1, i0+2)
      const Real frac = u - Real(i0 + 1);
      l = lx(i0) + frac * (lx(i0 + 1) - lx(i0));
    }
    out[j - 1] = a + exp(l);
  }
  // guard strict monotonicity inside (a, b) after rounding
  for (int j = 0; j < new_count; ++j) {
    if (j > 0 && !(out[j] > out[j - 1])) out[j] = out[j - 1] + (b - out[j - 1]) / 1024;
    if (!(out[j] < b)) out[j] = b - (b - (j > 0 ? out[j - 1] : a)) / 1024;
  }
  return out;
}

/// Full minimax pipeline at the precision of `Real`: for the multiprecision
/// instantiation a fast double-precision equilibration runs first and its
/// node set seeds the high-precision polish, which typically converges in a
/// few dozen iterations.
template <typename Real>
BrasilResult<Real> minimax_rational(const ApproximationTarget<Real>& target, int k,
                                    const IterationOptions& opts = {},
                                    const Vector<Real>& warm_start = {}) {
  if constexpr (std::is_same_v<Real, double>) {
    return brasil_approximate(target, k, opts, warm_start);
  } else {
    if (warm_start.size() > 0) return brasil_approximate(target, k, opts, warm_start);
    ApproximationTarget<double> dtarget{static_cast<double>(target.alpha),
                                        static_cast<double>(target.a),
                                        static_cast<double>(target.b), 16};
    auto seed = brasil_approximate(dtarget, k, opts);
    Vector<Real> nodes = cast_vector<double, Real>(seed.info.nodes);
    return brasil_approximate(target, k, opts, nodes);
  }
}

/// Certified-to-resolution sup-norm error of r against the target over
/// [a, b]: a power-law-clustered grid of `plan.grid_points` samples with
/// golden-section refinement around every grid-local maximum. The result is
/// a lower bound on the true supremum at the reported resolution.
template <typename Real>
SupremumEstimate<Real> sup_error(const BarycentricRational<Real>& r,
                                 const ApproximationTarget<Real>& target,
                                 const SamplingPlan& plan = {}) {
  using std::abs;
  const double q = plan.cluster_exponent > 0
                       ? plan.cluster_exponent
                       : detail::auto_cluster_exponent(target.alpha, r.degree());
  const Vector<Real> grid = detail::clustered_grid(target.a, target.b, plan.grid_points, q);
  Vector<Real> values(grid.size());
  const auto err = [&](const Real& t) { return Real(abs(target(t) - eval_barycentric(r, t))); };
  parallel_for(0, grid.size(), plan.threads, [&](long i) { values[i] = err(grid[i]); });
  return detail::refine_grid_maxima(err, grid, values, plan.refine_iterations);
}

}  // namespace bura
