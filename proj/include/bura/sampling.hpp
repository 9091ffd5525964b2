#pragma once

#include <bura/scalar.hpp>

#include <cmath>
#include <utility>

namespace bura {

/// Grid density and local-refinement budget for sup-norm certification.
/// A value of zero for `cluster_exponent` selects an automatic exponent
/// from the approximation parameters.
struct SamplingPlan {
  int grid_points = 10000;
  int refine_iterations = 60;
  double cluster_exponent = 0.0;
  int threads = 1;
};

/// Certified-to-resolution maximum: a lower bound on the true sup together
/// with its location and the grid resolution that produced it.
template <typename Real>
struct SupremumEstimate {
  Real value;
  Real argmax;
  int grid_points = 0;
};

namespace detail {

/// Golden-section search for the maximum of f on [a, b]. Assumes f is
/// unimodal there; on multimodal input it still returns a valid lower
/// bound for the maximum. Endpoints are always evaluated.
template <typename Real, typename F>
std::pair<Real, Real> golden_max(F&& f, Real a, Real b, int iterations) {
  using std::sqrt;
  const Real invphi = (sqrt(Real(5)) - 1) / 2;
  Real x1 = b - invphi * (b - a);
  Real x2 = a + invphi * (b - a);
  Real f1 = f(x1);
  Real f2 = f(x2);
  Real lo = a, hi = b;
  for (int it = 0; it < iterations && lo < x1 && x2 < hi; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    }
  }
  Real xbest = f1 >= f2 ? x1 : x2;
  Real fbest = f1 >= f2 ? f1 : f2;
  const Real fa = f(a);
  const Real fb = f(b);
  if (fa > fbest) {
    fbest = fa;
    xbest = a;
  }
  if (fb > fbest) {
    fbest = fb;
    xbest = b;
  }
  return {xbest, fbest};
}

/// Power-law clustered grid on [a, b]: a + (b-a) * (i/(m-1))^q.
/// q > 1 concentrates points toward a.
template <typename Real>
Vector<Real> clustered_grid(const Real& a, const Real& b, int points, double q) {
  using std::pow;
  Vector<Real> grid(points);
  const Real qr(q);
  for (int i = 0; i < points; ++i) {
    Real u = Real(i) / Real(points - 1);
    grid[i] = a + (b - a) * pow(u, qr);
  }
  return grid;
}

/// Log-uniform grid on [a, b], 0 < a < b.
template <typename Real>
Vector<Real> log_grid(const Real& a, const Real& b, int points) {
  using std::exp;
  using std::log;
  Vector<Real> grid(points);
  const Real la = log(a);
  const Real lb = log(b);
  for (int i = 0; i < points; ++i) {
    grid[i] = exp(la + (lb - la) * Real(i) / Real(points - 1));
  }
  grid[0] = a;
  grid[points - 1] = b;
  return grid;
}

/// Scans precomputed grid values for interior local maxima and refines each
/// bracket by golden section; returns the certified maximum of |f|.
/// `values` must hold f evaluated on `grid` (same ordering).
template <typename Real, typename F>
SupremumEstimate<Real> refine_grid_maxima(F&& f, const Vector<Real>& grid,
                                          const Vector<Real>& values, int refine_iterations) {
  const Eigen::Index m = grid.size();
  SupremumEstimate<Real> best{values[0], grid[0], static_cast<int>(m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    if (values[i] > best.value) {
      best.value = values[i];
      best.argmax = grid[i];
    }
  }
  for (Eigen::Index i = 1; i + 1 < m; ++i) {
    if (values[i] >= values[i - 1] && values[i] >= values[i + 1]) {
      auto [x, fx] = golden_max<Real>(f, grid[i - 1], grid[i + 1], refine_iterations);
      if (fx > best.value) {
        best.value = fx;
        best.argmax = x;
      }
    }
  }
  return best;
}

}  // namespace detail
}  // namespace bura
