#pragma once

#include <bura/scalar.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace bura {

/// Degree-(k,k) rational function in barycentric form: k+1 strictly
/// increasing support points x_i with stored values f_i and nonzero weights
/// w_i. Evaluation at a support point returns the stored value exactly.
template <typename Real>
struct BarycentricRational {
  Vector<Real> support;
  Vector<Real> values;
  Vector<Real> weights;

  int degree() const { return static_cast<int>(support.size()) - 1; }

  /// Value at infinity, (sum w_i f_i) / (sum w_i). Finite only when the
  /// numerator and denominator have equal degree.
  Real value_at_infinity() const {
    const Real wsum = weights.sum();
    if (wsum == 0) throw Error("barycentric: weights sum to zero, r(inf) undefined");
    return weights.dot(values) / wsum;
  }
};

template <typename Real>
void validate(const BarycentricRational<Real>& r) {
  const auto n = r.support.size();
  if (n < 2 || r.values.size() != n || r.weights.size() != n)
    throw Error("barycentric: inconsistent sizes");
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (!(r.support[i] < r.support[i + 1]))
      throw Error("barycentric: support points not strictly increasing");
  for (Eigen::Index i = 0; i < n; ++i)
    if (r.weights[i] == 0) throw Error("barycentric: zero weight");
}

/// Second-form barycentric evaluation sum(w_i f_i/(t-x_i)) / sum(w_i/(t-x_i)).
/// At a support point the stored value is returned exactly. At a pole of the
/// rational (denominator zero off the support set) the result is a signed
/// infinity taken from the one-sided limit, never overflow garbage.
template <typename Real>
Real eval_barycentric(const BarycentricRational<Real>& r, const Real& t) {
  const auto n = r.support.size();
  for (Eigen::Index i = 0; i < n; ++i)
    if (t == r.support[i]) return r.values[i];
  Real num(0), den(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Real c = r.weights[i] / (t - r.support[i]);
    num += c * r.values[i];
    den += c;
  }
  if (den == 0) {
    // One-sided limit: sign of num/den just right of t.
    Real dden(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Real d = t - r.support[i];
      dden -= r.weights[i] / (d * d);
    }
    const Real inf = std::numeric_limits<Real>::infinity();
    if (num == 0) return std::numeric_limits<Real>::quiet_NaN();
    return (num > 0) == (dden > 0) ? inf : -inf;
  }
  return num / den;
}

/// True when t hits a pole of r (denominator vanishes off the support set).
template <typename Real>
bool is_pole(const BarycentricRational<Real>& r, const Real& t) {
  const auto n = r.support.size();
  for (Eigen::Index i = 0; i < n; ++i)
    if (t == r.support[i]) return false;
  Real den(0);
  for (Eigen::Index i = 0; i < n; ++i) den += r.weights[i] / (t - r.support[i]);
  return den == 0;
}

namespace detail {

/// Lagrange barycentric weights for polynomial interpolation at `points`,
/// scaled to unit max magnitude. Used for the degenerate constant-data case
/// where rational interpolation conditions vanish identically.
template <typename Real>
Vector<Real> polynomial_weights(const Vector<Real>& points) {
  const auto n = points.size();
  Vector<Real> w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Real prod(1);
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != i) prod *= points[i] - points[j];
    w[i] = Real(1) / prod;
  }
  Real scale(0);
  using std::abs;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, Real(abs(w[i])));
  return w / scale;
}

}  // namespace detail

/// Rational interpolation of 2k+1 (node, value) pairs by a degree-(k,k)
/// barycentric rational. The k+1 even-indexed nodes become support points;
/// the weights are the null vector of the k x (k+1) Loewner matrix of the
/// interpolation conditions at the k odd-indexed nodes. Throws
/// DegenerateInterpolant when that nullspace is not one-dimensional
/// (constant data is the benign exception and yields the constant function).
template <typename Real>
BarycentricRational<Real> interpolate_rational(const Vector<Real>& nodes,
                                               const Vector<Real>& values) {
  using std::abs;
  const Eigen::Index m = nodes.size();
  if (m < 3 || m % 2 == 0) throw Error("interpolate_rational: need 2k+1 nodes, k >= 1");
  if (values.size() != m) throw Error("interpolate_rational: node/value size mismatch");
  for (Eigen::Index i = 0; i + 1 < m; ++i)
    if (!(nodes[i] < nodes[i + 1]))
      throw Error("interpolate_rational: nodes not strictly increasing");
  for (Eigen::Index i = 0; i < m; ++i)
    if (!is_finite(values[i])) throw Error("interpolate_rational: non-finite value");

  const Eigen::Index k = (m - 1) / 2;
  BarycentricRational<Real> r;
  r.support.resize(k + 1);
  r.values.resize(k + 1);
  Vector<Real> test_nodes(k), test_values(k);
  for (Eigen::Index j = 0; j <= k; ++j) {
    r.support[j] = nodes[2 * j];
    r.values[j] = values[2 * j];
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    test_nodes[i] = nodes[2 * i + 1];
    test_values[i] = values[2 * i + 1];
  }

  if (values.maxCoeff() == values.minCoeff()) {
    r.weights = detail::polynomial_weights(r.support);
    return r;
  }

  // Loewner matrix of the conditions r(t_i) = g_i:
  //   sum_j w_j (f_j - g_i) / (t_i - x_j) = 0.
  Matrix<Real> loewner(k, k + 1);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j <= k; ++j)
      loewner(i, j) = (r.values[j] - test_values[i]) / (test_nodes[i] - r.support[j]);

  // Null vector via QR of the transpose; the last column of Q spans the
  // orthogonal complement of the row space when the rank is exactly k.
  Eigen::HouseholderQR<Matrix<Real>> qr(loewner.transpose());
  Matrix<Real> qfull = qr.householderQ();
  Matrix<Real> rfact = qr.matrixQR().template triangularView<Eigen::Upper>();
  // Valid node sets give exponentially graded R diagonals with consecutive
  // decay steps of order 0.1; a structural rank deficiency (nullspace
  // dimension > 1) collapses the trailing diagonal entry by many orders
  // relative to its neighbour instead.
  if (rfact(k - 1, k - 1) == 0)
    throw DegenerateInterpolant(
        "interpolate_rational: Loewner nullspace dimension exceeds one (degenerate nodes)");
  if (k >= 2 && abs(rfact(k - 1, k - 1)) <= Real(1e-8) * abs(rfact(k - 2, k - 2)))
    throw DegenerateInterpolant(
        "interpolate_rational: Loewner nullspace dimension exceeds one (degenerate nodes)");

  r.weights = qfull.col(k);
  for (Eigen::Index j = 0; j <= k; ++j)
    if (r.weights[j] == 0)
      throw DegenerateInterpolant("interpolate_rational: vanishing barycentric weight");
  return r;
}

}  // namespace bura
