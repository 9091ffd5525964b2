#include <bura/barycentric.hpp>

#include <doctest.h>

#include <Eigen/Dense>

#include <random>

using namespace bura;

namespace {

// Independent oracle: degree-(2,2) rational through 5 points via the
// monomial-coefficient nullspace of [t^j | -f t^j], evaluated by Horner.
struct MonomialRational {
  Eigen::VectorXd p, q;  // coefficients, ascending powers

  double operator()(double t) const {
    double num = 0, den = 0;
    for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j) num = num * t + p[j];
    for (int j = static_cast<int>(q.size()) - 1; j >= 0; --j) den = den * t + q[j];
    return num / den;
  }
};

MonomialRational fit_rational_22(const Vector<double>& nodes, const Vector<double>& values) {
  const int k = 2;
  Eigen::MatrixXd sys(5, 2 * (k + 1));
  for (int i = 0; i < 5; ++i) {
    double power = 1;
    for (int j = 0; j <= k; ++j) {
      sys(i, j) = power;
      sys(i, k + 1 + j) = -values[i] * power;
      power *= nodes[i];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
  Eigen::VectorXd null = svd.matrixV().col(2 * (k + 1) - 1);
  MonomialRational r;
  r.p = null.head(k + 1);
  r.q = null.tail(k + 1);
  return r;
}

}  // namespace

TEST_CASE("interpolation reproduces a (1,1) rational at its nodes") {
  Vector<double> nodes(3), values(3);
  nodes << 0.25, 0.5, 0.75;
  for (int i = 0; i < 3; ++i) values[i] = 1.0 / (nodes[i] + 1.0);
  const auto r = interpolate_rational(nodes, values);
  for (int i = 0; i < 3; ++i)
    CHECK(eval_barycentric(r, nodes[i]) == doctest::Approx(values[i]).epsilon(1e-14));
  // a (1,1) interpolant of a (1,1) function is the function itself
  CHECK(eval_barycentric(r, 0.6) == doctest::Approx(1.0 / 1.6).epsilon(1e-12));
}

TEST_CASE("constant data yields the constant function everywhere") {
  Vector<double> nodes(5), values(5);
  nodes << 0.1, 0.3, 0.5, 0.7, 0.9;
  values.setConstant(3.25);
  const auto r = interpolate_rational(nodes, values);
  for (double t : {0.0, 0.05, 0.2, 0.55, 0.98, 1.0, 2.0, -1.0})
    CHECK(eval_barycentric(r, t) == doctest::Approx(3.25).epsilon(1e-13));
}

TEST_CASE("degree-2 interpolant matches the monomial-coefficient oracle") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> jitter(0.0, 0.08);
  for (int trial = 0; trial < 5; ++trial) {
    Vector<double> nodes(5), values(5);
    double value = 0.2;
    for (int i = 0; i < 5; ++i) {
      nodes[i] = 0.1 + 0.2 * i + jitter(rng) - 0.04;
      value += 0.1 + jitter(rng);  // strictly monotone data
      values[i] = value;
    }
    const auto r = interpolate_rational(nodes, values);
    const auto oracle = fit_rational_22(nodes, values);
    for (int i = 0; i < 5; ++i) {
      CHECK(std::abs(eval_barycentric(r, nodes[i]) - values[i]) < 1e-12);
      CHECK(std::abs(oracle(nodes[i]) - values[i]) < 1e-10);
    }
    // both represent the unique nondegenerate interpolant
    for (int i = 0; i + 1 < 5; ++i) {
      const double mid = (nodes[i] + nodes[i + 1]) / 2;
      CHECK(eval_barycentric(r, mid) == doctest::Approx(oracle(mid)).epsilon(1e-9));
    }
  }
}

TEST_CASE("evaluation at support points is exact") {
  Vector<double> nodes(5), values(5);
  nodes << 0.05, 0.2, 0.41, 0.68, 0.93;
  for (int i = 0; i < 5; ++i) values[i] = std::sqrt(nodes[i]);
  const auto r = interpolate_rational(nodes, values);
  for (int i = 0; i < r.support.size(); ++i)
    CHECK(eval_barycentric(r, r.support[i]) == r.values[i]);  // bitwise
}

TEST_CASE("pole evaluation returns signed infinity, not overflow garbage") {
  // r(t) = 1/(t - 0.5) has a pole inside the support hull; build it directly
  BarycentricRational<double> r;
  r.support.resize(2);
  r.values.resize(2);
  r.weights.resize(2);
  r.support << 0.0, 1.0;
  r.values << -2.0, 2.0;  // f(0) = -2, f(1) = 2
  r.weights << 1.0, 1.0;  // denominator vanishes at t = 0.5
  CHECK(is_pole(r, 0.5));
  CHECK(eval_barycentric(r, 0.5) ==
        std::numeric_limits<double>::infinity());  // limit from the right is +inf
  CHECK_FALSE(is_pole(r, 0.25));
  CHECK(std::isfinite(eval_barycentric(r, 0.25)));
}

TEST_CASE("structurally degenerate data is rejected") {
  // five samples of a (1,1) rational leave a two-dimensional nullspace at k=2
  Vector<double> nodes(5), values(5);
  nodes << 0.1, 0.3, 0.5, 0.7, 0.9;
  for (int i = 0; i < 5; ++i) values[i] = (nodes[i] + 2.0) / (nodes[i] + 1.0);
  CHECK_THROWS_AS(interpolate_rational(nodes, values), DegenerateInterpolant);
}

TEST_CASE("invalid inputs are rejected") {
  Vector<double> nodes(4), values(4);
  nodes << 0.1, 0.2, 0.3, 0.4;
  values.setOnes();
  CHECK_THROWS_AS(interpolate_rational(nodes, values), Error);  // even count

  Vector<double> bad(3), vals(3);
  bad << 0.3, 0.2, 0.5;
  vals << 1.0, 2.0, 3.0;
  CHECK_THROWS_AS(interpolate_rational(bad, vals), Error);  // not increasing
}

TEST_CASE("multiprecision instantiation interpolates to working precision") {
  PrecisionGuard guard(40);
  Vector<MpFloat> nodes(5), values(5);
  const double pts[] = {0.05, 0.25, 0.5, 0.72, 0.91};
  for (int i = 0; i < 5; ++i) {
    nodes[i] = MpFloat(pts[i]);
    values[i] = sqrt(nodes[i]);
  }
  const auto r = interpolate_rational(nodes, values);
  for (int i = 0; i < 5; ++i) {
    const MpFloat err = abs(eval_barycentric(r, nodes[i]) - values[i]);
    CHECK(static_cast<double>(err) < 1e-35);
  }
}
