#include <bura/partial_fraction.hpp>

#include <bura/brasil.hpp>

#include <doctest.h>

#include <random>

using namespace bura;

TEST_CASE("analytic partial fractions of (t+2)/(t+1)") {
  // (t+2)/(t+1) = 1 + 1/(t+1): C = 1, pole -1, residue +1
  Vector<double> nodes(3), values(3);
  nodes << 0.25, 0.5, 0.75;
  for (int i = 0; i < 3; ++i) values[i] = (nodes[i] + 2) / (nodes[i] + 1);
  const auto r = interpolate_rational(nodes, values);
  const auto pf = pole_residues(r);
  REQUIRE(pf.order() == 1);
  CHECK(pf.constant == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pf.poles[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(pf.residues[0] == doctest::Approx(1.0).epsilon(1e-12));
  // a positive residue violates the minimax-element sign pattern: flagged
  REQUIRE(pf.residue_sign_warnings.size() == 1);
  CHECK(pf.residue_sign_warnings[0] == 1);
}

TEST_CASE("reconstruction matches barycentric evaluation pointwise") {
  PrecisionGuard guard(30);
  ApproximationTarget<MpFloat> target{MpFloat(1) / 2, 0, 1, 30};
  const auto res = minimax_rational(target, 3);
  REQUIRE(res.info.converged);
  const auto pf = pole_residues(res.rational);
  REQUIRE(pf.order() == 3);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const MpFloat t(dist(rng));
    const MpFloat direct = eval_barycentric(res.rational, t);
    const MpFloat recon = pf(t);
    CHECK(static_cast<double>(abs(recon - direct) / abs(direct)) < 1e-10);
  }
}

TEST_CASE("minimax elements have negative, strictly ordered poles and negative residues") {
  for (double alpha : {0.25, 0.5, 0.8}) {
    for (int k : {2, 5, 8}) {
      ApproximationTarget<double> target{alpha};
      const auto res = brasil_approximate(target, k);
      REQUIRE(res.info.converged);
      const auto pf = pole_residues(res.rational);
      REQUIRE(pf.order() == k);
      for (int i = 0; i < k; ++i) {
        CHECK(pf.poles[i] < 0);
        CHECK(pf.residues[i] < 0);
      }
      for (int i = 0; i + 1 < k; ++i) CHECK(pf.poles[i] > pf.poles[i + 1]);
      CHECK(pf.residue_sign_warnings.empty());
      CHECK(pf.constant > 0);  // r(inf) approximates large-t behaviour of t^alpha
    }
  }
}

TEST_CASE("missing poles raise an extraction error") {
  // 1/(t - 0.5) + 3 has its pole inside [0,1], not on the negative axis
  Vector<double> nodes(3), values(3);
  nodes << 0.05, 0.15, 0.25;
  for (int i = 0; i < 3; ++i) values[i] = 1.0 / (nodes[i] - 0.5) + 3.0;
  const auto r = interpolate_rational(nodes, values);
  PoleScanOptions opts;
  opts.max_widenings = 1;
  CHECK_THROWS_AS(pole_residues(r, opts), PoleExtractionError);
}

TEST_CASE("degenerate weight sum is rejected") {
  BarycentricRational<double> r;
  r.support.resize(2);
  r.values.resize(2);
  r.weights.resize(2);
  r.support << 0.0, 1.0;
  r.values << 1.0, 2.0;
  r.weights << 1.0, -1.0;  // sum zero: numerator degree drops below k
  CHECK_THROWS_AS(pole_residues(r), PoleExtractionError);
}

TEST_CASE("pole reciprocals reach extreme magnitudes at moderate degree") {
  PrecisionGuard guard(40);
  ApproximationTarget<MpFloat> target{MpFloat(1) / 4, 0, 1, 40};
  const auto res = minimax_rational(target, 20);
  REQUIRE(res.info.converged);
  const auto pf = pole_residues(res.rational);
  REQUIRE(pf.order() == 20);
  // innermost pole below 1e-12 in magnitude: reciprocal beyond 1e12
  CHECK(static_cast<double>(abs(pf.poles[0])) < 1e-12);
}
