#include <bura/fractional_solver.hpp>

#include <bura/brasil.hpp>
#include <bura/partial_fraction.hpp>

#include <doctest.h>

#include <Eigen/Dense>

#include <numeric>
#include <random>

using namespace bura;

namespace {

BuraCoefficients<double> grid_coefficients(double alpha, int k, const UniformGrid& grid) {
  const auto ext = extreme_eigenvalues(grid);
  ApproximationTarget<double> target{alpha};
  const auto res = brasil_approximate(target, k);
  REQUIRE(res.info.converged);
  return to_bura_coefficients(pole_residues(res.rational), alpha, ext.lambda1);
}

Eigen::VectorXd random_vector(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXd f(n);
  for (Eigen::Index i = 0; i < n; ++i) f[i] = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("eigenvector inputs reduce to the scalar rational evaluation") {
  const UniformGrid grid{1, 63};
  const auto A = assemble_fdm_laplacian(grid);
  const SpectralOracle oracle(grid);
  const auto coeffs = grid_coefficients(0.5, 6, grid);

  for (int j : {1, 13, 63}) {
    const auto psi = oracle.eigenvector({j, 1, 1});
    const double lambda = oracle.eigenvalue({j, 1, 1});
    const auto result = solve_bura(A, coeffs, psi);
    const double scalar = eval_rational(coeffs, lambda);
    CHECK((result.u - scalar * psi).norm() <= 1e-10 * std::abs(scalar));

    const auto reduced = reduce(coeffs, 4);
    const auto rs = solve_rsbura(A, reduced, psi);
    const double scalar_rs = eval_rational(reduced, lambda);
    CHECK((rs.u - scalar_rs * psi).norm() <= 1e-10 * std::abs(scalar_rs));
  }
}

TEST_CASE("1d solve at alpha 0.25, k 12 passes the relative error bound") {
  const UniformGrid grid{1, 511};
  const auto A = assemble_fdm_laplacian(grid);
  const SpectralOracle oracle(grid);
  const auto ext = extreme_eigenvalues(grid);
  const auto coeffs = grid_coefficients(0.25, 12, grid);

  const auto f = random_vector(A.rows(), 2024);
  const auto u_ref = oracle.apply_power(-0.25, f);
  const auto result = solve_bura(A, coeffs, f);

  // k = 12 is the Table row for accuracy 1e-4 at alpha = 0.25
  BoundSpec bound{"lambda1^-alpha * 1e-4", std::pow(ext.lambda1, -0.25) * 1e-4,
                  accumulation_slack(coeffs, 1e-12)};
  const auto report = certify(u_ref, result, f, bound);
  CHECK(report.pass);
  CHECK(report.relative_error <= bound.value);
}

TEST_CASE("discrete solve equals the spectral evaluation of the rational") {
  const UniformGrid grid{1, 63};
  const auto A = assemble_fdm_laplacian(grid);
  const SpectralOracle oracle(grid);
  const auto coeffs = grid_coefficients(0.5, 8, grid);
  const auto f = random_vector(A.rows(), 77);

  const auto result = solve_bura(A, coeffs, f);

  // eigendecomposition route: sum_j R(lambda_j) (f, psi_j) psi_j
  Eigen::VectorXd u_spec = Eigen::VectorXd::Zero(f.size());
  for (int j = 1; j <= grid.n; ++j) {
    const auto psi = oracle.eigenvector({j, 1, 1});
    u_spec += eval_rational(coeffs, oracle.eigenvalue({j, 1, 1})) * psi.dot(f) * psi;
  }
  CHECK((result.u - u_spec).norm() / u_spec.norm() <= 1e-9);
}

TEST_CASE("kprime = k reduced solve is identical to the full solve") {
  const UniformGrid grid{1, 127};
  const auto A = assemble_fdm_laplacian(grid);
  const auto coeffs = grid_coefficients(0.75, 5, grid);
  const auto f = random_vector(A.rows(), 31);

  const auto full = solve_bura(A, coeffs, f);
  const auto rs = solve_rsbura(A, reduce(coeffs, coeffs.k), f);
  CHECK((full.u.array() == rs.u.array()).all());  // same code path, empty fold
  CHECK(rs.method == "RS-BURA");
  CHECK(rs.kprime == coeffs.k);
}

TEST_CASE("accumulation order invariance") {
  const UniformGrid grid{1, 127};
  const auto A = assemble_fdm_laplacian(grid);
  const auto coeffs = grid_coefficients(0.5, 9, grid);
  const auto f = random_vector(A.rows(), 55);

  const auto result = solve_bura(A, coeffs, f);

  std::vector<Eigen::VectorXd> xs(coeffs.k);
  for (int i = 0; i < coeffs.k; ++i) xs[i] = shifted_cg(A, coeffs.dtilde[i], f).first;

  std::vector<int> order(coeffs.k);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    Eigen::VectorXd u = coeffs.c0 * f;
    for (int i : order) u += coeffs.c[i] * xs[i];
    CHECK((u - result.u).norm() <= 1e-14 * result.u.norm());
  }
}

TEST_CASE("reduced-vs-full gap obeys the scalar chain") {
  const UniformGrid grid{2, 15};
  const auto A = assemble_fdm_laplacian(grid);
  const auto ext = extreme_eigenvalues(grid);
  const auto coeffs = grid_coefficients(0.25, 8, grid);
  const int kprime = 5;
  const auto reduced = reduce(coeffs, kprime);
  const auto f = random_vector(A.rows(), 83);

  const auto full = solve_bura(A, coeffs, f);
  const auto rs = solve_rsbura(A, reduced, f);
  const double gap_vec = (rs.u - full.u).norm() / f.norm();

  // max over the spectral interval of (r_reduced - r), then the closed bound
  double gap_scalar = 0;
  for (int s = 0; s <= 4000; ++s) {
    const double z =
        ext.lambda1 * std::pow(ext.lambdaN / ext.lambda1, s / 4000.0);
    gap_scalar = std::max(gap_scalar, eval_rational(reduced, z) - eval_rational(coeffs, z));
  }
  const double slack = 2 * accumulation_slack(coeffs, 1e-12);
  CHECK(gap_vec <= gap_scalar + slack);
  // the spectral interval in the dtilde variable sits inside [1, 1/delta]
  // after lambda1-normalization, where the analytic bound applies
  const double bound = static_cast<double>(error_gap_bound(
      to_bura_coefficients(
          pole_residues(brasil_approximate(ApproximationTarget<double>{0.25}, 8).rational), 0.25,
          1.0),
      kprime, ext.delta));
  CHECK(gap_scalar / std::pow(ext.lambda1, -0.25) <= bound * (1 + 1e-6));
}

TEST_CASE("certification edge cases") {
  const UniformGrid grid{1, 7};
  const auto A = assemble_fdm_laplacian(grid);
  const SpectralOracle oracle(grid);
  const auto ext = extreme_eigenvalues(grid);
  const auto coeffs = grid_coefficients(0.5, 4, grid);

  SUBCASE("dense-arithmetic toy problem passes strictly") {
    ApproximationTarget<double> target{0.5};
    const auto res = brasil_approximate(target, 4);
    const double E = static_cast<double>(sup_error(res.rational, target).value);

    const auto f = random_vector(A.rows(), 11);
    const auto u_ref = oracle.apply_power(-0.5, f);
    // dense direct shifted solves remove the iterative-solver error entirely
    Eigen::VectorXd u = coeffs.c0 * f;
    for (int i = 0; i < coeffs.k; ++i) {
      Eigen::MatrixXd dense = Eigen::MatrixXd(A.matrix());
      dense.diagonal().array() -= coeffs.dtilde[i];
      u += coeffs.c[i] * dense.ldlt().solve(f);
    }
    const double rel = (u_ref - u).norm() / f.norm();
    CHECK(rel < std::pow(ext.lambda1, -0.5) * E);
  }

  SUBCASE("the highest mode probes the bound hardest") {
    const auto psi = oracle.eigenvector({7, 1, 1});
    const double lambdaN = oracle.eigenvalue({7, 1, 1});
    const auto result = solve_bura(A, coeffs, psi);
    const auto u_ref = oracle.apply_power(-0.5, psi);
    const auto report = certify(u_ref, result, psi, BoundSpec{"probe", 1.0, 0.0});
    const double expected = std::abs(std::pow(lambdaN, -0.5) - eval_rational(coeffs, lambdaN));
    CHECK(report.relative_error == doctest::Approx(expected).epsilon(1e-6));
  }

  SUBCASE("zero input certifies trivially") {
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(A.rows());
    const auto result = solve_bura(A, coeffs, zero);
    CHECK(result.u.norm() == 0.0);
    const auto report = certify(zero, result, zero, BoundSpec{"zero", 1e-30, 0.0});
    CHECK(report.pass);
    CHECK(report.relative_error == 0.0);
  }
}

TEST_CASE("shift-solve failures surface with the term index") {
  const UniformGrid grid{1, 127};
  const auto A = assemble_fdm_laplacian(grid);
  const auto coeffs = grid_coefficients(0.5, 6, grid);
  const auto f = random_vector(A.rows(), 3);
  CgConfig cfg;
  cfg.max_iterations = 2;  // forces failure on the small-shift systems
  CHECK_THROWS_WITH_AS(solve_bura(A, coeffs, f, cfg),
                       doctest::Contains("shift solve"), Error);
}

TEST_CASE("threaded solves match the single-threaded result exactly") {
  const UniformGrid grid{2, 15};
  const auto A = assemble_fdm_laplacian(grid);
  const auto coeffs = grid_coefficients(0.5, 7, grid);
  const auto f = random_vector(A.rows(), 19);
  const auto serial = solve_bura(A, coeffs, f, {}, 1);
  const auto threaded = solve_bura(A, coeffs, f, {}, 4);
  CHECK((serial.u.array() == threaded.u.array()).all());  // fixed-order accumulation
}
