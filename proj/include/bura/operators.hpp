#pragma once

#include <bura/scalar.hpp>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <array>
#include <cstdint>

namespace bura {

/// Uniform grid on the unit cube (0,1)^dim with homogeneous Dirichlet
/// boundary: n interior points per dimension, mesh size h = 1/(n+1).
struct UniformGrid {
  int dim = 1;
  int n = 1;

  double h() const { return 1.0 / (n + 1); }
  std::int64_t unknowns() const {
    std::int64_t total = 1;
    for (int d = 0; d < dim; ++d) total *= n;
    return total;
  }
};

void validate(const UniformGrid& grid);

/// Sparse SPD operator in compressed-row storage together with its exact
/// extreme eigenvalues. Matvec is the only primitive the solver layer uses.
class SparseOperator {
 public:
  SparseOperator(Eigen::SparseMatrix<double, Eigen::RowMajor> matrix, UniformGrid grid,
                 double lambda_min, double lambda_max);

  std::int64_t rows() const { return matrix_.rows(); }
  const UniformGrid& grid() const { return grid_; }
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }
  double diagonal_value() const { return diagonal_; }

  /// y = A x
  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const { y.noalias() = matrix_ * x; }

  const Eigen::SparseMatrix<double, Eigen::RowMajor>& matrix() const { return matrix_; }

 private:
  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix_;
  UniformGrid grid_;
  double lambda_min_;
  double lambda_max_;
  double diagonal_;
};

/// Default memory budget for assembled operators (number of unknowns).
inline constexpr std::int64_t kOperatorSizeCap = std::int64_t(1) << 26;

/// Default budget for the dense spectral oracle.
inline constexpr std::int64_t kOracleSizeCap = std::int64_t(1) << 22;

/// (2 dim + 1)-point finite difference Laplacian on the uniform grid with
/// Dirichlet conditions eliminated: diagonal 2 dim / h^2, off-diagonal
/// -1/h^2 per grid neighbour. Verifies symmetry structure and the Gershgorin
/// positivity of the assembled rows.
SparseOperator assemble_fdm_laplacian(const UniformGrid& grid,
                                      std::int64_t size_cap = kOperatorSizeCap);

/// Extreme eigenvalues of the FDM Laplacian together with the spectral-gap
/// parameter delta = 1/lambda_max after the lambda_min-normalization that
/// makes the smallest eigenvalue exactly one.
struct ExtremeEigenvalues {
  double lambda1;
  double lambdaN;
  double delta;          // lambda1 / lambdaN, the normalized 1/lambda_max
  double normalization;  // divide the spectrum by this to get lambda1 = 1
};

ExtremeEigenvalues extreme_eigenvalues(const UniformGrid& grid);

/// Analytic spectral decomposition of the FDM Laplacian: tensor-product
/// sine eigenvectors and the closed-form eigenvalues. Provides the exact
/// evaluation of A^exponent used as ground truth by the solver tests.
class SpectralOracle {
 public:
  explicit SpectralOracle(UniformGrid grid, std::int64_t size_cap = kOracleSizeCap);

  const UniformGrid& grid() const { return grid_; }

  /// Eigenvalue for the multi-index j (1-based, components in [1, n]).
  double eigenvalue(const std::array<int, 3>& j) const;

  /// Normalized eigenvector for the multi-index j, flattened row-major
  /// (first dimension slowest).
  Eigen::VectorXd eigenvector(const std::array<int, 3>& j) const;

  /// sum_j lambda_j^exponent (f, psi_j) psi_j evaluated via separable sine
  /// transforms; exact up to roundoff for any real exponent.
  Eigen::VectorXd apply_power(double exponent, const Eigen::VectorXd& f) const;

 private:
  UniformGrid grid_;
  Eigen::MatrixXd sine_;          // symmetric orthogonal sine transform, n x n
  Eigen::VectorXd eigen1d_;       // (4/h^2) sin^2(j pi h / 2), j = 1..n
};

}  // namespace bura
