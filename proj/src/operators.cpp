#include <bura/operators.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace bura {

void validate(const UniformGrid& grid) {
  if (grid.dim < 1 || grid.dim > 3) throw Error("grid: dim must be 1, 2 or 3");
  if (grid.n < 1) throw Error("grid: need at least one interior point per dimension");
}

SparseOperator::SparseOperator(Eigen::SparseMatrix<double, Eigen::RowMajor> matrix,
                               UniformGrid grid, double lambda_min, double lambda_max)
    : matrix_(std::move(matrix)),
      grid_(grid),
      lambda_min_(lambda_min),
      lambda_max_(lambda_max),
      diagonal_(2.0 * grid.dim / (grid.h() * grid.h())) {}

namespace {

// Strides of the row-major flattening (first dimension slowest).
std::array<std::int64_t, 3> strides(const UniformGrid& grid) {
  std::array<std::int64_t, 3> s{0, 0, 0};
  std::int64_t acc = 1;
  for (int d = grid.dim - 1; d >= 0; --d) {
    s[d] = acc;
    acc *= grid.n;
  }
  return s;
}

}  // namespace

SparseOperator assemble_fdm_laplacian(const UniformGrid& grid, std::int64_t size_cap) {
  validate(grid);
  const std::int64_t total = grid.unknowns();
  if (total > size_cap)
    throw ResourceLimitError("assemble_fdm_laplacian: " + std::to_string(total) +
                             " unknowns exceed the cap of " + std::to_string(size_cap));

  const double h = grid.h();
  const double diag = 2.0 * grid.dim / (h * h);
  const double off = -1.0 / (h * h);
  const auto st = strides(grid);

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(total) * (2 * grid.dim + 1));

  std::array<int, 3> idx{1, 1, 1};
  for (std::int64_t row = 0; row < total; ++row) {
    triplets.emplace_back(row, row, diag);
    for (int d = 0; d < grid.dim; ++d) {
      if (idx[d] > 1) triplets.emplace_back(row, row - st[d], off);
      if (idx[d] < grid.n) triplets.emplace_back(row, row + st[d], off);
    }
    for (int d = grid.dim - 1; d >= 0; --d) {
      if (++idx[d] <= grid.n) break;
      idx[d] = 1;
    }
  }

  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix(total, total);
  matrix.setFromTriplets(triplets.begin(), triplets.end());
  matrix.makeCompressed();

  // Gershgorin: every disc lies in the right half line, so the symmetric
  // matrix is positive semidefinite; boundary rows push it to definite.
  for (std::int64_t row = 0; row < total; ++row) {
    double d = 0, offsum = 0;
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(matrix, row); it;
         ++it) {
      if (it.col() == row)
        d = it.value();
      else
        offsum += std::abs(it.value());
    }
    if (!(d > 0) || d < offsum - 1e-12 * d)
      throw Error("assemble_fdm_laplacian: Gershgorin positivity check failed");
  }

  const auto ext = extreme_eigenvalues(grid);
  return SparseOperator(std::move(matrix), grid, ext.lambda1, ext.lambdaN);
}

ExtremeEigenvalues extreme_eigenvalues(const UniformGrid& grid) {
  validate(grid);
  const double h = grid.h();
  const double s1 = std::sin(M_PI * h / 2);
  const double sn = std::sin(grid.n * M_PI * h / 2);
  ExtremeEigenvalues ext;
  ext.lambda1 = grid.dim * 4.0 / (h * h) * s1 * s1;
  ext.lambdaN = grid.dim * 4.0 / (h * h) * sn * sn;
  ext.normalization = ext.lambda1;
  ext.delta = ext.lambda1 / ext.lambdaN;
  return ext;
}

SpectralOracle::SpectralOracle(UniformGrid grid, std::int64_t size_cap) : grid_(grid) {
  validate(grid);
  if (grid.unknowns() > size_cap)
    throw ResourceLimitError("spectral oracle: " + std::to_string(grid.unknowns()) +
                             " unknowns exceed the cap of " + std::to_string(size_cap));
  const int n = grid.n;
  const double h = grid.h();
  const double scale = std::sqrt(2.0 * h);
  sine_.resize(n, n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) sine_(i - 1, j - 1) = scale * std::sin(i * j * M_PI * h);
  eigen1d_.resize(n);
  for (int j = 1; j <= n; ++j) {
    const double s = std::sin(j * M_PI * h / 2);
    eigen1d_[j - 1] = 4.0 / (h * h) * s * s;
  }
}

double SpectralOracle::eigenvalue(const std::array<int, 3>& j) const {
  double lambda = 0;
  for (int d = 0; d < grid_.dim; ++d) {
    if (j[d] < 1 || j[d] > grid_.n) throw Error("spectral oracle: eigenvalue index out of range");
    lambda += eigen1d_[j[d] - 1];
  }
  return lambda;
}

Eigen::VectorXd SpectralOracle::eigenvector(const std::array<int, 3>& j) const {
  const int n = grid_.n;
  for (int d = 0; d < grid_.dim; ++d)
    if (j[d] < 1 || j[d] > n) throw Error("spectral oracle: eigenvector index out of range");
  Eigen::VectorXd psi = sine_.col(j[0] - 1);
  for (int d = 1; d < grid_.dim; ++d) {
    const Eigen::VectorXd& factor = sine_.col(j[d] - 1);
    Eigen::VectorXd next(psi.size() * n);
    for (Eigen::Index a = 0; a < psi.size(); ++a)
      next.segment(a * n, n) = psi[a] * factor;
    psi = std::move(next);
  }
  return psi;
}

Eigen::VectorXd SpectralOracle::apply_power(double exponent, const Eigen::VectorXd& f) const {
  const int n = grid_.n;
  if (f.size() != grid_.unknowns()) throw Error("spectral oracle: vector size mismatch");

  if (grid_.dim == 1) {
    Eigen::VectorXd coeff = sine_ * f;
    for (int j = 0; j < n; ++j) coeff[j] *= std::pow(eigen1d_[j], exponent);
    return sine_ * coeff;
  }

  if (grid_.dim == 2) {
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> F(
        f.data(), n, n);
    Eigen::MatrixXd coeff = sine_ * F * sine_;
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = 0; j2 < n; ++j2)
        coeff(j1, j2) *= std::pow(eigen1d_[j1] + eigen1d_[j2], exponent);
    Eigen::MatrixXd u = sine_ * coeff * sine_;
    Eigen::VectorXd out(f.size());
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        out.data(), n, n) = u;
    return out;
  }

  // dim == 3: contract the sine transform over each axis in turn on the
  // row-major flattening (i1 slowest, i3 fastest).
  const std::int64_t n2 = std::int64_t(n) * n;
  Eigen::VectorXd work = f;
  // axis 3 (fastest): each contiguous block of n is one line
  for (std::int64_t block = 0; block < n2; ++block)
    work.segment(block * n, n) = sine_ * work.segment(block * n, n);
  // axis 2: lines with stride n within each i1-slab
  for (int i1 = 0; i1 < n; ++i1) {
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> slab(
        work.data() + std::int64_t(i1) * n2, n, n);
    slab = (sine_ * slab).eval();
  }
  // axis 1: lines with stride n^2
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> planes(
      work.data(), n, n2);
  planes = (sine_ * planes).eval();

  std::int64_t idx = 0;
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = 0; j2 < n; ++j2)
      for (int j3 = 0; j3 < n; ++j3, ++idx)
        work[idx] *= std::pow(eigen1d_[j1] + eigen1d_[j2] + eigen1d_[j3], exponent);

  for (std::int64_t block = 0; block < n2; ++block)
    work.segment(block * n, n) = sine_ * work.segment(block * n, n);
  for (int i1 = 0; i1 < n; ++i1) {
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> slab(
        work.data() + std::int64_t(i1) * n2, n, n);
    slab = (sine_ * slab).eval();
  }
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> planes2(
      work.data(), n, n2);
  planes2 = (sine_ * planes2).eval();
  return work;
}

}  // namespace bura
