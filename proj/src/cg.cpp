#include <bura/cg.hpp>

#include <cmath>

namespace bura {

void validate(const CgConfig& cfg) {
  if (!(cfg.tolerance > 0 && cfg.tolerance < 1)) throw Error("cg: tolerance must lie in (0,1)");
  if (cfg.max_iterations < 1) throw Error("cg: max_iterations must be positive");
}

double shift_condition(double lambda1, double lambdaN, double shift) {
  if (!(lambda1 > 0)) throw Error("shift_condition: lambda1 must be positive");
  if (shift > 0) throw Error("shift_condition: shift must be <= 0");
  return (lambdaN - shift) / (lambda1 - shift);
}

std::pair<Eigen::VectorXd, ShiftSolveReport> shifted_cg(const SparseOperator& A, double shift,
                                                        const Eigen::VectorXd& f,
                                                        const CgConfig& cfg) {
  validate(cfg);
  if (shift > 0) throw Error("shifted_cg: shift must be <= 0 to keep the operator SPD");
  if (f.size() != A.rows()) throw Error("shifted_cg: vector size mismatch");

  ShiftSolveReport report;
  report.shift = shift;
  report.kappa = shift_condition(A.lambda_min(), A.lambda_max(), shift);

  const auto op = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    A.apply(x, y);
    if (shift != 0) y.noalias() -= shift * x;
  };
  const double inv_diag = 1.0 / (A.diagonal_value() - shift);
  const bool jacobi = cfg.precond == Preconditioner::Diagonal;

  const double fnorm = f.norm();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(f.size());
  if (fnorm == 0) {
    report.converged = true;
    return {x, report};
  }

  Eigen::VectorXd r = f;
  Eigen::VectorXd z = jacobi ? (inv_diag * r).eval() : r;
  Eigen::VectorXd p = z;
  Eigen::VectorXd Ap(f.size());
  double rz = r.dot(z);
  double rnorm = r.norm();

  for (; report.iterations < cfg.max_iterations && report.restarts <= 1;) {
    if (rnorm <= cfg.tolerance * fnorm) {
      report.converged = true;
      break;
    }
    op(p, Ap);
    const double pAp = p.dot(Ap);
    if (!(pAp > 0) || !std::isfinite(pAp)) {
      // roundoff broke positivity; restart once from the current iterate
      ++report.restarts;
      op(x, Ap);
      r = f - Ap;
      z = jacobi ? (inv_diag * r).eval() : r;
      p = z;
      rz = r.dot(z);
      rnorm = r.norm();
      continue;
    }
    const double alpha = rz / pAp;
    x.noalias() += alpha * p;
    r.noalias() -= alpha * Ap;
    if (!std::isfinite(r.squaredNorm())) throw Error("shifted_cg: NaN detected, aborting");
    z = jacobi ? (inv_diag * r).eval() : r;
    const double rz_next = r.dot(z);
    const double beta = rz_next / rz;
    rz = rz_next;
    p = z + beta * p;
    rnorm = r.norm();
    ++report.iterations;
  }
  if (rnorm <= cfg.tolerance * fnorm) report.converged = true;

  report.relative_residual = rnorm / fnorm;
  op(x, Ap);
  report.recomputed_residual = (f - Ap).norm() / fnorm;
  return {x, report};
}

}  // namespace bura
