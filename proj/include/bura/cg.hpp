#pragma once

#include <bura/operators.hpp>

#include <Eigen/Dense>

namespace bura {

enum class Preconditioner { None, Diagonal };

struct CgConfig {
  double tolerance = 1e-12;  // relative recursive residual
  int max_iterations = 100000;
  Preconditioner precond = Preconditioner::None;
};

void validate(const CgConfig& cfg);

/// Outcome of one shifted solve. `relative_residual` is the recursive CG
/// residual at exit (the convergence criterion); `recomputed_residual` is
/// ||f - (A - shift I) x|| / ||f|| evaluated from scratch, which stalls at
/// the roundoff floor of the accumulation and is reported for honesty.
struct ShiftSolveReport {
  double shift = 0;
  int iterations = 0;
  double relative_residual = 0;
  double recomputed_residual = 0;
  double kappa = 0;  // analytic condition number of A - shift I
  bool converged = false;
  int restarts = 0;
};

/// Condition number (lambdaN - shift) / (lambda1 - shift) of the shifted
/// operator; monotonically decreasing in |shift| for shift <= 0.
double shift_condition(double lambda1, double lambdaN, double shift);

/// Conjugate gradients on (A - shift I) x = f for shift <= 0. The shifted
/// operator is applied as matvec plus axpy and never materialized. On
/// breakdown of the CG scalars the iteration restarts once from the current
/// iterate before reporting failure; iteration-limit exhaustion returns the
/// best iterate with converged = false.
std::pair<Eigen::VectorXd, ShiftSolveReport> shifted_cg(const SparseOperator& A, double shift,
                                                        const Eigen::VectorXd& f,
                                                        const CgConfig& cfg = {});

}  // namespace bura
