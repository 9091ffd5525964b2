#pragma once

#include <bura/bura_coefficients.hpp>
#include <bura/cg.hpp>
#include <bura/operators.hpp>

#include <string>
#include <vector>

namespace bura {

/// Discrete solution of A^{-alpha} f assembled from shifted solves, with the
/// per-shift convergence reports and the provenance of the coefficients.
struct FractionalSolveResult {
  Eigen::VectorXd u;
  std::vector<ShiftSolveReport> reports;
  double wall_seconds = 0;
  std::string method;  // "BURA" or "RS-BURA"
  double alpha = 0;
  int k = 0;
  int kprime = 0;  // equals k for the unreduced method
  double lambda1 = 1;
};

/// u = c0 f + sum_i c_i (A - dtilde_i I)^{-1} f. The shifted solves are
/// independent and may run concurrently; the final accumulation is
/// sequential in ascending i regardless of the thread count. A failed shift
/// solve raises an error naming the term.
FractionalSolveResult solve_bura(const SparseOperator& A, const BuraCoefficients<double>& coeffs,
                                 const Eigen::VectorXd& f, const CgConfig& cfg = {},
                                 int threads = 1);

/// Reduced-sum variant: u = [c0 - sum_folded c_i/dtilde_i] f + k' solves.
FractionalSolveResult solve_rsbura(const SparseOperator& A, const ReducedBura<double>& reduced,
                                   const Eigen::VectorXd& f, const CgConfig& cfg = {},
                                   int threads = 1);

/// The certified accuracy statement an error report checks against:
/// a named bound value plus the inexact-solve slack.
struct BoundSpec {
  std::string source;  // human-readable provenance of the bound
  double value = 0;
  double slack = 0;
};

/// Relative-error certificate: pass iff ||u_ref - u|| / ||f|| <= bound + slack.
struct ErrorReport {
  double relative_error = 0;
  double bound = 0;
  double slack = 0;
  bool pass = false;
  std::string bound_source;
};

/// Slack term k * cg_tolerance * max_i c_i / (lambda1 - dtilde_i) accounting
/// for inexact inner solves in the accumulated bound check.
double accumulation_slack(const BuraCoefficients<double>& coeffs, double cg_tolerance);
double accumulation_slack(const ReducedBura<double>& reduced, double cg_tolerance);

/// Compares the solve against a reference solution (normally the spectral
/// oracle's A^{-alpha} f) at the stated bound.
ErrorReport certify(const Eigen::VectorXd& u_ref, const FractionalSolveResult& result,
                    const Eigen::VectorXd& f, const BoundSpec& bound);

}  // namespace bura
