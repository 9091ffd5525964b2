#include <bura/fractional_solver.hpp>

#include <bura/parallel.hpp>

#include <chrono>

namespace bura {

namespace {

FractionalSolveResult assemble_from_shifts(const SparseOperator& A, const Eigen::VectorXd& f,
                                           const CgConfig& cfg, int threads, double c0,
                                           const Vector<double>& c, const Vector<double>& dtilde,
                                           FractionalSolveResult result) {
  const auto start = std::chrono::steady_clock::now();
  const int terms = static_cast<int>(c.size());
  std::vector<Eigen::VectorXd> solutions(terms);
  result.reports.resize(terms);

  parallel_for(0, terms, threads, [&](long i) {
    auto [x, report] = shifted_cg(A, dtilde[i], f, cfg);
    solutions[i] = std::move(x);
    result.reports[i] = report;
  });

  for (int i = 0; i < terms; ++i)
    if (!result.reports[i].converged)
      throw Error(result.method + ": shift solve " + std::to_string(i + 1) + " (dtilde = " +
                  std::to_string(dtilde[i]) + ") failed to converge in " +
                  std::to_string(result.reports[i].iterations) + " iterations");

  result.u = c0 * f;
  for (int i = 0; i < terms; ++i) result.u.noalias() += c[i] * solutions[i];
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

FractionalSolveResult solve_bura(const SparseOperator& A, const BuraCoefficients<double>& coeffs,
                                 const Eigen::VectorXd& f, const CgConfig& cfg, int threads) {
  FractionalSolveResult result;
  result.method = "BURA";
  result.alpha = coeffs.alpha;
  result.k = coeffs.k;
  result.kprime = coeffs.k;
  result.lambda1 = coeffs.lambda1;
  return assemble_from_shifts(A, f, cfg, threads, coeffs.c0, coeffs.c, coeffs.dtilde,
                              std::move(result));
}

FractionalSolveResult solve_rsbura(const SparseOperator& A, const ReducedBura<double>& reduced,
                                   const Eigen::VectorXd& f, const CgConfig& cfg, int threads) {
  FractionalSolveResult result;
  result.method = "RS-BURA";
  result.alpha = reduced.alpha;
  result.k = reduced.k;
  result.kprime = reduced.kprime;
  result.lambda1 = reduced.lambda1;
  return assemble_from_shifts(A, f, cfg, threads, reduced.c0_reduced, reduced.c, reduced.dtilde,
                              std::move(result));
}

namespace {

double slack_impl(const Vector<double>& c, const Vector<double>& dtilde, int k, double lambda1,
                  double cg_tolerance) {
  double amplification = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    amplification = std::max(amplification, c[i] / (lambda1 - dtilde[i]));
  return k * cg_tolerance * amplification;
}

}  // namespace

double accumulation_slack(const BuraCoefficients<double>& coeffs, double cg_tolerance) {
  return slack_impl(coeffs.c, coeffs.dtilde, coeffs.k, coeffs.lambda1, cg_tolerance);
}

double accumulation_slack(const ReducedBura<double>& reduced, double cg_tolerance) {
  return slack_impl(reduced.c, reduced.dtilde, reduced.k, reduced.lambda1, cg_tolerance);
}

ErrorReport certify(const Eigen::VectorXd& u_ref, const FractionalSolveResult& result,
                    const Eigen::VectorXd& f, const BoundSpec& bound) {
  if (u_ref.size() != result.u.size() || f.size() != result.u.size())
    throw Error("certify: vector size mismatch");
  ErrorReport report;
  const double fnorm = f.norm();
  report.relative_error = fnorm == 0 ? 0.0 : (u_ref - result.u).norm() / fnorm;
  report.bound = bound.value;
  report.slack = bound.slack;
  report.bound_source = bound.source;
  report.pass = report.relative_error <= bound.value + bound.slack;
  return report;
}

}  // namespace bura
