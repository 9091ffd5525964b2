#pragma once

#include <bura/brasil.hpp>
#include <bura/bura_coefficients.hpp>
#include <bura/cg.hpp>
#include <bura/fractional_solver.hpp>
#include <bura/operators.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bura {

/// Shared settings for the reproduction experiments: working precision in
/// decimal digits (<= 16 selects the double path), thread budget for the
/// parallelizable stages, the minimax iteration controls, the sup-norm
/// sampling plan, and the on-disk cache for converged minimax elements.
struct ExperimentContext {
  unsigned precision = 16;
  int threads = 1;
  std::filesystem::path cache_dir = "bura_cache";
  bool use_cache = true;
  IterationOptions minimax;
  SamplingPlan sampling;
};

/// Precision policy for derived coefficient work: at least 30 digits always,
/// at least 60 when k exceeds 30 (pole magnitudes outgrow double-derived
/// accuracy), never less than the requested working precision.
unsigned coefficient_digits(unsigned requested, int k);

/// Double-precision digest of a minimax run.
struct MinimaxSummary {
  double alpha = 0;
  int k = 0;
  unsigned precision = 16;
  bool converged = false;
  int iterations = 0;
  double deviation = 0;
  double sup_error = 0;
  double argmax = 0;
};

/// Computes (or loads from the cache) the minimax element for t^alpha and
/// reports its certified sup error.
MinimaxSummary minimax_summary(double alpha, int k, ExperimentContext& ctx);

/// Full-precision coefficient pipeline for downstream scalar work:
/// minimax element -> partial fractions -> Eq. (7) coefficients at the
/// given lambda1, run at coefficient_digits() precision.
BuraCoefficients<MpFloat> compute_coefficients(double alpha, int k, double lambda1,
                                               ExperimentContext& ctx);

/// Closed-form accuracy estimate 4^(alpha+1) sin(alpha pi) e^{-2 pi sqrt(alpha k)}
/// (the lambda1 = 1 form).
double asymptotic_estimate(double alpha, int k);

// ---- minimal-degree table ----

struct TableEntry {
  double alpha = 0;
  double accuracy = 0;
  int k = 0;            // minimal degree with E_{alpha,k} <= accuracy
  bool hole = false;    // non-convergence made the boundary undecidable
  double measured = 0;  // E at the reported k
};

struct MinDegreeTable {
  std::vector<double> alphas;
  std::vector<double> accuracies;
  std::vector<std::vector<TableEntry>> entries;  // [accuracy][alpha]
};

/// Minimal degree k with certified sup error <= accuracy, for each alpha and
/// accuracy. Degrees are searched incrementally, reusing the converged node
/// set of the nearest computed degree as a warm start. Non-convergent
/// boundaries are recorded as holes, never silently skipped.
MinDegreeTable table_min_degree(const std::vector<double>& alphas,
                                const std::vector<double>& accuracies, ExperimentContext& ctx);

void write_table_csv(const std::filesystem::path& path, const MinDegreeTable& table);

// ---- coefficient study ----

struct CoefficientRow {
  int i = 0;
  double dtilde = 0;
  double c = 0;
  double ratio = 0;  // c_i / dtilde_i
};

struct CoefficientStudy {
  double alpha = 0;
  int k = 0;
  unsigned precision = 0;
  std::vector<CoefficientRow> rows;
  CoefficientDiagnostics diagnostics;
  double dtilde1 = 0;
};

/// Dumps (i, dtilde_i, c_i, c_i/dtilde_i) for each requested degree and
/// checks the sign/monotonicity observations; tracks the growth of
/// |dtilde_1| across degrees.
std::vector<CoefficientStudy> coefficient_study(double alpha, const std::vector<int>& ks,
                                                ExperimentContext& ctx);

void write_coefficient_study_csv(const std::filesystem::path& path,
                                 const std::vector<CoefficientStudy>& studies);

// ---- error curves (reduced vs full) ----

struct ErrorCurveSummary {
  double delta = 0;
  int kprime = 0;
  double E = 0;               // sup |t^alpha - r| over [0,1]
  double E_restricted = 0;    // max |z^-alpha - r(z)| over [1, 1/delta]
  double Etilde = 0;          // max |z^-alpha - r_reduced(z)| over [1, 1/delta]
  double gap_bound = 0;       // analytic bound on Etilde - E
  long predicted_order = 0;   // order-of-magnitude heuristic for the gap
};

/// Emits, for each delta, rows (z, r(z)-z^-alpha, r_reduced(z)-z^-alpha) on a
/// log grid over (1, 1/delta] into `out_dir`, plus a summary per delta.
std::vector<ErrorCurveSummary> figure_error_curves(double alpha, int k, int kprime,
                                                   const std::vector<double>& deltas,
                                                   int samples, ExperimentContext& ctx,
                                                   const std::filesystem::path& out_dir);

// ---- end-to-end solve ----

struct RunConfig {
  double alpha = 0.5;
  int k = 8;
  int kprime = 0;  // 0: plain BURA; -1: choose via the order heuristic; >0: explicit
  UniformGrid grid{1, 255};
  CgConfig cg;
  unsigned precision = 30;
  int threads = 1;
  IterationOptions minimax;
  SamplingPlan sampling;
  std::string f_kind = "random";  // random | eigenvector | csv | binary
  std::uint64_t f_seed = 1;
  std::array<int, 3> f_index{1, 1, 1};
  std::filesystem::path f_path;
  std::filesystem::path out_dir = "results";
  std::string vector_format = "csv";  // csv | binary | none
  std::filesystem::path cache_dir = "bura_cache";
};

RunConfig parse_run_config(const std::filesystem::path& json_path);

struct SolveArtifacts {
  FractionalSolveResult solve;
  ErrorReport certificate;
  std::filesystem::path report_csv;
  std::filesystem::path certificate_csv;
  bool passed = false;
};

/// Pipeline: minimax (or cached coefficients) -> Eq. (7) coefficients at the
/// grid's lambda1 -> optional reduction -> shifted solves -> certification
/// against the spectral oracle -> reports under config.out_dir. Every stage
/// failure surfaces with the stage name.
SolveArtifacts run_solve(const RunConfig& config);

/// CSV rows `i,dtilde_i,kappa,iterations,residual` for the per-shift reports.
void write_shift_reports_csv(const std::filesystem::path& path,
                             const std::vector<ShiftSolveReport>& reports);

}  // namespace bura
