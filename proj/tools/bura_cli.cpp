// Command-line driver for the BURA toolkit: minimax approximation of
// t^alpha, solver coefficient generation, the minimal-degree and
// coefficient-magnitude tables, reduced-sum error curves, and end-to-end
// fractional solves with certification.

#include <bura/experiments.hpp>
#include <bura/serialization.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

std::vector<double> split_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<int> split_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

struct CommonOpts {
  unsigned precision = 16;
  int threads = 1;
  std::string cache_dir = "bura_cache";

  void attach(CLI::App* cmd) {
    cmd->add_option("--precision", precision, "working precision in decimal digits (<=16: double)");
    cmd->add_option("--threads", threads, "thread budget (0 = hardware)");
    cmd->add_option("--cache-dir", cache_dir, "directory for cached minimax elements");
  }

  bura::ExperimentContext context() const {
    bura::ExperimentContext ctx;
    ctx.precision = precision;
    ctx.threads = threads;
    ctx.cache_dir = cache_dir;
    return ctx;
  }
};

int cmd_approx(double alpha, int k, const CommonOpts& common, double tol, int max_iter,
               double cluster_q, const std::string& out, const std::string& pf_out) {
  auto ctx = common.context();
  ctx.minimax.tolerance = tol;
  ctx.minimax.max_iterations = max_iter;
  ctx.minimax.cluster_exponent = cluster_q;
  const auto summary = bura::minimax_summary(alpha, k, ctx);
  std::cout << "alpha=" << summary.alpha << " k=" << summary.k
            << " precision=" << summary.precision << "\n"
            << "converged=" << (summary.converged ? "yes" : "no")
            << " iterations=" << summary.iterations << " deviation=" << summary.deviation << "\n"
            << "E=" << summary.sup_error << " argmax=" << summary.argmax << "\n";
  if (!out.empty() || !pf_out.empty()) {
    const unsigned digits = bura::coefficient_digits(common.precision, k);
    bura::PrecisionGuard guard(digits);
    bura::ExperimentContext mp_ctx = ctx;
    mp_ctx.precision = digits;
    bura::ApproximationTarget<bura::MpFloat> target{bura::MpFloat(alpha), 0, 1, digits};
    auto res = bura::minimax_rational(target, k, mp_ctx.minimax);
    if (!out.empty()) {
      bura::save_barycentric(out, res.rational, target.alpha, digits);
      std::cout << "barycentric form written to " << out << "\n";
    }
    if (!pf_out.empty()) {
      auto pf = bura::pole_residues(res.rational);
      auto stream = bura::detail::open_output(pf_out);
      bura::write_partial_fraction(stream, pf, target.alpha, digits);
      std::cout << "partial fractions written to " << pf_out << "\n";
    }
  }
  return summary.converged ? 0 : 1;
}

int cmd_coeffs(double alpha, int k, double lambda1, const CommonOpts& common,
               const std::string& out, const std::string& study_list,
               const std::string& study_out) {
  auto ctx = common.context();
  if (!study_list.empty()) {
    const auto ks = split_ints(study_list);
    const auto studies = bura::coefficient_study(alpha, ks, ctx);
    if (!study_out.empty()) bura::write_coefficient_study_csv(study_out, studies);
    double prev = 0;
    bool growing = true;
    for (const auto& study : studies) {
      std::cout << "k=" << study.k << " dtilde_1=" << study.dtilde1
                << (study.diagnostics.all_hold() ? "  [sign/monotonicity ok]"
                                                 : "  [diagnostics flagged]") << "\n";
      for (const auto& note : study.diagnostics.notes) std::cout << "    note: " << note << "\n";
      if (std::abs(study.dtilde1) <= prev) growing = false;
      prev = std::abs(study.dtilde1);
    }
    std::cout << "|dtilde_1| strictly increasing across ks: " << (growing ? "yes" : "no") << "\n";
    return 0;
  }
  const auto coeffs = bura::compute_coefficients(alpha, k, lambda1, ctx);
  const unsigned digits = bura::coefficient_digits(common.precision, k);
  bura::save_coefficients(out, coeffs, digits);
  const auto diag = bura::check_coefficients(coeffs);
  std::cout << "coefficients for alpha=" << alpha << " k=" << k << " lambda1=" << lambda1
            << " written to " << out << "\n";
  std::cout << "sign/monotonicity diagnostics: " << (diag.all_hold() ? "ok" : "flagged") << "\n";
  for (const auto& note : diag.notes) std::cout << "  note: " << note << "\n";
  return 0;
}

int cmd_table1(const std::string& alphas_csv, const std::string& accuracies_csv,
               const CommonOpts& common, double tol, const std::string& out) {
  auto ctx = common.context();
  ctx.minimax.tolerance = tol;
  const auto alphas = split_doubles(alphas_csv);
  const auto accuracies = split_doubles(accuracies_csv);
  const auto table = bura::table_min_degree(alphas, accuracies, ctx);
  if (!out.empty()) bura::write_table_csv(out, table);
  std::cout << "accuracy";
  for (double a : table.alphas) std::cout << "\talpha=" << a;
  std::cout << "\n";
  for (std::size_t row = 0; row < table.accuracies.size(); ++row) {
    std::cout << table.accuracies[row];
    for (const auto& e : table.entries[row]) {
      if (e.hole)
        std::cout << "\t(hole)";
      else
        std::cout << "\t" << e.k;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_figure1(double alpha, int k, int kprime, const std::string& deltas_csv, int samples,
                const CommonOpts& common, const std::string& out_dir) {
  auto ctx = common.context();
  const auto deltas = split_doubles(deltas_csv);
  const auto summaries =
      bura::figure_error_curves(alpha, k, kprime, deltas, samples, ctx, out_dir);
  std::cout << "delta\tE\tEtilde\tgap_bound\tpredicted_order\n";
  for (const auto& s : summaries)
    std::cout << s.delta << "\t" << s.E << "\t" << s.Etilde << "\t" << s.gap_bound << "\t"
              << s.predicted_order << "\n";
  std::cout << "CSV curves written under " << out_dir << "\n";
  return 0;
}

int cmd_suggest(double alpha, int k, double delta, long target_order, bool have_target,
                const std::string& coeffs_file, const CommonOpts& common) {
  auto ctx = common.context();
  bura::PrecisionGuard guard(bura::coefficient_digits(common.precision, k));
  bura::BuraCoefficients<bura::MpFloat> coeffs;
  if (!coeffs_file.empty()) {
    auto file = bura::load_coefficients<bura::MpFloat>(coeffs_file);
    coeffs = std::move(file.coefficients);
  } else {
    coeffs = bura::compute_coefficients(alpha, k, 1.0, ctx);
  }
  if (!have_target) {
    const auto summary = bura::minimax_summary(alpha, k, ctx);
    target_order = bura::order_of_magnitude(summary.sup_error);
    std::cout << "target order = ord(E) = " << target_order << "\n";
  }
  const int kprime = bura::suggest_kprime(coeffs, bura::MpFloat(delta), target_order);
  std::cout << "suggested kprime = " << kprime << "\n";
  if (kprime < coeffs.k)
    std::cout << "predicted gap order at kprime: "
              << bura::predicted_gap_order(coeffs, kprime, bura::MpFloat(delta)) << "\n";
  return 0;
}

int cmd_solve(const std::string& config_path, const CommonOpts& common, bool have_precision,
              int threads_override, const std::string& out_override) {
  bura::RunConfig cfg = bura::parse_run_config(config_path);
  if (have_precision) cfg.precision = common.precision;
  if (threads_override > 0) cfg.threads = threads_override;
  if (!out_override.empty()) cfg.out_dir = out_override;
  const auto artifacts = bura::run_solve(cfg);
  std::cout << artifacts.solve.method << ": relative error "
            << artifacts.certificate.relative_error << " vs bound " << artifacts.certificate.bound
            << " + slack " << artifacts.certificate.slack << " -> "
            << (artifacts.passed ? "PASS" : "FAIL") << "\n"
            << "reports: " << artifacts.report_csv << ", " << artifacts.certificate_csv << "\n";
  return artifacts.passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BURA fractional diffusion toolkit"};
  app.require_subcommand(1);

  // approx
  auto* approx = app.add_subcommand("approx", "compute the minimax element of t^alpha");
  double alpha = 0.25;
  int k = 7;
  double tol = 1e-3, cluster_q = 0;
  int max_iter = 1000;
  std::string out, pf_out;
  CommonOpts approx_common;
  approx->add_option("--alpha", alpha, "exponent in (0,1)")->required();
  approx->add_option("--k", k, "rational degree")->required();
  approx->add_option("--tol", tol, "relative local-error deviation tolerance");
  approx->add_option("--max-iter", max_iter, "iteration cap");
  approx->add_option("--q", cluster_q, "initial clustering exponent (0 = automatic)");
  approx->add_option("--out", out, "write the barycentric form here");
  approx->add_option("--export-pf", pf_out, "write the partial-fraction form here");
  approx_common.attach(approx);

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "solver coefficients and coefficient studies");
  double c_alpha = 0.25, c_lambda1 = 1.0;
  int c_k = 7;
  std::string c_out = "coefficients.txt", study_list, study_out;
  CommonOpts coeffs_common;
  coeffs->add_option("--alpha", c_alpha, "exponent in (0,1)")->required();
  coeffs->add_option("--k", c_k, "rational degree");
  coeffs->add_option("--lambda1", c_lambda1, "spectral scaling lambda_1 (>= 1)");
  coeffs->add_option("--out", c_out, "coefficient file path");
  coeffs->add_option("--study", study_list, "comma-separated degrees for a coefficient study");
  coeffs->add_option("--study-out", study_out, "CSV path for the study rows");
  coeffs_common.attach(coeffs);

  // table1
  auto* table1 = app.add_subcommand("table1", "minimal degree for each (alpha, accuracy)");
  std::string alphas_csv = "0.25,0.50,0.75,0.80,0.90";
  std::string accuracies_csv = "1e-3,1e-4,1e-5,1e-6,1e-7,1e-8";
  double t_tol = 1e-3;
  std::string t_out = "table1.csv";
  CommonOpts table_common;
  table1->add_option("--alphas", alphas_csv, "comma-separated exponents");
  table1->add_option("--accuracies", accuracies_csv, "comma-separated accuracies, decreasing");
  table1->add_option("--tol", t_tol, "minimax deviation tolerance");
  table1->add_option("--out", t_out, "CSV output path");
  table_common.attach(table1);

  // figure1
  auto* figure1 = app.add_subcommand("figure1", "BURA vs RS-BURA error curves");
  double f_alpha = 0.25;
  int f_k = 85, f_kprime = 46, f_samples = 2000;
  std::string deltas_csv = "1e-6,1e-7,1e-8,1e-9";
  std::string f_out = "figure1";
  CommonOpts figure_common;
  figure1->add_option("--alpha", f_alpha, "exponent in (0,1)");
  figure1->add_option("--k", f_k, "full degree");
  figure1->add_option("--kprime", f_kprime, "retained terms");
  figure1->add_option("--deltas", deltas_csv, "comma-separated deltas");
  figure1->add_option("--samples", f_samples, "grid points per curve");
  figure1->add_option("--out", f_out, "output directory");
  figure_common.attach(figure1);

  // suggest-kprime
  auto* suggest = app.add_subcommand("suggest-kprime", "minimal k' from the order heuristic");
  double s_alpha = 0.25, s_delta = 1e-9;
  int s_k = 85;
  long s_target = 0;
  std::string s_coeffs;
  CommonOpts suggest_common;
  suggest->add_option("--alpha", s_alpha, "exponent in (0,1)");
  suggest->add_option("--k", s_k, "full degree");
  suggest->add_option("--delta", s_delta, "spectral gap parameter")->required();
  auto* target_opt =
      suggest->add_option("--target-order", s_target, "target order (default: ord(E))");
  suggest->add_option("--coeffs", s_coeffs, "load coefficients from file instead of computing");
  suggest_common.attach(suggest);

  // solve
  auto* solve = app.add_subcommand("solve", "end-to-end certified fractional solve");
  std::string config_path;
  std::string solve_out;
  CommonOpts solve_common;
  solve->add_option("--config", config_path, "JSON run configuration")->required();
  solve->add_option("--out", solve_out, "override the output directory");
  solve_common.attach(solve);

  CLI11_PARSE(app, argc, argv);

  try {
    if (approx->parsed())
      return cmd_approx(alpha, k, approx_common, tol, max_iter, cluster_q, out, pf_out);
    if (coeffs->parsed())
      return cmd_coeffs(c_alpha, c_k, c_lambda1, coeffs_common, c_out, study_list, study_out);
    if (table1->parsed())
      return cmd_table1(alphas_csv, accuracies_csv, table_common, t_tol, t_out);
    if (figure1->parsed())
      return cmd_figure1(f_alpha, f_k, f_kprime, deltas_csv, f_samples, figure_common, f_out);
    if (suggest->parsed())
      return cmd_suggest(s_alpha, s_k, s_delta, s_target, target_opt->count() > 0, s_coeffs,
                         suggest_common);
    if (solve->parsed())
      return cmd_solve(config_path, solve_common, solve->count("--precision") > 0,
                       solve->count("--threads") > 0 ? solve_common.threads : 0, solve_out);
  } catch (const bura::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
