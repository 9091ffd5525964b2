#include <bura/experiments.hpp>

#include <bura/csv.hpp>
#include <bura/serialization.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace bura {

unsigned coefficient_digits(unsigned requested, int k) {
  unsigned digits = std::max(requested, 30u);
  if (k > 30) digits = std::max(digits, 60u);
  return digits;
}

double asymptotic_estimate(double alpha, int k) {
  return static_cast<double>(asymptotic_error_estimate(alpha, k));
}

namespace {

std::string sanitize_number(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  std::string out = s.str();
  for (char& c : out) {
    if (c == '.') c = 'p';
    if (c == '-') c = 'm';
    if (c == '+') c = 'q';
  }
  return out;
}

template <typename Real>
struct MinimaxRun {
  BrasilResult<Real> result;
  SupremumEstimate<Real> error;
};

std::filesystem::path cache_path(const ExperimentContext& ctx, double alpha, int k) {
  std::string name = "minimax_a" + sanitize_number(alpha) + "_k" + std::to_string(k) + "_p" +
                     std::to_string(ctx.precision) + "_t" + sanitize_number(ctx.minimax.tolerance) +
                     ".txt";
  return ctx.cache_dir / name;
}

template <typename Real>
void store_cached_run(const ExperimentContext& ctx, double alpha, int k,
                      const MinimaxRun<Real>& run) {
  if (!ctx.use_cache) return;
  const auto path = cache_path(ctx, alpha, k);
  std::filesystem::create_directories(ctx.cache_dir);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // cache is best-effort
    write_barycentric(out, run.result.rational, Real(alpha), ctx.precision);
    const auto& info = run.result.info;
    out << "iterations " << info.iterations << "\n";
    out << "converged " << (info.converged ? 1 : 0) << "\n";
    out << "deviation " << to_full_string(info.deviation) << "\n";
    out << "grid " << ctx.sampling.grid_points << " " << ctx.sampling.refine_iterations << "\n";
    out << "E " << to_full_string(run.error.value) << "\n";
    out << "argmax " << to_full_string(run.error.argmax) << "\n";
    for (Eigen::Index i = 0; i < info.nodes.size(); ++i)
      out << "node " << i << " " << to_full_string(info.nodes[i]) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

template <typename Real>
std::optional<MinimaxRun<Real>> load_cached_run(const ExperimentContext& ctx, double alpha,
                                                int k) {
  if (!ctx.use_cache) return std::nullopt;
  const auto path = cache_path(ctx, alpha, k);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    MinimaxRun<Real> run;
    auto file = read_barycentric<Real>(in);
    if (file.precision != ctx.precision) return std::nullopt;
    run.result.rational = std::move(file.rational);
    std::string tag, value;
    int grid_points = 0, refine = 0, converged = 0;
    in >> tag >> run.result.info.iterations;
    if (tag != "iterations") return std::nullopt;
    in >> tag >> converged;
    if (tag != "converged") return std::nullopt;
    run.result.info.converged = converged != 0;
    in >> tag >> value;
    if (tag != "deviation") return std::nullopt;
    run.result.info.deviation = parse_real<Real>(value);
    in >> tag >> grid_points >> refine;
    if (tag != "grid" || grid_points != ctx.sampling.grid_points ||
        refine != ctx.sampling.refine_iterations)
      return std::nullopt;
    in >> tag >> value;
    if (tag != "E") return std::nullopt;
    run.error.value = parse_real<Real>(value);
    in >> tag >> value;
    if (tag != "argmax") return std::nullopt;
    run.error.argmax = parse_real<Real>(value);
    run.error.grid_points = grid_points;
    run.result.info.nodes.resize(2 * k + 1);
    for (int i = 0; i < 2 * k + 1; ++i) {
      Eigen::Index idx;
      if (!(in >> tag >> idx >> value) || tag != "node" || idx != i) return std::nullopt;
      run.result.info.nodes[idx] = parse_real<Real>(value);
    }
    return run;
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// Cached minimax computation with an optional warm-start node set.
template <typename Real>
MinimaxRun<Real> computed_minimax(double alpha, int k, ExperimentContext& ctx,
                                  const Vector<Real>& warm_start = {}) {
  if (auto cached = load_cached_run<Real>(ctx, alpha, k)) return *cached;
  MinimaxRun<Real> run;
  ApproximationTarget<Real> target{Real(alpha), Real(0), Real(1), ctx.precision};
  run.result = minimax_rational(target, k, ctx.minimax, warm_start);
  SamplingPlan plan = ctx.sampling;
  plan.threads = ctx.threads;
  run.error = sup_error(run.result.rational, target, plan);
  store_cached_run(ctx, alpha, k, run);
  return run;
}

template <typename Real>
MinimaxSummary summarize(double alpha, int k, const ExperimentContext& ctx,
                         const MinimaxRun<Real>& run) {
  MinimaxSummary s;
  s.alpha = alpha;
  s.k = k;
  s.precision = ctx.precision;
  s.converged = run.result.info.converged;
  s.iterations = run.result.info.iterations;
  s.deviation = static_cast<double>(run.result.info.deviation);
  s.sup_error = static_cast<double>(run.error.value);
  s.argmax = static_cast<double>(run.error.argmax);
  return s;
}

bool use_double_path(const ExperimentContext& ctx) { return ctx.precision <= 16; }

}  // namespace

MinimaxSummary minimax_summary(double alpha, int k, ExperimentContext& ctx) {
  if (use_double_path(ctx)) {
    return summarize(alpha, k, ctx, computed_minimax<double>(alpha, k, ctx));
  }
  PrecisionGuard guard(ctx.precision);
  return summarize(alpha, k, ctx, computed_minimax<MpFloat>(alpha, k, ctx));
}

BuraCoefficients<MpFloat> compute_coefficients(double alpha, int k, double lambda1,
                                               ExperimentContext& ctx) {
  const unsigned digits = coefficient_digits(ctx.precision, k);
  ExperimentContext mp_ctx = ctx;
  mp_ctx.precision = digits;
  PrecisionGuard guard(digits);
  auto run = computed_minimax<MpFloat>(alpha, k, mp_ctx);
  auto pf = pole_residues(run.result.rational);
  return to_bura_coefficients(pf, MpFloat(alpha), MpFloat(lambda1));
}

// ---- minimal-degree table ----

namespace {

int degree_estimate(double alpha, double accuracy) {
  const double c = std::pow(4.0, alpha + 1) * std::sin(alpha * M_PI);
  if (accuracy >= c) return 1;
  const double l = std::log(c / accuracy);
  const int k = static_cast<int>(std::lround(l * l / (4 * M_PI * M_PI * alpha)));
  return std::max(k, 1);
}

template <typename Real>
class DegreeSearch {
 public:
  DegreeSearch(double alpha, ExperimentContext& ctx) : alpha_(alpha), ctx_(ctx) {}

  const MinimaxRun<Real>& run(int k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    Vector<Real> warm = warm_start_for(k);
    auto inserted = memo_.emplace(k, computed_minimax<Real>(alpha_, k, ctx_, warm));
    return inserted.first->second;
  }

  double error(int k) { return static_cast<double>(run(k).error.value); }
  bool converged(int k) { return run(k).result.info.converged; }

 private:
  Vector<Real> warm_start_for(int k) const {
    int best = 0, best_dist = 7;  // resample only from nearby degrees
    for (const auto& [kk, rr] : memo_) {
      if (!rr.result.info.converged) continue;
      const int dist = std::abs(kk - k);
      if (dist < best_dist) {
        best = kk;
        best_dist = dist;
      }
    }
    if (best == 0) return {};
    const auto& nodes = memo_.at(best).result.info.nodes;
    return resample_nodes(nodes, 2 * k + 1, Real(0), Real(1));
  }

  double alpha_;
  ExperimentContext& ctx_;
  std::map<int, MinimaxRun<Real>> memo_;
};

constexpr int kMaxTableDegree = 256;

template <typename Real>
MinDegreeTable table_impl(const std::vector<double>& alphas,
                          const std::vector<double>& accuracies, ExperimentContext& ctx) {
  MinDegreeTable table;
  table.alphas = alphas;
  table.accuracies = accuracies;
  table.entries.assign(accuracies.size(), std::vector<TableEntry>(alphas.size()));

  for (std::size_t a = 0; a < alphas.size(); ++a) {
    DegreeSearch<Real> search(alphas[a], ctx);
    // loosest accuracy first so warm starts climb the degree ladder
    std::vector<std::size_t> order(accuracies.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return accuracies[x] > accuracies[y]; });

    int previous_min = 1;
    for (std::size_t oi : order) {
      const double eps = accuracies[oi];
      TableEntry entry;
      entry.alpha = alphas[a];
      entry.accuracy = eps;
      int k = std::max(previous_min, degree_estimate(alphas[a], eps));
      while (k < kMaxTableDegree && search.error(k) > eps) ++k;
      while (k > previous_min && k > 1 && search.error(k - 1) <= eps) --k;
      entry.k = k;
      entry.measured = search.error(k);
      entry.hole = (k >= kMaxTableDegree) || (entry.measured > eps) ||
                   (k > 1 && !search.converged(k - 1)) || !search.converged(k);
      table.entries[oi][a] = entry;
      if (!entry.hole) previous_min = k;
    }
  }
  return table;
}

}  // namespace

MinDegreeTable table_min_degree(const std::vector<double>& alphas,
                                const std::vector<double>& accuracies, ExperimentContext& ctx) {
  for (std::size_t i = 0; i + 1 < accuracies.size(); ++i)
    if (!(accuracies[i] > accuracies[i + 1]))
      throw Error("table_min_degree: accuracies must be strictly decreasing");
  if (use_double_path(ctx)) return table_impl<double>(alphas, accuracies, ctx);
  PrecisionGuard guard(ctx.precision);
  return table_impl<MpFloat>(alphas, accuracies, ctx);
}

void write_table_csv(const std::filesystem::path& path, const MinDegreeTable& table) {
  std::vector<std::string> header{"accuracy"};
  for (double alpha : table.alphas) {
    std::ostringstream s;
    s << "alpha_" << alpha;
    header.push_back(s.str());
  }
  CsvWriter csv(path, header);
  for (std::size_t row = 0; row < table.accuracies.size(); ++row) {
    csv.field(table.accuracies[row]);
    for (const TableEntry& e : table.entries[row])
      csv.field(e.hole ? std::string("hole") : std::to_string(e.k));
    csv.end_row();
  }
}

// ---- coefficient study ----

std::vector<CoefficientStudy> coefficient_study(double alpha, const std::vector<int>& ks,
                                                ExperimentContext& ctx) {
  std::vector<CoefficientStudy> studies;
  for (int k : ks) {
    auto coeffs = compute_coefficients(alpha, k, 1.0, ctx);
    CoefficientStudy study;
    study.alpha = alpha;
    study.k = k;
    study.precision = coefficient_digits(ctx.precision, k);
    study.diagnostics = check_coefficients(coeffs);
    study.rows.reserve(k);
    for (int i = 0; i < k; ++i)
      study.rows.push_back(CoefficientRow{i + 1, static_cast<double>(coeffs.dtilde[i]),
                                          static_cast<double>(coeffs.c[i]),
                                          static_cast<double>(coeffs.c[i] / coeffs.dtilde[i])});
    study.dtilde1 = static_cast<double>(coeffs.dtilde[0]);
    studies.push_back(std::move(study));
  }
  return studies;
}

void write_coefficient_study_csv(const std::filesystem::path& path,
                                 const std::vector<CoefficientStudy>& studies) {
  CsvWriter csv(path, {"alpha", "k", "i", "dtilde_i", "c_i", "ratio"});
  for (const auto& study : studies)
    for (const auto& row : study.rows) {
      csv.field(study.alpha).field(study.k).field(row.i);
      csv.field(row.dtilde).field(row.c).field(row.ratio);
      csv.end_row();
    }
}

// ---- error curves ----

std::vector<ErrorCurveSummary> figure_error_curves(double alpha, int k, int kprime,
                                                   const std::vector<double>& deltas,
                                                   int samples, ExperimentContext& ctx,
                                                   const std::filesystem::path& out_dir) {
  if (kprime < 1 || kprime > k) throw Error("figure_error_curves: kprime out of range");
  const unsigned digits = coefficient_digits(ctx.precision, k);
  PrecisionGuard guard(digits);
  auto coeffs = compute_coefficients(alpha, k, 1.0, ctx);
  auto reduced = reduce(coeffs, kprime);

  ExperimentContext mp_ctx = ctx;
  mp_ctx.precision = digits;
  auto run = computed_minimax<MpFloat>(alpha, k, mp_ctx);
  const double E = static_cast<double>(run.error.value);

  SamplingPlan plan = ctx.sampling;
  plan.threads = ctx.threads;

  std::vector<ErrorCurveSummary> summaries;
  for (double delta : deltas) {
    const MpFloat mp_alpha(alpha);
    const MpFloat mp_delta(delta);
    ErrorCurveSummary s;
    s.delta = delta;
    s.kprime = kprime;
    s.E = E;
    s.E_restricted =
        static_cast<double>(error_indicator(coeffs, mp_alpha, mp_delta, plan).value);
    s.Etilde = static_cast<double>(error_indicator(reduced, mp_alpha, mp_delta, plan).value);
    if (kprime < k) {
      s.gap_bound = static_cast<double>(error_gap_bound(coeffs, kprime, mp_delta));
      s.predicted_order = predicted_gap_order(coeffs, kprime, mp_delta);
    }
    summaries.push_back(s);

    std::ostringstream name;
    name << "figure1_delta_" << delta << ".csv";
    CsvWriter csv(out_dir / name.str(), {"z", "bura_error", "rsbura_error"});
    const Vector<MpFloat> zs = detail::log_grid(MpFloat(1), 1 / mp_delta, samples);
    for (Eigen::Index i = 0; i < zs.size(); ++i) {
      using std::pow;
      const MpFloat target = pow(zs[i], -mp_alpha);
      csv.field(static_cast<double>(zs[i]));
      csv.field(static_cast<double>(eval_rational(coeffs, zs[i]) - target));
      csv.field(static_cast<double>(eval_rational(reduced, zs[i]) - target));
      csv.end_row();
    }
  }

  CsvWriter csv(out_dir / "figure1_summary.csv",
                {"delta", "kprime", "E", "E_restricted", "Etilde", "gap_bound",
                 "predicted_gap_order"});
  for (const auto& s : summaries) {
    csv.field(s.delta).field(s.kprime).field(s.E).field(s.E_restricted).field(s.Etilde);
    csv.field(s.gap_bound).field(s.predicted_order);
    csv.end_row();
  }
  return summaries;
}

// ---- end-to-end solve ----

RunConfig parse_run_config(const std::filesystem::path& json_path) {
  std::ifstream in(json_path);
  if (!in) throw Error("cannot open config " + json_path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("config parse error in " + json_path.string() + ": " + e.what());
  }

  RunConfig cfg;
  cfg.alpha = j.value("alpha", cfg.alpha);
  cfg.k = j.value("k", cfg.k);
  cfg.kprime = j.value("kprime", cfg.kprime);
  cfg.precision = j.value("precision", cfg.precision);
  cfg.threads = j.value("threads", cfg.threads);
  if (j.contains("grid")) {
    cfg.grid.dim = j["grid"].value("dim", cfg.grid.dim);
    cfg.grid.n = j["grid"].value("n", cfg.grid.n);
  }
  if (j.contains("cg")) {
    cfg.cg.tolerance = j["cg"].value("tolerance", cfg.cg.tolerance);
    cfg.cg.max_iterations = j["cg"].value("max_iterations", cfg.cg.max_iterations);
    const std::string p = j["cg"].value("preconditioner", std::string("none"));
    if (p == "none")
      cfg.cg.precond = Preconditioner::None;
    else if (p == "diagonal")
      cfg.cg.precond = Preconditioner::Diagonal;
    else
      throw Error("config: unknown preconditioner '" + p + "'");
  }
  if (j.contains("minimax")) {
    cfg.minimax.max_iterations = j["minimax"].value("max_iterations", cfg.minimax.max_iterations);
    cfg.minimax.tolerance = j["minimax"].value("tolerance", cfg.minimax.tolerance);
    cfg.minimax.damping = j["minimax"].value("damping", cfg.minimax.damping);
    cfg.minimax.cluster_exponent =
        j["minimax"].value("cluster_exponent", cfg.minimax.cluster_exponent);
  }
  if (j.contains("sampling")) {
    cfg.sampling.grid_points = j["sampling"].value("grid_points", cfg.sampling.grid_points);
    cfg.sampling.refine_iterations =
        j["sampling"].value("refine_iterations", cfg.sampling.refine_iterations);
  }
  if (j.contains("f")) {
    cfg.f_kind = j["f"].value("kind", cfg.f_kind);
    cfg.f_seed = j["f"].value("seed", cfg.f_seed);
    if (j["f"].contains("index")) {
      auto idx = j["f"]["index"].get<std::vector<int>>();
      for (std::size_t d = 0; d < idx.size() && d < 3; ++d) cfg.f_index[d] = idx[d];
    }
    cfg.f_path = j["f"].value("path", std::string());
  }
  cfg.out_dir = j.value("out", cfg.out_dir.string());
  cfg.vector_format = j.value("vector_format", cfg.vector_format);
  cfg.cache_dir = j.value("cache_dir", cfg.cache_dir.string());
  return cfg;
}

void write_shift_reports_csv(const std::filesystem::path& path,
                             const std::vector<ShiftSolveReport>& reports) {
  CsvWriter csv(path, {"i", "dtilde_i", "kappa", "iterations", "residual"});
  for (std::size_t i = 0; i < reports.size(); ++i) {
    csv.field(static_cast<long>(i + 1));
    csv.field(reports[i].shift);
    csv.field(reports[i].kappa);
    csv.field(reports[i].iterations);
    csv.field(reports[i].relative_residual);
    csv.end_row();
  }
}

namespace {

Eigen::VectorXd build_rhs(const RunConfig& cfg, const SpectralOracle& oracle) {
  const auto n = oracle.grid().unknowns();
  if (cfg.f_kind == "random") {
    std::mt19937_64 rng(cfg.f_seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd f(n);
    for (Eigen::Index i = 0; i < n; ++i) f[i] = dist(rng);
    return f;
  }
  if (cfg.f_kind == "eigenvector") return oracle.eigenvector(cfg.f_index);
  if (cfg.f_kind == "csv") return load_vector_csv(cfg.f_path);
  if (cfg.f_kind == "binary") return load_vector_binary(cfg.f_path);
  throw Error("config: unknown f kind '" + cfg.f_kind + "'");
}

}  // namespace

SolveArtifacts run_solve(const RunConfig& config) {
  ExperimentContext ctx;
  ctx.precision = config.precision;
  ctx.threads = config.threads;
  ctx.cache_dir = config.cache_dir;
  ctx.minimax = config.minimax;
  ctx.sampling = config.sampling;

  auto stage = [](const std::string& name, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      throw Error("stage '" + name + "': " + e.what());
    }
  };

  const auto A = stage("assemble operator", [&] { return assemble_fdm_laplacian(config.grid); });
  const auto oracle = stage("spectral oracle", [&] { return SpectralOracle(config.grid); });
  const auto ext = extreme_eigenvalues(config.grid);

  const MinimaxSummary mm =
      stage("minimax", [&] { return minimax_summary(config.alpha, config.k, ctx); });
  auto coeffs_mp = stage("coefficients", [&] {
    return compute_coefficients(config.alpha, config.k, ext.lambda1, ctx);
  });
  const auto coeffs = to_double(coeffs_mp);

  int kprime = config.kprime == 0 ? config.k : config.kprime;
  if (config.kprime < 0) {
    // normalized coefficients drive the order heuristic
    auto normalized = stage("coefficients (normalized)", [&] {
      return compute_coefficients(config.alpha, config.k, 1.0, ctx);
    });
    PrecisionGuard guard(coefficient_digits(ctx.precision, config.k));
    kprime = suggest_kprime(normalized, MpFloat(ext.delta), order_of_magnitude(mm.sup_error));
  }

  const Eigen::VectorXd f = stage("right-hand side", [&] { return build_rhs(config, oracle); });
  const Eigen::VectorXd u_ref =
      stage("reference solution", [&] { return oracle.apply_power(-config.alpha, f); });

  SolveArtifacts artifacts;
  BoundSpec bound;
  if (kprime < config.k) {
    auto reduced_mp = reduce(coeffs_mp, kprime);
    const auto reduced = to_double(reduced_mp);
    artifacts.solve = stage("rs-bura solve",
                            [&] { return solve_rsbura(A, reduced, f, config.cg, config.threads); });
    auto normalized = stage("coefficients (normalized)", [&] {
      return compute_coefficients(config.alpha, config.k, 1.0, ctx);
    });
    PrecisionGuard guard(coefficient_digits(ctx.precision, config.k));
    auto reduced_norm = reduce(normalized, kprime);
    SamplingPlan plan = config.sampling;
    plan.threads = config.threads;
    const double etilde = static_cast<double>(
        error_indicator(reduced_norm, MpFloat(config.alpha), MpFloat(ext.delta), plan).value);
    bound.source = "Etilde(delta) indicator over [1,1/delta]";
    bound.value = etilde;
    bound.slack = accumulation_slack(reduced, config.cg.tolerance);
  } else {
    artifacts.solve = stage("bura solve",
                            [&] { return solve_bura(A, coeffs, f, config.cg, config.threads); });
    bound.source = "lambda1^-alpha * E(alpha,k)";
    bound.value = std::pow(ext.lambda1, -config.alpha) * mm.sup_error;
    bound.slack = accumulation_slack(coeffs, config.cg.tolerance);
  }

  artifacts.certificate = certify(u_ref, artifacts.solve, f, bound);
  artifacts.passed = artifacts.certificate.pass;

  // reports
  std::filesystem::create_directories(config.out_dir);
  artifacts.report_csv = config.out_dir / "shift_reports.csv";
  write_shift_reports_csv(artifacts.report_csv, artifacts.solve.reports);

  artifacts.certificate_csv = config.out_dir / "certificate.csv";
  {
    CsvWriter csv(artifacts.certificate_csv,
                  {"method", "alpha", "k", "kprime", "lambda1", "relative_error", "bound",
                   "slack", "pass"});
    csv.field(artifacts.solve.method).field(config.alpha).field(config.k).field(kprime);
    csv.field(ext.lambda1).field(artifacts.certificate.relative_error);
    csv.field(artifacts.certificate.bound).field(artifacts.certificate.slack);
    csv.field(std::string(artifacts.certificate.pass ? "pass" : "fail"));
    csv.end_row();
  }

  {
    std::ofstream summary(config.out_dir / "summary.txt");
    summary << artifacts.solve.method << " solve on dim=" << config.grid.dim
            << " n=" << config.grid.n << " (N=" << config.grid.unknowns() << ")\n";
    summary << "alpha=" << config.alpha << " k=" << config.k << " kprime=" << kprime
            << " lambda1=" << ext.lambda1 << " delta=" << ext.delta << "\n";
    summary << "minimax: converged=" << mm.converged << " iterations=" << mm.iterations
            << " E=" << mm.sup_error << "\n";
    summary << "certificate: |u_ref-u|/|f|=" << artifacts.certificate.relative_error
            << " bound=" << artifacts.certificate.bound
            << " slack=" << artifacts.certificate.slack << " ("
            << artifacts.certificate.bound_source << ")\n";
    summary << "result: " << (artifacts.passed ? "PASS" : "FAIL") << " in "
            << artifacts.solve.wall_seconds << " s\n";
  }

  if (config.vector_format == "csv") {
    save_vector_csv(config.out_dir / "u.csv", artifacts.solve.u);
    save_vector_csv(config.out_dir / "f.csv", f);
  } else if (config.vector_format == "binary") {
    save_vector_binary(config.out_dir / "u.bin", artifacts.solve.u);
    save_vector_binary(config.out_dir / "f.bin", f);
  } else if (config.vector_format != "none") {
    throw Error("config: unknown vector format '" + config.vector_format + "'");
  }
  return artifacts;
}

}  // namespace bura
