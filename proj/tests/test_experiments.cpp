#include <bura/experiments.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace bura;

namespace {

ExperimentContext test_context() {
  ExperimentContext ctx;
  ctx.use_cache = false;
  return ctx;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("asymptotic estimate closed form") {
  // 4^1.25 sin(pi/4) e^{-2 pi sqrt(21.25)} = 1.05e-12
  CHECK(asymptotic_estimate(0.25, 85) == doctest::Approx(1.048e-12).epsilon(1e-3));
  // within a factor 10 of 1e-12 for the other deep-table anchor
  const double est = asymptotic_estimate(0.5, 45);
  CHECK(est < 1e-11);
  CHECK(est > 1e-13);
  // monotone decreasing in k
  double previous = 1.0;
  for (int k = 1; k <= 40; ++k) {
    const double e = asymptotic_estimate(0.6, k);
    CHECK(e < previous);
    previous = e;
  }
}

TEST_CASE("coefficient precision policy") {
  CHECK(coefficient_digits(16, 7) == 30);
  CHECK(coefficient_digits(16, 31) == 60);
  CHECK(coefficient_digits(45, 12) == 45);
  CHECK(coefficient_digits(45, 85) == 60);
  CHECK(coefficient_digits(80, 85) == 80);
}

TEST_CASE("minimal-degree table on a fast slice") {
  auto ctx = test_context();
  const auto table = table_min_degree({0.90}, {1e-3, 1e-4, 1e-5}, ctx);
  REQUIRE(table.entries.size() == 3);
  CHECK_FALSE(table.entries[0][0].hole);
  CHECK(table.entries[0][0].k == 2);
  CHECK(table.entries[1][0].k == 3);
  CHECK(table.entries[2][0].k == 5);
  for (const auto& row : table.entries) CHECK(row[0].measured <= row[0].accuracy);
}

TEST_CASE("coarse accuracy needs only degree one") {
  auto ctx = test_context();
  const auto table = table_min_degree({0.37}, {1.0}, ctx);
  CHECK(table.entries[0][0].k == 1);
  CHECK_FALSE(table.entries[0][0].hole);
}

TEST_CASE("accuracies must decrease") {
  auto ctx = test_context();
  CHECK_THROWS_AS(table_min_degree({0.5}, {1e-5, 1e-3}, ctx), Error);
}

TEST_CASE("coefficient study emits ordered rows and diagnostics") {
  auto ctx = test_context();
  const auto studies = coefficient_study(0.25, {6, 10}, ctx);
  REQUIRE(studies.size() == 2);
  CHECK(studies[0].rows.size() == 6);
  CHECK(studies[1].rows.size() == 10);
  for (const auto& study : studies) {
    CHECK(study.diagnostics.all_hold());
    for (const auto& row : study.rows) {
      CHECK(row.c > 0);
      CHECK(row.dtilde < 0);
      CHECK(row.ratio < 0);
    }
  }
  // empirical growth of |dtilde_1| with the degree
  CHECK(std::abs(studies[1].dtilde1) > std::abs(studies[0].dtilde1));

  const auto dir = std::filesystem::temp_directory_path() / "bura_exp_test";
  write_coefficient_study_csv(dir / "study.csv", studies);
  const auto text = slurp(dir / "study.csv");
  CHECK(text.starts_with("alpha,k,i,dtilde_i,c_i,ratio\n"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("figure curves: domination row by row and kprime = k degeneracy") {
  auto ctx = test_context();
  const auto dir = std::filesystem::temp_directory_path() / "bura_fig_test";

  SUBCASE("reduced errors dominate the full errors in every row") {
    const auto summaries = figure_error_curves(0.5, 8, 5, {1e-4, 1e-6}, 200, ctx, dir);
    REQUIRE(summaries.size() == 2);
    for (const auto& s : summaries) {
      CHECK(s.Etilde >= s.E_restricted * (1 - 1e-12));
      CHECK(s.gap_bound >= 0);
    }
    const auto text = slurp(dir / "figure1_delta_0.0001.csv");
    REQUIRE(text.starts_with("z,bura_error,rsbura_error\n"));
    std::istringstream rows(text);
    std::string line;
    std::getline(rows, line);
    int checked = 0;
    while (std::getline(rows, line)) {
      const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
      const double bura_err = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
      const double rs_err = std::stod(line.substr(c2 + 1));
      CHECK(rs_err >= bura_err);
      ++checked;
    }
    CHECK(checked == 200);
  }

  SUBCASE("kprime = k collapses both columns to equality") {
    figure_error_curves(0.5, 6, 6, {1e-5}, 50, ctx, dir);
    const auto text = slurp(dir / "figure1_delta_1e-05.csv");
    std::istringstream rows(text);
    std::string line;
    std::getline(rows, line);
    while (std::getline(rows, line)) {
      const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
      CHECK(line.substr(c1 + 1, c2 - c1 - 1) == line.substr(c2 + 1));
    }
  }

  std::filesystem::remove_all(dir);
}

TEST_CASE("run config parsing and overrides") {
  const auto dir = std::filesystem::temp_directory_path() / "bura_cfg_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream cfg(dir / "run.json");
    cfg << R"({
      "alpha": 0.25, "k": 9, "kprime": -1,
      "grid": {"dim": 2, "n": 15},
      "cg": {"tolerance": 1e-11, "preconditioner": "diagonal"},
      "precision": 30,
      "f": {"kind": "eigenvector", "index": [2, 3]},
      "out": ")" << (dir / "out").string() << R"(",
      "vector_format": "none",
      "cache_dir": ")" << (dir / "cache").string() << R"("
    })";
  }
  const auto cfg = parse_run_config(dir / "run.json");
  CHECK(cfg.alpha == 0.25);
  CHECK(cfg.k == 9);
  CHECK(cfg.kprime == -1);
  CHECK(cfg.grid.dim == 2);
  CHECK(cfg.grid.n == 15);
  CHECK(cfg.cg.tolerance == 1e-11);
  CHECK(cfg.cg.precond == Preconditioner::Diagonal);
  CHECK(cfg.f_kind == "eigenvector");
  CHECK(cfg.f_index[0] == 2);
  CHECK(cfg.f_index[1] == 3);
  CHECK(cfg.vector_format == "none");

  std::ofstream bad(dir / "bad.json");
  bad << "{ not json";
  bad.close();
  CHECK_THROWS_AS(parse_run_config(dir / "bad.json"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("end-to-end solve certifies and writes deterministic reports") {
  const auto dir = std::filesystem::temp_directory_path() / "bura_solve_test";
  std::filesystem::remove_all(dir);

  RunConfig cfg;
  cfg.alpha = 0.5;
  cfg.k = 8;
  cfg.grid = {1, 63};
  cfg.precision = 30;
  cfg.f_kind = "random";
  cfg.f_seed = 99;
  cfg.out_dir = dir / "out1";
  cfg.cache_dir = dir / "cache";
  cfg.vector_format = "csv";

  const auto first = run_solve(cfg);
  CHECK(first.passed);
  CHECK(first.certificate.relative_error <= first.certificate.bound + first.certificate.slack);
  CHECK(std::filesystem::exists(first.report_csv));
  CHECK(std::filesystem::exists(first.certificate_csv));
  CHECK(slurp(first.report_csv).starts_with("i,dtilde_i,kappa,iterations,residual\n"));

  // identical config (fresh output dir, warm cache, different threads):
  // byte-identical CSV artifacts
  cfg.out_dir = dir / "out2";
  cfg.threads = 3;
  const auto second = run_solve(cfg);
  CHECK(second.passed);
  CHECK(slurp(first.report_csv) == slurp(second.report_csv));
  CHECK(slurp(first.certificate_csv) == slurp(second.certificate_csv));
  CHECK(slurp(dir / "out1" / "u.csv") == slurp(dir / "out2" / "u.csv"));

  std::filesystem::remove_all(dir);
}

TEST_CASE("reduced solve path engages when kprime is explicit") {
  const auto dir = std::filesystem::temp_directory_path() / "bura_rs_test";
  std::filesystem::remove_all(dir);

  RunConfig cfg;
  cfg.alpha = 0.25;
  cfg.k = 10;
  cfg.kprime = 6;
  cfg.grid = {1, 63};
  cfg.precision = 30;
  cfg.f_seed = 7;
  cfg.out_dir = dir / "out";
  cfg.cache_dir = dir / "cache";
  cfg.vector_format = "none";

  const auto artifacts = run_solve(cfg);
  CHECK(artifacts.passed);
  CHECK(artifacts.solve.method == "RS-BURA");
  CHECK(artifacts.solve.kprime == 6);
  CHECK(artifacts.solve.reports.size() == 6);
  std::filesystem::remove_all(dir);
}
