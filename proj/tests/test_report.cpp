#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fairdim/error.hpp"
#include "fairdim/report.hpp"
#include "fairdim/sweep.hpp"
#include "fairdim/synthetic.hpp"
#include "oracles.hpp"

using namespace fairdim;

namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

SweepReport small_report() {
  std::mt19937_64 rng(21);
  SweepOptions opts;
  opts.dataset_id = "rand";
  opts.max_rank = 4;
  return run_sweep(oracle::random_table(rng, 60, 5), opts);
}

}  // namespace

TEST_CASE("sweep: one row per (rank, method), ordered") {
  const SweepReport report = small_report();
  REQUIRE(report.rows.size() == 12);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    CHECK(report.rows[i].r == i / 3 + 1);
    CHECK(report.rows[i].method == std::array{Method::pca, Method::u_fpca, Method::c_fpca}[i % 3]);
    CHECK(report.rows[i].runtime_ms == 0);
  }
  CHECK(check_report(report).empty());
}

TEST_CASE("sweep: full rank gives zero error for every method") {
  SweepOptions opts;
  opts.max_rank = 2;
  const SweepReport report = run_sweep(generate_s1(), opts);
  for (const auto& row : report.rows)
    if (row.r == 2) CHECK(row.overall_err == 0.0);
}

TEST_CASE("sweep: PCA has the lowest overall error at every rank") {
  const SweepReport report = small_report();
  for (std::size_t i = 0; i < report.rows.size(); i += 3) {
    CHECK(report.rows[i].overall_err <= report.rows[i + 1].overall_err + 1e-9);
    CHECK(report.rows[i].overall_err <= report.rows[i + 2].overall_err + 1e-9);
  }
}

TEST_CASE("sweep: balanced mode uses min-group rows") {
  // 5 rows of "a", 3 of "b".
  const RawTable t = make_table(Matrix{{1, 0}, {2, 1}, {0, 3}, {4, 1}, {1, 5}, {3, 3}, {2, 2}, {5, 0}},
                                {"a", "a", "b", "a", "b", "a", "b", "a"});
  const GroupedData g = prepare(t, true);
  CHECK(g.n_a == 3);
  CHECK(g.n_b == 3);
  SweepOptions opts;
  opts.balanced = true;
  opts.max_rank = 1;
  const SweepReport balanced = run_sweep(t, opts);
  CHECK(balanced.balanced);
  CHECK(balanced.rows[0].overall_err == doctest::Approx(classical_pca(g, 1).metrics.overall_err));
}

TEST_CASE("sweep: thread count does not change the report") {
  std::mt19937_64 rng(22);
  const RawTable t = oracle::random_table(rng, 80, 6);
  SweepOptions opts;
  opts.max_rank = 5;
  opts.threads = 1;
  const std::string serial = report_to_jsonl(run_sweep(t, opts));
  opts.threads = 4;
  CHECK(report_to_jsonl(run_sweep(t, opts)) == serial);
}

TEST_CASE("sweep: rank out of range") {
  SweepOptions opts;
  opts.max_rank = 3;
  CHECK_THROWS_AS(run_sweep(generate_s1(), opts), DimensionError);
}

TEST_CASE("jsonl round trip is byte-identical") {
  const SweepReport report = small_report();
  const std::string text = report_to_jsonl(report);
  CHECK(count_lines(text) == 13);
  const SweepReport parsed = report_from_jsonl(text);
  CHECK(report_to_jsonl(parsed) == text);
  CHECK(plot_series(parsed) == plot_series(report));
}

TEST_CASE("csv table layout") {
  const SweepReport report = small_report();
  const std::string csv = report_to_csv(report);
  CHECK(csv.starts_with("r,method,alpha,overall_err,err_a,err_b,disparity,fairness,runtime_ms,privileged\n"));
  CHECK(count_lines(csv) == 13);
}

TEST_CASE("plot series: counts and empty report") {
  const auto series = plot_series(small_report());
  REQUIRE(series.size() == 3);
  CHECK(count_lines(series.at("overall_error.csv")) == 1 + 12);
  CHECK(count_lines(series.at("fairness.csv")) == 1 + 12);
  CHECK(count_lines(series.at("group_errors.csv")) == 1 + 12);
  // Grouped by method.
  std::istringstream in(series.at("fairness.csv"));
  std::string line;
  std::getline(in, line);
  for (int i = 0; i < 4; ++i) {
    std::getline(in, line);
    CHECK(line.starts_with("pca," + std::to_string(i + 1) + ","));
  }

  const auto empty = plot_series(SweepReport{"none", false, {}});
  CHECK(empty.at("overall_error.csv") == "method,r,overall_err\n");
}

TEST_CASE("write_plot_series creates the files") {
  const auto dir = std::filesystem::temp_directory_path() / "fairdim_test_plot";
  std::filesystem::remove_all(dir);
  write_plot_series(small_report(), dir);
  CHECK(std::filesystem::exists(dir / "overall_error.csv"));
  CHECK(std::filesystem::exists(dir / "fairness.csv"));
  CHECK(std::filesystem::exists(dir / "group_errors.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed reports") {
  CHECK_THROWS_AS(report_from_jsonl(""), DataError);
  CHECK_THROWS_AS(report_from_jsonl("not json\n"), DataError);
  CHECK_THROWS_AS(report_from_jsonl("{\"type\":\"row\",\"r\":1}\n"), DataError);
  const std::string header = "{\"type\":\"report\",\"dataset_id\":\"x\",\"balanced\":false}\n";
  CHECK_THROWS_AS(report_from_jsonl(header + "{\"type\":\"row\",\"r\":1,\"method\":\"pca\"}\n"), DataError);
  CHECK_THROWS_AS(report_from_jsonl(header + "{\"type\":\"row\",\"r\":1,\"method\":\"lda\",\"alpha\":1,"
                                             "\"overall_err\":0,\"err_a\":0,\"err_b\":0,\"disparity\":0,"
                                             "\"fairness\":0,\"runtime_ms\":0}\n"),
                  DataError);
  CHECK_THROWS_AS(report_from_jsonl(header + "{\"type\":\"other\"}\n"), DataError);
  CHECK(report_from_jsonl(header).rows.empty());
}

TEST_CASE("check_report flags broken invariants") {
  SweepReport report = small_report();
  report.rows[1].fairness *= 1.01;
  report.rows.push_back(report.rows[0]);
  const auto problems = check_report(report);
  CHECK(problems.size() >= 2);
}

TEST_CASE("fit_to_json carries the projection") {
  const FairFitResult res = c_fpca(center_and_split(generate_s1()), 1);
  const std::string json = fit_to_json(res, 0);
  CHECK(json.find("\"method\":\"cfpca\"") != std::string::npos);
  CHECK(json.find("\"budget\":") != std::string::npos);
  CHECK(json.find("\"u\":[[") != std::string::npos);
}

TEST_CASE("synthetic generator is reproducible and shaped as documented") {
  const RawTable a = generate_s1();
  const RawTable b = generate_s1();
  CHECK(a.features == b.features);
  CHECK(a.count("A") == 600);
  CHECK(a.count("B") == 300);
  CHECK(a.features.cols() == 2);
  CHECK_FALSE(generate_s1(43).features == a.features);

  const std::string csv = table_to_csv(a, kSyntheticSensitiveColumn);
  const RawTable back = parse_table(csv, kSyntheticSensitiveColumn);
  CHECK(back.features == a.features);
  CHECK(back.row_labels == a.row_labels);
}
