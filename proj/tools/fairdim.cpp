// fairdim: fair PCA fits, rank sweeps and plot data from the command line.
//
// Exit codes: 0 ok, 1 bad flags, 2 data error, 3 numeric failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "fairdim/dataset.hpp"
#include "fairdim/error.hpp"
#include "fairdim/fairpca.hpp"
#include "fairdim/report.hpp"
#include "fairdim/sweep.hpp"
#include "fairdim/synthetic.hpp"

namespace fs = std::filesystem;
using namespace fairdim;

namespace {

constexpr int kExitFlags = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct FlagError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t thread_budget() {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FAIRDIM_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) threads = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw FlagError("FAIRDIM_THREADS must be a positive integer");
    }
  }
  return threads;
}

SearchConfig search_config(double tol) {
  if (!(tol > 0.0)) throw FlagError("--tol must be positive");
  SearchConfig cfg;
  cfg.tol = tol;
  return cfg;
}

struct DataFlags {
  std::string input;
  std::string sensitive_col;
  double tol = 1e-6;
  bool balanced = false;
  std::string output;
};

void add_data_flags(CLI::App* cmd, DataFlags& flags) {
  cmd->add_option("--input", flags.input, "CSV file with a header row")->required();
  cmd->add_option("--sensitive-col", flags.sensitive_col, "Name of the two-valued sensitive column")->required();
  cmd->add_option("--tol", flags.tol, "Golden-section bracket tolerance");
  cmd->add_flag("--balanced", flags.balanced, "Truncate both groups to the smaller group's size");
  cmd->add_option("--output", flags.output, "Output path (default: stdout)");
}

int run_gen(const std::string& out, std::uint64_t seed) {
  write_text(out, table_to_csv(generate_s1(seed), kSyntheticSensitiveColumn));
  return 0;
}

int run_fit(const DataFlags& flags, const std::string& method_text, std::size_t rank) {
  const auto method = parse_method(method_text);
  if (!method) throw FlagError("--method must be one of pca, ufpca, cfpca");
  const SearchConfig cfg = search_config(flags.tol);
  const GroupedData g = prepare(load_table(flags.input, flags.sensitive_col), flags.balanced);
  if (rank < 1 || rank > g.dims()) {
    throw FlagError("--rank must be in [1, " + std::to_string(g.dims()) + "]");
  }
  const auto start = std::chrono::steady_clock::now();
  const FairFitResult res = fit(*method, g, rank, cfg);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  write_text(flags.output, fit_to_json(res, static_cast<std::uint64_t>(ms.count())) + "\n");
  return 0;
}

int run_sweep_cmd(const DataFlags& flags, std::size_t max_rank, bool timing) {
  SweepOptions opts;
  opts.search = search_config(flags.tol);
  opts.balanced = flags.balanced;
  opts.max_rank = max_rank;
  opts.timing = timing;
  opts.threads = thread_budget();
  opts.dataset_id = fs::path(flags.input).stem().string();

  const RawTable table = load_table(flags.input, flags.sensitive_col);
  if (max_rank < 1 || max_rank > table.features.cols()) {
    throw FlagError("--max-rank must be in [1, " + std::to_string(table.features.cols()) + "]");
  }
  const SweepReport report = run_sweep(table, opts);
  write_text(flags.output, report_to_jsonl(report));
  if (!flags.output.empty()) write_text(flags.output + ".csv", report_to_csv(report));
  return 0;
}

int run_plotdata(const std::string& report_path, const std::string& out_dir) {
  write_plot_series(report_from_jsonl(read_text(report_path)), out_dir);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair principal component analysis"};
  app.require_subcommand(1);

  std::string gen_out;
  std::uint64_t gen_seed = kDefaultSyntheticSeed;
  auto* gen = app.add_subcommand("gen", "Write the synthetic two-group dataset as CSV");
  gen->add_option("--out", gen_out, "Output CSV path")->required();
  gen->add_option("--seed", gen_seed, "Random seed");

  DataFlags fit_flags;
  std::string fit_method;
  std::size_t fit_rank = 0;
  auto* fit_cmd = app.add_subcommand("fit", "Fit one method at one rank");
  add_data_flags(fit_cmd, fit_flags);
  fit_cmd->add_option("--method", fit_method, "pca | ufpca | cfpca")->required();
  fit_cmd->add_option("--rank", fit_rank, "Reduced dimension")->required();

  DataFlags sweep_flags;
  std::size_t max_rank = 0;
  bool timing = false;
  auto* sweep = app.add_subcommand("sweep", "Fit every method at ranks 1..max-rank");
  add_data_flags(sweep, sweep_flags);
  sweep->add_option("--max-rank", max_rank, "Largest reduced dimension")->required();
  sweep->add_flag("--timing", timing, "Record wall-clock runtime per fit (makes output non-reproducible)");

  std::string report_path;
  std::string plot_dir;
  auto* plot = app.add_subcommand("plotdata", "Turn a sweep report into plot series files");
  plot->add_option("--report", report_path, "Report written by sweep")->required();
  plot->add_option("--out-dir", plot_dir, "Directory for the series files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFlags;
  }

  try {
    if (*gen) return run_gen(gen_out, gen_seed);
    if (*fit_cmd) return run_fit(fit_flags, fit_method, fit_rank);
    if (*sweep) return run_sweep_cmd(sweep_flags, max_rank, timing);
    if (*plot) return run_plotdata(report_path, plot_dir);
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlags;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitFlags;
}
