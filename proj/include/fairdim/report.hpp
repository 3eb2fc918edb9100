#ifndef FAIRDIM_REPORT_HPP
#define FAIRDIM_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fairdim/fairpca.hpp"

namespace fairdim {

struct SweepRow {
  std::size_t r = 0;
  Method method = Method::pca;
  double alpha = 1.0;
  double overall_err = 0.0;
  double err_a = 0.0;
  double err_b = 0.0;
  double disparity = 0.0;
  double fairness = 0.0;
  std::uint64_t runtime_ms = 0;
  std::string privileged;  // label of group A at this rank
};

struct SweepReport {
  std::string dataset_id;
  bool balanced = false;
  std::vector<SweepRow> rows;
};

SweepRow make_row(const FairFitResult& fit, std::uint64_t runtime_ms);

/*
 Line-delimited JSON: a header line

   {"type":"report","dataset_id":...,"balanced":...}

 followed by one {"type":"row",...} line per row, fields in SweepRow order.
*/
std::string report_to_jsonl(const SweepReport& report);
// Throws DataError on malformed input.
SweepReport report_from_jsonl(const std::string& text);

// Header plus one line per row, same field order as the JSON rows.
std::string report_to_csv(const SweepReport& report);

// Broken invariants, one message each; empty when the report is consistent.
std::vector<std::string> check_report(const SweepReport& report);

// JSON object for a single fit, including the projection matrix.
std::string fit_to_json(const FairFitResult& fit, std::uint64_t runtime_ms);

/*
 Plot-ready series, keyed by file name:

   overall_error.csv  method,r,overall_err
   fairness.csv       method,r,fairness
   group_errors.csv   method,r,err_a,err_b

 Rows grouped by method (pca, ufpca, cfpca) then ascending r.
*/
std::map<std::string, std::string> plot_series(const SweepReport& report);
void write_plot_series(const SweepReport& report, const std::filesystem::path& out_dir);

}  // namespace fairdim

#endif
