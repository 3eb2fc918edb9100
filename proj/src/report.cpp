#include "fairdim/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "fairdim/error.hpp"
#include "fairdim/format.hpp"
#include "json.hpp"

namespace fairdim {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr Method kMethodOrder[] = {Method::pca, Method::u_fpca, Method::c_fpca};

ordered_json row_to_json(const SweepRow& row) {
  ordered_json j;
  j["type"] = "row";
  j["r"] = row.r;
  j["method"] = std::string(method_name(row.method));
  j["alpha"] = row.alpha;
  j["overall_err"] = row.overall_err;
  j["err_a"] = row.err_a;
  j["err_b"] = row.err_b;
  j["disparity"] = row.disparity;
  j["fairness"] = row.fairness;
  j["runtime_ms"] = row.runtime_ms;
  j["privileged"] = row.privileged;
  return j;
}

template <typename T>
T field(const ordered_json& j, const char* key, std::size_t line_no) {
  if (!j.contains(key)) {
    throw DataError("report line " + std::to_string(line_no) + ": missing field '" + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DataError("report line " + std::to_string(line_no) + ": bad type for field '" + key + "'");
  }
}

double number_field(const ordered_json& j, const char* key, std::size_t line_no) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw DataError("report line " + std::to_string(line_no) + ": field '" + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

std::size_t method_rank(Method m) {
  return static_cast<std::size_t>(std::find(std::begin(kMethodOrder), std::end(kMethodOrder), m) -
                                  std::begin(kMethodOrder));
}

std::vector<const SweepRow*> rows_by_method(const SweepReport& report) {
  std::vector<const SweepRow*> rows;
  for (const auto& row : report.rows) rows.push_back(&row);
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow* a, const SweepRow* b) {
    if (a->method != b->method) return method_rank(a->method) < method_rank(b->method);
    return a->r < b->r;
  });
  return rows;
}

}  // namespace

SweepRow make_row(const FairFitResult& fit, std::uint64_t runtime_ms) {
  SweepRow row;
  row.r = fit.rank;
  row.method = fit.method;
  row.alpha = fit.alpha;
  row.overall_err = fit.metrics.overall_err;
  row.err_a = fit.metrics.err_a;
  row.err_b = fit.metrics.err_b;
  row.disparity = fit.metrics.disparity;
  row.fairness = fit.metrics.fairness;
  row.runtime_ms = runtime_ms;
  row.privileged = fit.label_a;
  return row;
}

std::string report_to_jsonl(const SweepReport& report) {
  ordered_json header;
  header["type"] = "report";
  header["dataset_id"] = report.dataset_id;
  header["balanced"] = report.balanced;
  std::string out = header.dump() + "\n";
  for (const auto& row : report.rows) out += row_to_json(row).dump() + "\n";
  return out;
}

SweepReport report_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  SweepReport report;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw DataError("report line " + std::to_string(line_no) + ": invalid JSON");
    }
    if (!j.is_object()) throw DataError("report line " + std::to_string(line_no) + ": expected an object");
    const auto type = field<std::string>(j, "type", line_no);
    if (type == "report") {
      if (have_header) throw DataError("report line " + std::to_string(line_no) + ": duplicate header");
      report.dataset_id = field<std::string>(j, "dataset_id", line_no);
      report.balanced = field<bool>(j, "balanced", line_no);
      have_header = true;
    } else if (type == "row") {
      if (!have_header) throw DataError("report line " + std::to_string(line_no) + ": row before header");
      SweepRow row;
      const auto r = field<std::int64_t>(j, "r", line_no);
      if (r < 1) throw DataError("report line " + std::to_string(line_no) + ": rank must be positive");
      row.r = static_cast<std::size_t>(r);
      const auto method = parse_method(field<std::string>(j, "method", line_no));
      if (!method) throw DataError("report line " + std::to_string(line_no) + ": unknown method");
      row.method = *method;
      row.alpha = number_field(j, "alpha", line_no);
      row.overall_err = number_field(j, "overall_err", line_no);
      row.err_a = number_field(j, "err_a", line_no);
      row.err_b = number_field(j, "err_b", line_no);
      row.disparity = number_field(j, "disparity", line_no);
      row.fairness = number_field(j, "fairness", line_no);
      row.runtime_ms = field<std::uint64_t>(j, "runtime_ms", line_no);
      if (j.contains("privileged")) row.privileged = field<std::string>(j, "privileged", line_no);
      report.rows.push_back(std::move(row));
    } else {
      throw DataError("report line " + std::to_string(line_no) + ": unknown record type '" + type + "'");
    }
  }
  if (!have_header) throw DataError("report has no header record");
  return report;
}

std::string report_to_csv(const SweepReport& report) {
  std::string out = "r,method,alpha,overall_err,err_a,err_b,disparity,fairness,runtime_ms,privileged\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.r) + "," + std::string(method_name(row.method)) + "," + format_double(row.alpha) +
           "," + format_double(row.overall_err) + "," + format_double(row.err_a) + "," +
           format_double(row.err_b) + "," + format_double(row.disparity) + "," + format_double(row.fairness) +
           "," + std::to_string(row.runtime_ms) + "," + row.privileged + "\n";
  }
  return out;
}

std::vector<std::string> check_report(const SweepReport& report) {
  std::vector<std::string> problems;
  std::set<std::pair<std::size_t, Method>> seen;
  std::map<Method, std::size_t> last_rank;
  for (const auto& row : report.rows) {
    const std::string where = "r=" + std::to_string(row.r) + " " + std::string(method_name(row.method));
    if (!seen.emplace(row.r, row.method).second) problems.push_back(where + ": duplicate row");
    auto it = last_rank.find(row.method);
    if (it != last_rank.end() && row.r <= it->second) problems.push_back(where + ": ranks not increasing");
    last_rank[row.method] = row.r;
    const double expected = row.disparity * row.disparity;
    if (std::abs(row.fairness - expected) > 1e-12 * std::max(std::abs(expected), 1e-300)) {
      problems.push_back(where + ": fairness differs from disparity squared");
    }
  }
  return problems;
}

std::string fit_to_json(const FairFitResult& fit, std::uint64_t runtime_ms) {
  ordered_json j;
  j["method"] = std::string(method_name(fit.method));
  j["rank"] = fit.rank;
  j["alpha"] = fit.alpha;
  j["iterations"] = fit.iterations;
  j["budget"] = fit.budget ? ordered_json(*fit.budget) : ordered_json(nullptr);
  j["privileged"] = fit.label_a;
  j["harmed"] = fit.label_b;
  j["overall_err"] = fit.metrics.overall_err;
  j["err_a"] = fit.metrics.err_a;
  j["err_b"] = fit.metrics.err_b;
  j["disparity"] = fit.metrics.disparity;
  j["fairness"] = fit.metrics.fairness;
  j["runtime_ms"] = runtime_ms;
  ordered_json u = ordered_json::array();
  for (std::size_t i = 0; i < fit.u.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (double v : fit.u.row(i)) row.push_back(v);
    u.push_back(std::move(row));
  }
  j["u"] = std::move(u);
  return j.dump();
}

std::map<std::string, std::string> plot_series(const SweepReport& report) {
  std::string overall = "method,r,overall_err\n";
  std::string fairness = "method,r,fairness\n";
  std::string groups = "method,r,err_a,err_b\n";
  for (const SweepRow* row : rows_by_method(report)) {
    const std::string key = std::string(method_name(row->method)) + "," + std::to_string(row->r) + ",";
    overall += key + format_double(row->overall_err) + "\n";
    fairness += key + format_double(row->fairness) + "\n";
    groups += key + format_double(row->err_a) + "," + format_double(row->err_b) + "\n";
  }
  return {{"overall_error.csv", overall}, {"fairness.csv", fairness}, {"group_errors.csv", groups}};
}

void write_plot_series(const SweepReport& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw DataError("cannot create output directory '" + out_dir.string() + "': " + ec.message());
  for (const auto& [name, content] : plot_series(report)) {
    std::ofstream out(out_dir / name, std::ios::binary);
    if (!out) throw DataError("cannot write '" + (out_dir / name).string() + "'");
    out << content;
  }
}

}  // namespace fairdim
