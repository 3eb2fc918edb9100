#include "fairdim/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "fairdim/error.hpp"

namespace fairdim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view cell, std::size_t line_no, std::string_view column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = cell.data() + cell.size();
  if (!cell.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (cell.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw DataError("line " + std::to_string(line_no) + ", column '" + std::string(column) +
                    "': non-numeric value '" + std::string(cell) + "'");
  }
  return value;
}

std::vector<std::string> distinct_in_order(const std::vector<std::string>& labels) {
  std::vector<std::string> seen;
  for (const auto& l : labels) {
    if (std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
  }
  return seen;
}

}  // namespace

std::size_t RawTable::count(const std::string& label) const {
  return static_cast<std::size_t>(std::count(row_labels.begin(), row_labels.end(), label));
}

RawTable parse_table(const std::string& text, const std::string& sensitive_column) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    for (auto f : split_fields(line)) header.emplace_back(f);
    break;
  }
  if (header.empty()) throw DataError("input has no header row");
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) header[0].erase(0, 3);

  const auto sens_it = std::find(header.begin(), header.end(), sensitive_column);
  if (sens_it == header.end()) {
    throw DataError("sensitive column '" + sensitive_column + "' not found in header");
  }
  const auto sens_index = static_cast<std::size_t>(sens_it - header.begin());

  std::vector<std::string> names;
  for (std::size_t j = 0; j < header.size(); ++j)
    if (j != sens_index) names.push_back(header[j]);

  std::vector<double> entries;
  std::vector<std::string> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < fields.size(); ++j) {
      if (j == sens_index) {
        if (fields[j].empty()) {
          throw DataError("line " + std::to_string(line_no) + ": empty sensitive value");
        }
        labels.emplace_back(fields[j]);
      } else {
        entries.push_back(parse_number(fields[j], line_no, header[j]));
      }
    }
  }

  const auto groups = distinct_in_order(labels);
  if (groups.size() != 2) {
    throw DataError("sensitive column '" + sensitive_column + "' has " +
                    std::to_string(groups.size()) + " distinct values, expected 2");
  }
  RawTable table;
  table.feature_names = std::move(names);
  table.features = Matrix(labels.size(), table.feature_names.size(), std::move(entries));
  table.row_labels = std::move(labels);
  table.group_labels = groups;
  return table;
}

RawTable load_table(const std::filesystem::path& path, const std::string& sensitive_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str(), sensitive_column);
}

RawTable make_table(Matrix features, std::vector<std::string> row_labels,
                    std::vector<std::string> feature_names) {
  if (features.rows() != row_labels.size()) {
    throw DimensionError("make_table: one label per feature row required");
  }
  if (feature_names.empty()) {
    for (std::size_t j = 0; j < features.cols(); ++j) feature_names.push_back("x" + std::to_string(j + 1));
  }
  if (feature_names.size() != features.cols()) {
    throw DimensionError("make_table: one name per feature column required");
  }
  RawTable table;
  table.group_labels = distinct_in_order(row_labels);
  if (table.group_labels.size() != 2) throw DataError("make_table: expected exactly two groups");
  table.features = std::move(features);
  table.row_labels = std::move(row_labels);
  table.feature_names = std::move(feature_names);
  return table;
}

GroupedData center_and_split(const RawTable& table) {
  if (table.group_labels.size() != 2) throw DataError("center_and_split: expected exactly two groups");
  const Matrix& raw = table.features;
  const std::size_t n = raw.rows();
  const std::size_t d = raw.cols();

  std::vector<double> mean(d, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) mean[j] += raw(i, j);
  if (n > 0)
    for (double& m : mean) m /= static_cast<double>(n);

  Matrix x(n, d);
  std::vector<std::size_t> rows_a;
  std::vector<std::size_t> rows_b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) x(i, j) = raw(i, j) - mean[j];
    if (table.row_labels[i] == table.group_labels[0]) {
      rows_a.push_back(i);
    } else if (table.row_labels[i] == table.group_labels[1]) {
      rows_b.push_back(i);
    } else {
      throw DataError("center_and_split: row label '" + table.row_labels[i] + "' is not a known group");
    }
  }
  if (rows_a.empty() || rows_b.empty()) throw DataError("center_and_split: a group has no rows");

  GroupedData g;
  g.x_a = x.select_rows(rows_a);
  g.x_b = x.select_rows(rows_b);
  g.x = std::move(x);
  g.n = n;
  g.n_a = rows_a.size();
  g.n_b = rows_b.size();
  g.label_a = table.group_labels[0];
  g.label_b = table.group_labels[1];
  return g;
}

RawTable balance(const RawTable& table) {
  if (table.group_labels.size() != 2) throw DataError("balance: expected exactly two groups");
  const std::size_t keep = std::min(table.count(table.group_labels[0]), table.count(table.group_labels[1]));

  std::vector<std::size_t> kept;
  std::size_t taken_a = 0;
  std::size_t taken_b = 0;
  for (std::size_t i = 0; i < table.row_labels.size(); ++i) {
    const auto& label = table.row_labels[i];
    if (label == table.group_labels[0] && taken_a < keep) {
      kept.push_back(i);
      ++taken_a;
    } else if (label == table.group_labels[1] && taken_b < keep) {
      kept.push_back(i);
      ++taken_b;
    }
  }

  RawTable out;
  out.feature_names = table.feature_names;
  out.features = table.features.select_rows(kept);
  for (std::size_t i : kept) out.row_labels.push_back(table.row_labels[i]);
  out.group_labels = table.group_labels;
  return out;
}

}  // namespace fairdim
