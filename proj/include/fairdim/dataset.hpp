#ifndef FAIRDIM_DATASET_HPP
#define FAIRDIM_DATASET_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "fairdim/matrix.hpp"

namespace fairdim {

/*
 A numeric table as read from disk: one feature row per sample plus the
 sensitive-attribute value of that row. The sensitive column is never part
 of `features`.

 `group_labels` holds the two distinct sensitive values in order of first
 appearance; group 1 is group_labels[0].
*/
struct RawTable {
  std::vector<std::string> feature_names;
  Matrix features;
  std::vector<std::string> row_labels;
  std::vector<std::string> group_labels;

  std::size_t count(const std::string& label) const;
};

// Centered data and its two sensitive groups. x_a / x_b are group 1 / group 2
// of the source table, not privileged / harmed; roles are assigned later.
struct GroupedData {
  Matrix x;
  Matrix x_a;
  Matrix x_b;
  std::size_t n = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::string label_a;
  std::string label_b;

  std::size_t dims() const { return x.cols(); }
};

// Reads a comma-separated file with a header row. Throws DataError on a
// missing file or column, a non-numeric feature cell, or a sensitive column
// without exactly two distinct values.
RawTable load_table(const std::filesystem::path& path, const std::string& sensitive_column);

// Same as load_table, reading from an in-memory CSV document.
RawTable parse_table(const std::string& text, const std::string& sensitive_column);

// Builds a table directly; mostly for tests and the synthetic generator.
RawTable make_table(Matrix features, std::vector<std::string> row_labels,
                    std::vector<std::string> feature_names = {});

// Subtracts the global column means, then partitions by group.
GroupedData center_and_split(const RawTable& table);

// Keeps the first min(n_1, n_2) rows of each group, file order preserved.
RawTable balance(const RawTable& table);

}  // namespace fairdim

#endif
