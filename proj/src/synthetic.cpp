#include "fairdim/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "fairdim/format.hpp"

namespace fairdim {

namespace {

class NormalSource {
public:
  explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    const double u1 = uniform_open_closed();
    const double u2 = uniform_open_closed();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    return radius * std::cos(angle);
  }

private:
  // (0, 1], 53 random bits.
  double uniform_open_closed() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

void append_cloud(NormalSource& rng, std::size_t count, double degrees, double major, double minor,
                  const std::string& label, std::vector<double>& entries, std::vector<std::string>& labels) {
  const double theta = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (std::size_t i = 0; i < count; ++i) {
    const double along = major * rng.next();
    const double across = minor * rng.next();
    entries.push_back(c * along - s * across);
    entries.push_back(s * along + c * across);
    labels.push_back(label);
  }
}

}  // namespace

RawTable generate_s1(std::uint64_t seed) {
  NormalSource rng(seed);
  std::vector<double> entries;
  std::vector<std::string> labels;
  append_cloud(rng, 600, 10.0, 3.0, 0.5, "A", entries, labels);
  append_cloud(rng, 300, 70.0, 1.5, 0.5, "B", entries, labels);
  const std::size_t n = labels.size();
  return make_table(Matrix(n, 2, std::move(entries)), std::move(labels), {"x1", "x2"});
}

std::string table_to_csv(const RawTable& table, const std::string& sensitive_column) {
  std::string out;
  for (const auto& name : table.feature_names) out += name + ",";
  out += sensitive_column + "\n";
  for (std::size_t i = 0; i < table.features.rows(); ++i) {
    for (double v : table.features.row(i)) out += format_double(v) + ",";
    out += table.row_labels[i] + "\n";
  }
  return out;
}

}  // namespace fairdim
