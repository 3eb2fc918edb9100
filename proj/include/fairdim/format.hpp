#ifndef FAIRDIM_FORMAT_HPP
#define FAIRDIM_FORMAT_HPP

#include <array>
#include <charconv>
#include <string>

namespace fairdim {

// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace fairdim

#endif
