#ifndef FAIRDIM_SYNTHETIC_HPP
#define FAIRDIM_SYNTHETIC_HPP

#include <cstdint>
#include <string>

#include "fairdim/dataset.hpp"

namespace fairdim {

/*
 Two-group 2-D benchmark ("S1").

 Group "A": 600 points, anisotropic Gaussian cloud with axis scales (3, 0.5)
 rotated to 10 degrees. Group "B": 300 points, scales (1.5, 0.5) rotated to
 70 degrees. Both centered at the origin; A rows come first. Columns are
 x1, x2 and the sensitive column "group".

 Normal draws use Box-Muller over mt19937_64, so the output for a given seed
 is identical on every platform.
*/
inline constexpr std::uint64_t kDefaultSyntheticSeed = 42;
inline constexpr const char* kSyntheticSensitiveColumn = "group";

RawTable generate_s1(std::uint64_t seed = kDefaultSyntheticSeed);

// CSV with header; the sensitive column is written last.
std::string table_to_csv(const RawTable& table, const std::string& sensitive_column);

}  // namespace fairdim

#endif
