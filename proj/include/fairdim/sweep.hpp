#ifndef FAIRDIM_SWEEP_HPP
#define FAIRDIM_SWEEP_HPP

#include <cstddef>
#include <string>

#include "fairdim/dataset.hpp"
#include "fairdim/fairpca.hpp"
#include "fairdim/report.hpp"

namespace fairdim {

struct SweepOptions {
  std::string dataset_id;
  std::size_t max_rank = 1;
  SearchConfig search;
  bool balanced = false;
  std::size_t threads = 1;
  // Wall-clock runtime per fit. Off by default so reports are reproducible.
  bool timing = false;
};

// Fits pca, ufpca and cfpca at every rank 1..max_rank. Cells run on up to
// `threads` workers; rows come back ordered by rank, then method.
SweepReport run_sweep(const RawTable& table, const SweepOptions& options);

// Balances (if asked) and then centers.
GroupedData prepare(const RawTable& table, bool balanced);

}  // namespace fairdim

#endif
