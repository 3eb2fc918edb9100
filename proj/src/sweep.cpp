#include "fairdim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "fairdim/error.hpp"

namespace fairdim {

GroupedData prepare(const RawTable& table, bool balanced) {
  return balanced ? center_and_split(balance(table)) : center_and_split(table);
}

SweepReport run_sweep(const RawTable& table, const SweepOptions& options) {
  const GroupedData g = prepare(table, options.balanced);
  if (options.max_rank < 1 || options.max_rank > g.dims()) {
    throw DimensionError("max rank " + std::to_string(options.max_rank) + " outside [1, " +
                         std::to_string(g.dims()) + "]");
  }

  constexpr Method methods[] = {Method::pca, Method::u_fpca, Method::c_fpca};
  const std::size_t cell_count = options.max_rank * std::size(methods);
  std::vector<SweepRow> rows(cell_count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t cell = next++; cell < cell_count; cell = next++) {
      try {
        const std::size_t r = cell / std::size(methods) + 1;
        const Method method = methods[cell % std::size(methods)];
        const auto start = std::chrono::steady_clock::now();
        const FairFitResult res = fit(method, g, r, options.search);
        const auto elapsed = std::chrono::steady_clock::now() - start;
        const auto ms = options.timing
                            ? static_cast<std::uint64_t>(
                                  std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count())
                            : 0;
        rows[cell] = make_row(res, ms);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, cell_count);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  SweepReport report;
  report.dataset_id = options.dataset_id;
  report.balanced = options.balanced;
  report.rows = std::move(rows);
  return report;
}

}  // namespace fairdim
