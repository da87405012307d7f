#pragma once

#include <cstddef>
#include <functional>

namespace trusslab {

  // Worker cap for every parallel scan.  Defaults to the TRUSSLAB_THREADS
  // environment variable, else the hardware concurrency.
  std::size_t max_threads() noexcept;
  void        set_max_threads(std::size_t n) noexcept;

  // Runs body(i) for every i in [0, n).  Iterations must only write to
  // per-index storage; callers merge results in index order so output never
  // depends on the schedule.  Nested calls run serially.
  void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body);

}  // namespace trusslab
