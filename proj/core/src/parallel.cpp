#include "trusslab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace trusslab {

  namespace {
    std::size_t initial_threads() noexcept {
      if (char const* env = std::getenv("TRUSSLAB_THREADS")) {
        char*         end = nullptr;
        unsigned long n   = std::strtoul(env, &end, 10);
        if (end != env && n > 0) {
          return n;
        }
      }
      unsigned hw = std::thread::hardware_concurrency();
      return hw == 0 ? 1 : hw;
    }

    std::atomic<std::size_t>& thread_cap() noexcept {
      static std::atomic<std::size_t> cap{initial_threads()};
      return cap;
    }

    thread_local bool inside_parallel = false;
  }  // namespace

  std::size_t max_threads() noexcept {
    return thread_cap().load();
  }

  void set_max_threads(std::size_t n) noexcept {
    thread_cap().store(n == 0 ? 1 : n);
  }

  void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body) {
    std::size_t workers = std::min(max_threads(), n);
    if (workers <= 1 || inside_parallel) {
      for (std::size_t i = 0; i < n; ++i) {
        body(i);
      }
      return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::size_t              error_index = n;
    std::mutex               error_mutex;
    auto                     run = [&] {
      inside_parallel = true;
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          // Keep the failure of the lowest index so the report does not
          // depend on the schedule.
          std::lock_guard lock(error_mutex);
          if (i < error_index) {
            error       = std::current_exception();
            error_index = i;
          }
        }
      }
      inside_parallel = false;
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
      pool.emplace_back(run);
    }
    run();
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace trusslab
