#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hooklab::detail {

/// Splits parts 0..count-1 round-robin over `jobs` workers. Each worker folds
/// its parts into its own Partial via work(part, partial); the per-worker
/// partials are returned in worker order for the caller to merge.
template <class Partial, class Work>
std::vector<Partial> run_partitioned(std::size_t count, unsigned jobs, Work work) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    for (std::size_t part = 0; part < count; ++part) work(part, partials[0]);
    return partials;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t part = w; part < count; part += workers) work(part, partials[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return partials;
}

}  // namespace hooklab::detail
