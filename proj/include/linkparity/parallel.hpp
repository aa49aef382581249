#ifndef LINKPARITY_PARALLEL_HPP
#define LINKPARITY_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace linkparity {

/// Default worker count: $LINKPARITY_WORKERS if set and positive, else 1.
unsigned default_workers();

/// Evaluates fn(i) for i in [0, count) on `workers` threads and returns the
/// results in index order. Worker w takes indices w, w + workers, ... If any
/// call throws, the exception from the smallest failing index is rethrown,
/// so the outcome never depends on the worker count.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned workers,
                                 const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  if (workers < 1) workers = 1;
  auto run = [&](std::size_t offset) {
    for (std::size_t i = offset; i < count; i += workers) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1 || count < 2) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace linkparity

#endif  // LINKPARITY_PARALLEL_HPP
