#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace bjo {

/// Worker threads used by sampling loops; 0 selects the hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs fn(i) for i in [0, n) on the worker threads. Each index is visited
/// exactly once; callers write results to slot i so that reductions can be
/// done afterwards in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace bjo
