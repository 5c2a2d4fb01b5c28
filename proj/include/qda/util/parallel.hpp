#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace qda {

/// Worker count: QDA_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Work is
/// handed out in index order; the first exception thrown by any call is
/// rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// out[i] = f(i), computed with parallel_for.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace qda
