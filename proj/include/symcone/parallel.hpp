#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "symcone/types.hpp"

namespace symcone::parallel {

namespace detail {
inline std::atomic<int>& thread_count_slot() {
  static std::atomic<int> v{0};
  return v;
}
}  // namespace detail

// Worker count for map_reduce; defaults to the hardware concurrency.
inline int thread_count() {
  const int v = detail::thread_count_slot().load();
  if (v > 0) return v;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

inline void set_thread_count(int n) { detail::thread_count_slot().store(n); }

// Folds map(0), ..., map(count-1) into an accumulator with merge(acc, value).
// init must be an identity for merge: every chunk accumulator starts from a
// copy of it. Work is split into contiguous chunks, one worker each; chunk
// results are merged left to right, so the result does not depend on the
// worker count (all arithmetic here is exact). Worker exceptions are
// rethrown.
template <class T, class Map, class Merge>
T map_reduce(Index count, T init, Map map, Merge merge) {
  if (count <= 0) return init;
  const int workers =
      static_cast<int>(std::min<Index>(count, std::max(1, thread_count())));
  if (workers == 1) {
    T acc = std::move(init);
    for (Index i = 0; i < count; ++i) merge(acc, map(i));
    return acc;
  }
  std::vector<T> partial(static_cast<std::size_t>(workers), init);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const Index lo = count * w / workers;
        const Index hi = count * (w + 1) / workers;
        for (Index i = lo; i < hi; ++i)
          merge(partial[static_cast<std::size_t>(w)], map(i));
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  T acc = std::move(init);
  for (auto& p : partial) merge(acc, std::move(p));
  return acc;
}

}  // namespace symcone::parallel
