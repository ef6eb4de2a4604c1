#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace tcat {

// Index-sharded parallel loop with deterministic result order: the
// caller collects into a pre-sized vector slot per index.
inline void parallel_for(size_t n, int workers, const std::function<void(size_t)>& body) {
  if (workers <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  int count = std::min<int>(workers, static_cast<int>(n));
  pool.reserve(static_cast<size_t>(count));
  for (int w = 0; w < count; ++w)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace tcat
