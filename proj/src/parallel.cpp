#include "mvsde/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace mvsde {

int hardware_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

void parallel_for_blocks(std::size_t count, std::size_t grain, int workers,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  if (grain == 0) grain = 1;
  const std::size_t blocks = (count + grain - 1) / grain;
  if (workers <= 1 || blocks <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t lo = b * grain;
      fn(lo, std::min(lo + grain, count));
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= blocks) return;
      const std::size_t lo = b * grain;
      fn(lo, std::min(lo + grain, count));
    }
  };

  const std::size_t spawn = std::min<std::size_t>(workers, blocks) - 1;
  std::vector<std::thread> pool;
  pool.reserve(spawn);
  for (std::size_t i = 0; i < spawn; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace mvsde
