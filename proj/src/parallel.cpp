#include "ballmagic/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ballmagic {

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BALLMAGIC_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void run_tasks(std::size_t task_count, unsigned workers,
               const std::function<void(std::size_t)>& fn) {
  if (task_count == 0) return;
  if (workers <= 1 || task_count == 1) {
    for (std::size_t i = 0; i < task_count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= task_count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = workers < task_count ? workers : static_cast<unsigned>(task_count);
  pool.reserve(spawn - 1);
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(drain);
  drain();
  for (auto& th : pool) th.join();
}

}  // namespace ballmagic
