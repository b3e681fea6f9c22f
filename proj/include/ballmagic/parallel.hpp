#pragma once

#include <cstddef>
#include <functional>

namespace ballmagic {

/// Worker count used by the sweeps and searches: an explicit request wins,
/// then the BALLMAGIC_THREADS environment variable, then the hardware count.
/// Always at least 1.
unsigned worker_count(unsigned requested = 0);

/// Runs fn(task_index) for every index in [0, task_count) on up to `workers`
/// threads. Tasks are claimed atomically; callers keep per-task output slots
/// and merge them in index order, so results stay deterministic no matter
/// how many workers run. Task functions must not throw.
void run_tasks(std::size_t task_count, unsigned workers,
               const std::function<void(std::size_t)>& fn);

}  // namespace ballmagic
