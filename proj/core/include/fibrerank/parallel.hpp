#pragma once

#include <functional>

namespace fibrerank {

// Runs fn(0..n-1) across jobs worker threads (0 = hardware concurrency).
// Work is handed out through a shared atomic counter, so uneven items
// balance themselves; callers write results into per-index slots and fold
// them in index order to stay deterministic.
void parallel_for(long n, int jobs, const std::function<void(long)>& fn);

int effective_jobs(int jobs);

}  // namespace fibrerank
