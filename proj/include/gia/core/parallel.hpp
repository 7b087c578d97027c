#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace gia {

/// Number of worker threads to use; honors GIA_JOBS if set.
int default_jobs();

/// Splits [0, n) into `jobs` contiguous chunks and runs `fn(chunk, begin, end)`
/// on each, one thread per chunk. Chunk boundaries depend only on (n, jobs),
/// so callers that merge per-chunk results in chunk order are deterministic.
inline void parallel_chunks(int n, int jobs,
                            const std::function<void(int, int, int)>& fn) {
  if (n <= 0) return;
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  const int base = n / jobs, rem = n % jobs;
  int begin = 0;
  for (int c = 0; c < jobs; ++c) {
    const int len = base + (c < rem ? 1 : 0);
    threads.emplace_back(fn, c, begin, begin + len);
    begin += len;
  }
  for (auto& t : threads) t.join();
}

}  // namespace gia
