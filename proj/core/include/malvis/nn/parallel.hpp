#pragma once

#include <functional>

namespace malvis::nn {

/// Number of worker threads the kernel pool uses (MALVIS_THREADS env
/// overrides, default hardware concurrency).
int worker_count();

/// Fixed number of chunks every partitioned kernel is split into. Constant so
/// that chunk boundaries, and therefore every floating-point accumulation
/// order, do not depend on the thread count.
inline constexpr long long kKernelChunks = 16;

/// Runs fn(begin, end) over [0, total) split into kKernelChunks ranges.
/// Each index must be written by exactly one chunk; under that contract the
/// result is bitwise identical for any worker count. Falls back to a single
/// inline call when total < min_parallel (same result, same per-element math).
void parallel_chunks(long long total, long long min_parallel,
                     const std::function<void(long long, long long)>& fn);

}  // namespace malvis::nn
