#pragma once

#include <cstddef>
#include <functional>

namespace hpdesign {

/// Worker count used by parallel loops: min(hardware_concurrency,
/// HPDESIGN_THREADS) with HPDESIGN_THREADS read once at first use.
std::size_t thread_budget();

/// Runs fn(begin..end) split into contiguous chunks across the thread
/// budget. fn(lo, hi) must be safe to run concurrently on disjoint ranges.
/// Results must not depend on the split (callers merge per-chunk state).
void parallel_chunks(std::size_t begin, std::size_t end,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace hpdesign
