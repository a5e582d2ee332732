#pragma once

#include <cstddef>
#include <functional>

namespace invkit::parallel {

/// Worker cap: the INVKIT_THREADS environment variable when set (must be a
/// positive integer, otherwise ValidationError), else the hardware
/// concurrency. Always at least 1.
unsigned thread_budget();

/// Runs fn(0) ... fn(count-1) on up to thread_budget() workers. Tasks must
/// only touch disjoint output slots; result assembly stays deterministic
/// because slot i is written by task i regardless of scheduling. The lowest
/// task index's exception, if any, is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace invkit::parallel
