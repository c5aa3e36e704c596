#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace infostab::detail {

/// Worker cap: INFOSTAB_WORKERS when set, hardware concurrency otherwise.
unsigned worker_cap();

/// Runs fn(begin, end) over disjoint chunks of [0, n), possibly on several
/// threads. Chunk boundaries depend only on n and the worker cap, so
/// chunk-local results are deterministic; callers combine them in chunk order.
/// The first chunk exception (by chunk index) is rethrown.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace infostab::detail
