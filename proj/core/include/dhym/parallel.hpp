#pragma once

#include <cstddef>
#include <functional>

namespace dhym {

/// Global worker-count bound (the CLI --jobs flag). Affects wall time only;
/// every kernel writes per-point slots and reductions stay serial, so results
/// are identical for any value.
void set_worker_count(int jobs);
int worker_count();

/// Runs fn(begin, end) over a static partition of [0, count) on up to
/// worker_count() threads. Exceptions propagate from the first failing chunk.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace dhym
