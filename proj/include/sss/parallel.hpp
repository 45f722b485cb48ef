#pragma once

#include <cstddef>
#include <functional>

namespace sss {

/// Worker count: STABLE_SUBSPACE_THREADS if set (clamped to >= 1), otherwise
/// all hardware threads. Read on every call so tests can vary it.
std::size_t thread_budget();

/// Runs fn(begin, end) over a static partition of [0, n). Workers must write
/// only to disjoint slots; any reduction with an order-dependent result is the
/// caller's job, done sequentially, so output never depends on the budget.
void parallel_for_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace sss
