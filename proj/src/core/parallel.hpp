#pragma once
// Path-parallel execution. Work is split into contiguous index blocks, one
// thread per block; workers write only their own slots and every reduction
// afterwards walks the slots in index order, so results do not depend on the
// thread count or scheduling.

#include <cstddef>
#include <functional>

namespace ergo::par {

// Resolution order: set_thread_override (CLI) > ERGOVERIFY_THREADS > hardware.
int thread_count();
void set_thread_override(int n);  // n <= 0 clears the override

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ergo::par
