#pragma once

#include <cstddef>
#include <functional>

namespace mvsde {

// Number of hardware threads, at least 1.
int hardware_workers();

// Runs fn(begin, end) over consecutive index blocks of fixed size `grain`.
// Block boundaries depend only on `grain`, never on the worker count, so
// per-block outputs (and anything reduced from them in block order) are
// identical for any number of workers.
void parallel_for_blocks(std::size_t count, std::size_t grain, int workers,
                         const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace mvsde
