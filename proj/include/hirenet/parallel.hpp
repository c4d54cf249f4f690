#pragma once

#include <cstddef>
#include <functional>

namespace hirenet {

// Runs fn(0..n-1) over at most `threads` workers in contiguous chunks.
// Callers write to index-addressed slots, so results do not depend on the
// thread count. threads <= 1 runs inline.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace hirenet
