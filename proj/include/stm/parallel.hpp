#pragma once

#include <cstddef>
#include <functional>

namespace stm {

// worker cap: STM_THREADS if set and positive, else the hardware concurrency
unsigned thread_count();
// runs body(i) for i in [0, n); each index exactly once, order unspecified
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace stm
