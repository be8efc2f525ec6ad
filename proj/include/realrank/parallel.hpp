#pragma once

#include <cstddef>
#include <functional>

namespace realrank {

// Worker cap for the parallel maps below; 0 restores the default
// (hardware concurrency). Results never depend on this value.
void set_max_threads(unsigned n);
unsigned max_threads();

// Calls body(i) for i in [0, n), splitting the range into contiguous chunks.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, std::size_t min_chunk = 64);

}  // namespace realrank
