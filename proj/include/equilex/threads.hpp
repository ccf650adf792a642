#pragma once

#include <cstddef>

namespace equilex {

// Worker count for data-parallel loops: hardware concurrency, capped by the
// EQUILEX_THREADS environment variable when it holds a positive integer.
std::size_t worker_threads();

}  // namespace equilex
