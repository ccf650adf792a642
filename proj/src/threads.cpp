#include "equilex/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace equilex {

std::size_t worker_threads() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EQUILEX_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) n = std::min(n, static_cast<std::size_t>(cap));
    } catch (const std::exception&) {
      // unparsable: ignore
    }
  }
  return n;
}

}  // namespace equilex
