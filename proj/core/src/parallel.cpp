#include "quadlab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace quadlab {

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QL_THREADS"); env != nullptr) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // ignored: fall back to hardware concurrency
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace quadlab
