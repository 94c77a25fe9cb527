#include "latmed/parallel.hpp"

#include <cstdlib>
#include <string>

namespace latmed {

std::size_t default_worker_count() {
  if (const char* env = std::getenv("LATMED_THREADS"); env != nullptr && *env != '\0') {
    try {
      const unsigned long value = std::stoul(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace latmed
