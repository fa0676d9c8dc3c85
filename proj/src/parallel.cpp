#include "fgl/parallel.hpp"

#include <cstdlib>
#include <string>

namespace fgl {

unsigned thread_count() {
  if (const char* env = std::getenv("FGL_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace fgl
