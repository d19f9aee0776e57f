#include "gso/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gso {

int worker_count() {
  if (const char* env = std::getenv("GSO_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace gso
