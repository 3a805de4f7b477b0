#include "casselman/parallel.hpp"

#include <cstdlib>
#include <string>

namespace casselman {

int worker_count() {
  if (const char* env = std::getenv("CASSELMAN_WORKERS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace casselman
