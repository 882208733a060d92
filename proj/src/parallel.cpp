#include "ehlcp/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ehlcp {

int max_threads() {
  if (const char* env = std::getenv("EHLCP_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      return 1;
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

}  // namespace ehlcp
