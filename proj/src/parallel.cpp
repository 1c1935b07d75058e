#include "qtorus/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qtorus {

int resolveJobs(int requested) {
  if (const char* env = std::getenv("TORUS_JOBS")) {
    try {
      int parsed = std::stoi(env);
      if (parsed > 0) return parsed;
    } catch (const std::exception&) {
      // Malformed values fall through to the other sources.
    }
  }
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace qtorus
