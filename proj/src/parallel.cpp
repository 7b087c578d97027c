#include "gia/core/parallel.hpp"

#include <cstdlib>

namespace gia {

int default_jobs() {
  if (const char* e = std::getenv("GIA_JOBS")) {
    const int j = std::atoi(e);
    if (j > 0) return j;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace gia
