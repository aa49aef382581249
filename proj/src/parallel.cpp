#include "linkparity/parallel.hpp"

#include <cstdlib>
#include <string>

namespace linkparity {

unsigned default_workers() {
  if (const char* env = std::getenv("LINKPARITY_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace linkparity
