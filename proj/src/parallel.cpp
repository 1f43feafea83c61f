#include "sgw/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace sgw {

int thread_count() {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("SGW_THREADS")) {
    try {
      threads = std::min(threads, std::max(1, std::stoi(cap)));
    } catch (...) {
      // unparsable cap: keep the hardware value
    }
  }
  return threads;
}

}  // namespace sgw
