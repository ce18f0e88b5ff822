#include "rankmetric/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace rankmetric {

namespace {

int from_env() {
  if (const char* s = std::getenv("RANKMETRIC_WORKERS")) {
    int w = std::atoi(s);
    if (w > 0) return w;
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

std::atomic<int>& slot() {
  static std::atomic<int> w{from_env()};
  return w;
}

}  // namespace

int default_workers() { return slot().load(); }

void set_default_workers(int workers) { slot().store(workers > 0 ? workers : from_env()); }

}  // namespace rankmetric
