#include "rbmlab/threads.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace rbmlab {

namespace {
std::atomic<int> g_cap{0};

int env_cap() {
  static const int cached = [] {
    const char* raw = std::getenv("RBMLAB_THREADS");
    if (raw == nullptr) return 0;
    try {
      int value = std::stoi(raw);
      return value > 0 ? value : 0;
    } catch (...) {
      return 0;
    }
  }();
  return cached;
}
}  // namespace

int max_threads() {
  int n = omp_get_max_threads();
  int cap = g_cap.load(std::memory_order_relaxed);
  if (cap == 0) cap = env_cap();
  if (cap > 0 && cap < n) n = cap;
  return n > 0 ? n : 1;
}

void set_thread_cap(int n) { g_cap.store(n > 0 ? n : 0, std::memory_order_relaxed); }

}  // namespace rbmlab
