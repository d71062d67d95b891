#ifndef PARHYP_PARALLEL_HPP
#define PARHYP_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace parhyp {

// Thread cap from PARHYP_THREADS (0 or unset = auto).
inline unsigned thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("PARHYP_THREADS");
  if (!env) return hw;
  long v = std::strtol(env, nullptr, 10);
  if (v <= 0) return hw;
  return static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
}

// Runs fn(i) for i in [0, count) over a fixed block partition; results must
// be written to disjoint slots so the schedule cannot affect the output.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  unsigned threads = thread_cap();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (threads > count) threads = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = count * t / threads, hi = count * (t + 1) / threads;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace parhyp

#endif
