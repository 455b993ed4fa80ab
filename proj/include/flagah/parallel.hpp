#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flagah {

enum class Exec { serial, parallel };

// Runs fn(i) for i in [0, n). In parallel mode iterations are distributed
// over OpenMP threads; fn must only touch its own slot of any shared output.
template <class Fn>
void parallel_for(long n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)exec;
#endif
  for (long i = 0; i < n; ++i) fn(i);
}

// Scans eval(i) over [0, n) and returns the lowest index reporting a failure,
// with its payload. Deterministic under both execution modes: the minimum
// index wins regardless of thread interleaving.
template <class Payload, class Eval>
std::optional<std::pair<long, Payload>> scan_first_fail(long n, Exec exec, Eval&& eval) {
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) {
      if (auto p = eval(i)) return std::make_pair(i, std::move(*p));
    }
    return std::nullopt;
  }
  std::atomic<long> best{n};
  std::optional<Payload> payload;
  std::mutex mu;
  parallel_for(n, Exec::parallel, [&](long i) {
    if (i >= best.load(std::memory_order_relaxed)) return;
    auto p = eval(i);
    if (!p) return;
    std::lock_guard<std::mutex> lock(mu);
    if (i < best.load(std::memory_order_relaxed)) {
      best.store(i, std::memory_order_relaxed);
      payload = std::move(*p);
    }
  });
  if (best.load() < n) return std::make_pair(best.load(), std::move(*payload));
  return std::nullopt;
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// deterministic per-configuration seed derivation (splitmix64 steps)
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace flagah
