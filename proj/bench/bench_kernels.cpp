// Compares the OpenMP kernels against the serial reference implementations
// on the two scan-heavy workloads: the Gray-Hervella classification scan and
// the codifferential sweep. Results must agree exactly; timing is wall clock.

#include <chrono>
#include <cstdio>

#include "flagah/classify.hpp"

using namespace flagah;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

AHStructure kaehler_structure(Family fam, int rank) {
  // lambda linear in the simple coordinates: additive over root sums, so the
  // canonical structure is Kaehler and every class scan runs to completion
  auto rs = RootSystem::build(fam, rank);
  auto wb = WeylBasis::build(rs);
  FlagManifold f = FlagManifold::build(wb, {});
  InvariantMetric g;
  IACS j;
  for (const auto& cls : f.summands()) {
    g.lambda.emplace_back(f.rs().root(cls.front()).height());
    j.epsilon.push_back(1);
  }
  return AHStructure::build(std::move(f), std::move(g), std::move(j));
}

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, seconds(t0, t1));
  }
  return best;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", hardware_threads());
  std::printf("%-44s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

  {
    const AHStructure s = kaehler_structure(Family::B, 3);  // dim 18, full scans
    ClassReport serial_rep, parallel_rep;
    const double ts = time_best_of(3, [&] { serial_rep = classify_serial(s); });
    const double tp = time_best_of(3, [&] { parallel_rep = classify(s, Exec::parallel); });
    std::printf("%-44s %10.3f %10.3f %8.2fx %s\n", "classify scan, B3 maximal flag", ts, tp,
                ts / tp, serial_rep == parallel_rep ? "(reports equal)" : "(MISMATCH!)");
  }
  {
    const AHStructure s = kaehler_structure(Family::A, 4);  // dim 20
    ClassReport serial_rep, parallel_rep;
    const double ts = time_best_of(3, [&] { serial_rep = classify_serial(s); });
    const double tp = time_best_of(3, [&] { parallel_rep = classify(s, Exec::parallel); });
    std::printf("%-44s %10.3f %10.3f %8.2fx %s\n", "classify scan, A4 maximal flag", ts, tp,
                ts / tp, serial_rep == parallel_rep ? "(reports equal)" : "(MISMATCH!)");
  }
  {
    std::optional<AskViolation> v1, v2;
    const double ts =
        time_best_of(2, [&] { sweep_ask_rank(Family::B, 3, 2, 7, Exec::serial, v1); });
    const double tp =
        time_best_of(2, [&] { sweep_ask_rank(Family::B, 3, 2, 7, Exec::parallel, v2); });
    std::printf("%-44s %10.3f %10.3f %8.2fx %s\n", "codifferential sweep, B3, 2 samples", ts,
                tp, ts / tp,
                v1.has_value() == v2.has_value() ? "(results equal)" : "(MISMATCH!)");
  }
  return 0;
}
