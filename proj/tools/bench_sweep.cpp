// bench_sweep: times the serial verification sweep against the
// OpenMP-parallel one on the same deterministic case list and checks
// that both produce bit-identical verdicts.
//
//   bench_sweep [cases-per-checker] [seed]
//
// Exits nonzero if the two reports differ.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "pqsf/sweep.hpp"

namespace {

double bit(double v) { return v; }

bool same_verdict(const pqsf::InequalityVerdict& a,
                  const pqsf::InequalityVerdict& b) {
  if (a.checker != b.checker || a.status != b.status ||
      a.params != b.params) {
    return false;
  }
  // Compare the numeric fields bit for bit (NaN == NaN included).
  auto same = [](double x, double y) {
    std::uint64_t ux, uy;
    static_assert(sizeof ux == sizeof x);
    std::memcpy(&ux, &x, sizeof ux);
    std::memcpy(&uy, &y, sizeof uy);
    return ux == uy;
  };
  return same(bit(a.lhs), bit(b.lhs)) && same(a.rhs, b.rhs) &&
         same(a.margin, b.margin) && same(a.error_budget, b.error_budget);
}

}  // namespace

int main(int argc, char** argv) {
  pqsf::GridSpec grid;
  grid.n = argc > 1 ? std::atoi(argv[1]) : 40;
  grid.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;

  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  pqsf::SweepReport serial = pqsf::run_suite(grid);
  auto t1 = clock::now();
  pqsf::SweepReport parallel = pqsf::run_suite_parallel(grid);
  auto t2 = clock::now();

  double serial_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  double parallel_ms =
      std::chrono::duration<double, std::milli>(t2 - t1).count();

  bool identical = serial.verdicts.size() == parallel.verdicts.size() &&
                   serial.holds == parallel.holds &&
                   serial.inconclusive == parallel.inconclusive &&
                   serial.violated == parallel.violated &&
                   serial.skipped == parallel.skipped;
  if (identical) {
    for (std::size_t i = 0; i < serial.verdicts.size(); ++i) {
      if (!same_verdict(serial.verdicts[i], parallel.verdicts[i])) {
        identical = false;
        break;
      }
    }
  }

  std::printf("cases       %zu\n", serial.verdicts.size());
  std::printf("serial_ms   %.1f\n", serial_ms);
  std::printf("parallel_ms %.1f\n", parallel_ms);
  std::printf("speedup     %.2fx\n",
              parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0);
  std::printf("identical   %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
