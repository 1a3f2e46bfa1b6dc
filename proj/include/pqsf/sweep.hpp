#ifndef PQSF_SWEEP_HPP
#define PQSF_SWEEP_HPP

// Randomized falsification sweeps over the inequality checkers.
//
// Sampling is driven by an explicit seed and a fixed per-checker
// sub-stream, so a report is a pure function of (GridSpec, checker
// set): running twice, running one checker alone, or running the
// parallel variant all reproduce bit-identical verdicts.  Parameters
// are drawn uniformly from the configured ranges and rejected until
// the checker's preconditions hold; a case that fails rejection 1000
// times in a row is recorded as skipped rather than aborting the sweep.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "pqsf/quadrature.hpp"
#include "pqsf/verify.hpp"

namespace pqsf {

enum class CheckerId {
  kChebyshevProduct,
  kLogconvexPq,
  kTuranPq,
  kLogconvexArgs,
  kShiftedSquare,
  kRatioMonotone,
  kContiguousProduct,
  kLogconvexZ,
  kPhiLogconvexPq,
  kBetaRatioDecreasing,
  kRemarkTuran,
};

inline constexpr int kCheckerCount = 11;

// All checker names in CheckerId order.
const std::vector<std::string_view>& checker_names();
std::string_view checker_name(CheckerId id);
std::optional<CheckerId> checker_from_name(std::string_view name);

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

// Sampling ranges for every free parameter, the per-checker sample
// count, and the RNG seed.  Weight parameters (the convex-combination
// alpha/c) are always drawn from [0, 1].
struct GridSpec {
  Range x{0.5, 5.0};
  Range y{0.5, 5.0};
  Range p{0.0, 2.0};
  Range q{0.0, 2.0};
  Range beta{0.25, 3.0};
  Range gamma{0.5, 6.0};
  Range delta{0.5, 6.0};
  Range sigma{0.05, 1.0};
  Range z{-4.0, 4.0};
  Range a{-0.75, 0.75};
  Range b{-0.75, 0.75};
  int n = 100;                 // cases per checker
  std::uint64_t seed = 42;
  QuadratureConfig quad;
};

struct SweepReport {
  std::vector<InequalityVerdict> verdicts;  // in sample order
  int holds = 0;
  int inconclusive = 0;
  int violated = 0;
  int skipped = 0;
};

// Count one report's verdicts into another (used to merge per-checker
// summaries); only the counters of `into` change.
void tally(SweepReport& into, const InequalityVerdict& v);

// Serial reference sweeps.
SweepReport run_suite(const GridSpec& grid);
SweepReport run_suite(const GridSpec& grid, CheckerId only);

// OpenMP-parallel sweeps over the same deterministic case list;
// threads <= 0 means the runtime default.  Falls back to serial
// execution when built without OpenMP.  Output is bit-identical to the
// serial variant.
SweepReport run_suite_parallel(const GridSpec& grid, int threads = 0);
SweepReport run_suite_parallel(const GridSpec& grid, CheckerId only,
                               int threads = 0);

// Writes the per-case CSV: header
// case_id,checker,params_json,lhs,rhs,margin,error_budget,status
// with numbers at 17 significant digits and LF line endings.
void write_verify_csv(const SweepReport& report, std::ostream& out);

}  // namespace pqsf

#endif  // PQSF_SWEEP_HPP
