#include "pqsf/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

namespace pqsf {

namespace {

constexpr int kRejectionCap = 1000;
constexpr int kMonotonePoints = 8;

// Uniform doubles from a seeded mt19937_64, mapped explicitly so the
// sequence does not depend on the standard library's distribution
// implementation.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(const Range& r) { return r.lo + (r.hi - r.lo) * unit(); }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 finalizer; gives every checker its own decorrelated
// sub-stream of the sweep seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

bool beta_admissible(double x, double y, double p, double q) {
  return (p > 0.0 || x > 0.0) && (q > 0.0 || y > 0.0);
}

// One sampled-but-not-yet-evaluated case.  The slot meanings of `v`
// are fixed per checker by attempt_case/evaluate_case below.
struct PendingCase {
  CheckerId id;
  bool skipped = false;
  std::array<double, 8> v{};
};

// Draws one full parameter tuple and reports whether it satisfies the
// checker's preconditions.  Every attempt consumes a fixed number of
// draws for its checker, so the rejection loop is deterministic.
bool attempt_case(CheckerId id, SampleRng& rng, const GridSpec& g,
                  std::array<double, 8>& v) {
  switch (id) {
    case CheckerId::kChebyshevProduct: {
      const double x = rng.uniform(g.x);
      const double y = rng.uniform(g.y);
      const double x1 = rng.uniform(g.x);
      const double y1 = rng.uniform(g.y);
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      v = {x, y, x1, y1, p, q, 0.0, 0.0};
      return (x - x1) * (y - y1) >= 0.0 &&
             beta_admissible(x, y, p, q) && beta_admissible(x1, y1, p, q) &&
             beta_admissible(x, y1, p, q) && beta_admissible(x1, y, p, q);
    }
    case CheckerId::kLogconvexPq: {
      const double x = rng.uniform(g.x);
      const double y = rng.uniform(g.y);
      const double p1 = rng.uniform(g.p);
      const double q1 = rng.uniform(g.q);
      const double p2 = rng.uniform(g.p);
      const double q2 = rng.uniform(g.q);
      const double alpha = rng.unit();
      v = {x, y, p1, q1, p2, q2, alpha, 0.0};
      return beta_admissible(x, y, std::min(p1, p2), std::min(q1, q2));
    }
    case CheckerId::kTuranPq: {
      const double x = rng.uniform(g.x);
      const double y = rng.uniform(g.y);
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      const double a = rng.uniform(g.a);
      v = {x, y, p, q, a, 0.0, 0.0, 0.0};
      const double pmin = std::min(p - a, p + a);
      const double qmin = std::min(q - a, q + a);
      return pmin >= 0.0 && qmin >= 0.0 && beta_admissible(x, y, pmin, qmin);
    }
    case CheckerId::kLogconvexArgs: {
      const double x1 = rng.uniform(g.x);
      const double y1 = rng.uniform(g.y);
      const double x2 = rng.uniform(g.x);
      const double y2 = rng.uniform(g.y);
      const double c = rng.unit();
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      v = {x1, y1, x2, y2, c, p, q, 0.0};
      return beta_admissible(x1, y1, p, q) && beta_admissible(x2, y2, p, q);
    }
    case CheckerId::kShiftedSquare: {
      const double x = rng.uniform(g.x);
      const double y = rng.uniform(g.y);
      const double a = rng.uniform(g.a);
      const double b = rng.uniform(g.b);
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      v = {x, y, a, b, p, q, 0.0, 0.0};
      const bool okp = p > 0.0 || (x > 0.0 && x - a > 0.0 && x + a > 0.0);
      const bool okq = q > 0.0 || (y > 0.0 && y - b > 0.0 && y + b > 0.0);
      return okp && okq;
    }
    case CheckerId::kRatioMonotone: {
      const double beta = rng.uniform(g.beta);
      const double gamma = rng.uniform(g.gamma);
      const double delta = rng.uniform(g.delta);
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      const double z1 = rng.uniform(g.z);
      const double z2 = rng.uniform(g.z);
      v = {beta,  gamma, delta, p, q, std::min(z1, z2), std::max(z1, z2),
           0.0};
      return beta > 0.0 && delta > beta && gamma >= delta && z1 > 0.0 &&
             z2 > 0.0 && z1 != z2;
    }
    case CheckerId::kContiguousProduct: {
      const double beta = rng.uniform(g.beta);
      const double gamma = rng.uniform(g.gamma);
      const double delta = rng.uniform(g.delta);
      const double z = rng.uniform(g.z);
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      v = {beta, gamma, delta, z, p, q, 0.0, 0.0};
      return beta > 0.0 && delta > beta && gamma >= delta && z > 0.0;
    }
    case CheckerId::kLogconvexZ: {
      const double beta = rng.uniform(g.beta);
      const double gamma = rng.uniform(g.gamma);
      const double z1 = rng.uniform(g.z);
      const double z2 = rng.uniform(g.z);
      const double alpha = rng.unit();
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      v = {beta, gamma, z1, z2, alpha, p, q, 0.0};
      // Same-sign z pairs only; the mixed-sign regime is exercised as a
      // logged experiment in the tests, not asserted here.
      return gamma > beta && beta > 0.0 && z1 * z2 > 0.0;
    }
    case CheckerId::kPhiLogconvexPq: {
      const double beta = rng.uniform(g.beta);
      const double gamma = rng.uniform(g.gamma);
      const double z = rng.uniform(g.z);
      const double p1 = rng.uniform(g.p);
      const double q1 = rng.uniform(g.q);
      const double p2 = rng.uniform(g.p);
      const double q2 = rng.uniform(g.q);
      const double alpha = rng.unit();
      v = {beta, gamma, z, p1, q1, p2, q2, alpha};
      return gamma > beta && beta > 0.0 && z > 0.0 && p1 > 0.0 && q1 > 0.0 &&
             p2 > 0.0 && q2 > 0.0;
    }
    case CheckerId::kBetaRatioDecreasing: {
      const double b1 = rng.uniform(g.beta);
      const double b2 = rng.uniform(g.beta);
      const double gamma = rng.uniform(g.gamma);
      const double sigma = rng.uniform(g.sigma);
      const double z = rng.uniform(g.z);
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      const double lo = std::min(b1, b2);
      const double hi = std::max(b1, b2);
      v = {lo, hi, gamma, sigma, z, p, q, 0.0};
      return lo > 0.0 && lo != hi && sigma >= 0.0 && gamma > hi + sigma &&
             z > 0.0;
    }
    case CheckerId::kRemarkTuran: {
      const double beta = rng.uniform(g.beta);
      const double gamma = rng.uniform(g.gamma);
      const double sigma = rng.uniform(g.sigma);
      const double z = rng.uniform(g.z);
      const double p = rng.uniform(g.p);
      const double q = rng.uniform(g.q);
      v = {beta, gamma, sigma, z, p, q, 0.0, 0.0};
      return beta > 0.0 && sigma >= 0.0 && gamma > beta + 2.0 * sigma &&
             z > 0.0;
    }
  }
  return false;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int j = 0; j < points; ++j) {
    grid[static_cast<std::size_t>(j)] =
        std::exp(llo + (lhi - llo) * j / (points - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

InequalityVerdict evaluate_case(const PendingCase& c,
                                const QuadratureConfig& cfg) {
  const auto& v = c.v;
  switch (c.id) {
    case CheckerId::kChebyshevProduct:
      return check_chebyshev_product(v[0], v[1], v[2], v[3], {v[4], v[5]},
                                     cfg);
    case CheckerId::kLogconvexPq:
      return check_logconvex_pq(v[0], v[1], v[2], v[3], v[4], v[5], v[6], cfg);
    case CheckerId::kTuranPq:
      return check_turan_pq(v[0], v[1], {v[2], v[3]}, v[4], cfg);
    case CheckerId::kLogconvexArgs:
      return check_logconvex_args(v[0], v[1], v[2], v[3], v[4], {v[5], v[6]},
                                  cfg);
    case CheckerId::kShiftedSquare:
      return check_shifted_square(v[0], v[1], {v[4], v[5]},
                                  {v[2], v[3], 0.0}, cfg);
    case CheckerId::kRatioMonotone:
      return check_ratio_monotone(v[0], v[1], v[2], {v[3], v[4]},
                                  log_grid(v[5], v[6], kMonotonePoints), cfg);
    case CheckerId::kContiguousProduct:
      return check_contiguous_product(v[0], v[1], v[2], {v[4], v[5]}, v[3],
                                      cfg);
    case CheckerId::kLogconvexZ:
      return check_logconvex_z(v[0], v[1], v[2], v[3], v[4], {v[5], v[6]},
                               cfg);
    case CheckerId::kPhiLogconvexPq:
      return check_phi_logconvex_pq({v[0], v[1], v[2]}, v[3], v[4], v[5],
                                    v[6], v[7], cfg);
    case CheckerId::kBetaRatioDecreasing:
      return check_beta_ratio_decreasing(log_grid(v[0], v[1], kMonotonePoints),
                                         v[2], v[3], {v[5], v[6]}, v[4], cfg);
    case CheckerId::kRemarkTuran:
      return check_remark_turan(v[0], v[1], v[2], {v[4], v[5]}, v[3], cfg);
  }
  throw std::logic_error("evaluate_case: unknown checker");
}

InequalityVerdict skipped_verdict(CheckerId id) {
  InequalityVerdict v;
  v.checker = std::string(checker_name(id));
  v.status = VerdictStatus::kSkipped;
  return v;
}

// Evaluation failures (a precondition or domain error on a sampled
// case) are recorded as skipped outcomes: a sweep never aborts on a
// per-case problem.
InequalityVerdict safe_evaluate(const PendingCase& c,
                                const QuadratureConfig& cfg) {
  if (c.skipped) {
    return skipped_verdict(c.id);
  }
  try {
    return evaluate_case(c, cfg);
  } catch (const std::exception&) {
    return skipped_verdict(c.id);
  }
}

void validate_range(const Range& r, const char* name) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
    throw std::invalid_argument(std::string("sweep: invalid range for ") +
                                name);
  }
}

void validate_grid(const GridSpec& g) {
  validate_range(g.x, "x");
  validate_range(g.y, "y");
  validate_range(g.p, "p");
  validate_range(g.q, "q");
  validate_range(g.beta, "beta");
  validate_range(g.gamma, "gamma");
  validate_range(g.delta, "delta");
  validate_range(g.sigma, "sigma");
  validate_range(g.z, "z");
  validate_range(g.a, "a");
  validate_range(g.b, "b");
  if (g.n < 0) {
    throw std::invalid_argument("sweep: sample count must be >= 0");
  }
}

std::vector<PendingCase> sample_cases(const GridSpec& grid,
                                      const std::vector<CheckerId>& ids) {
  std::vector<PendingCase> out;
  out.reserve(ids.size() * static_cast<std::size_t>(grid.n));
  for (CheckerId id : ids) {
    SampleRng rng(mix_seed(grid.seed, static_cast<std::uint64_t>(id)));
    for (int j = 0; j < grid.n; ++j) {
      PendingCase c{id, false, {}};
      bool ok = false;
      for (int attempt = 0; attempt < kRejectionCap && !ok; ++attempt) {
        ok = attempt_case(id, rng, grid, c.v);
      }
      c.skipped = !ok;
      out.push_back(c);
    }
  }
  return out;
}

SweepReport assemble(std::vector<InequalityVerdict>&& verdicts) {
  SweepReport report;
  report.verdicts = std::move(verdicts);
  for (const InequalityVerdict& v : report.verdicts) {
    tally(report, v);
  }
  return report;
}

SweepReport run_cases(const GridSpec& grid, const std::vector<CheckerId>& ids,
                      bool parallel, int threads) {
  validate_grid(grid);
  const std::vector<PendingCase> pending = sample_cases(grid, ids);
  std::vector<InequalityVerdict> verdicts(pending.size());
#ifdef _OPENMP
  if (parallel) {
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pending.size());
         ++i) {
      verdicts[static_cast<std::size_t>(i)] =
          safe_evaluate(pending[static_cast<std::size_t>(i)], grid.quad);
    }
    return assemble(std::move(verdicts));
  }
#else
  (void)parallel;
  (void)threads;
#endif
  for (std::size_t i = 0; i < pending.size(); ++i) {
    verdicts[i] = safe_evaluate(pending[i], grid.quad);
  }
  return assemble(std::move(verdicts));
}

std::vector<CheckerId> all_checkers() {
  std::vector<CheckerId> ids;
  ids.reserve(kCheckerCount);
  for (int i = 0; i < kCheckerCount; ++i) {
    ids.push_back(static_cast<CheckerId>(i));
  }
  return ids;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char ch : s) {
    if (ch == '"') {
      out.push_back('"');
    }
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

const std::vector<std::string_view>& checker_names() {
  static const std::vector<std::string_view> names = {
      "chebyshev_product", "logconvex_pq",        "turan_pq",
      "logconvex_args",    "shifted_square",      "ratio_monotone",
      "contiguous_product", "logconvex_z",        "phi_logconvex_pq",
      "beta_ratio_decreasing", "remark_turan",
  };
  return names;
}

std::string_view checker_name(CheckerId id) {
  return checker_names()[static_cast<std::size_t>(id)];
}

std::optional<CheckerId> checker_from_name(std::string_view name) {
  const auto& names = checker_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) {
      return static_cast<CheckerId>(i);
    }
  }
  return std::nullopt;
}

void tally(SweepReport& into, const InequalityVerdict& v) {
  switch (v.status) {
    case VerdictStatus::kHolds:
      ++into.holds;
      break;
    case VerdictStatus::kViolated:
      ++into.violated;
      break;
    case VerdictStatus::kInconclusive:
      ++into.inconclusive;
      break;
    case VerdictStatus::kSkipped:
      ++into.skipped;
      break;
  }
}

SweepReport run_suite(const GridSpec& grid) {
  return run_cases(grid, all_checkers(), /*parallel=*/false, 0);
}

SweepReport run_suite(const GridSpec& grid, CheckerId only) {
  return run_cases(grid, {only}, /*parallel=*/false, 0);
}

SweepReport run_suite_parallel(const GridSpec& grid, int threads) {
  return run_cases(grid, all_checkers(), /*parallel=*/true, threads);
}

SweepReport run_suite_parallel(const GridSpec& grid, CheckerId only,
                               int threads) {
  return run_cases(grid, {only}, /*parallel=*/true, threads);
}

void write_verify_csv(const SweepReport& report, std::ostream& out) {
  out << "case_id,checker,params_json,lhs,rhs,margin,error_budget,status\n";
  for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
    const InequalityVerdict& v = report.verdicts[i];
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : v.params) {
      params[key] = value;
    }
    out << i << ',' << v.checker << ',' << csv_quote(params.dump()) << ',';
    if (v.status == VerdictStatus::kSkipped) {
      out << ",,,";
    } else {
      out << format_double(v.lhs) << ',' << format_double(v.rhs) << ','
          << format_double(v.margin) << ',' << format_double(v.error_budget);
    }
    out << ',' << to_string(v.status) << '\n';
  }
}

}  // namespace pqsf
