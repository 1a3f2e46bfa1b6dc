#include "pqsf/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "pqsf/special_core.hpp"

namespace pqsf {

namespace {

constexpr double kBudgetFloor = 1e-14;
// Relative rounding allowance assigned to classical (non-quadrature)
// beta evaluations entering a budget.
constexpr double kClassicalRel = 1e-14;

// First-order error budget: k quantities entering the two sides, each
// contributing its relative error estimate.
class BudgetAcc {
 public:
  void add(const QuadratureResult& r) {
    ++count_;
    if (r.value != 0.0) {
      sum_rel_ += std::abs(r.error_estimate / r.value);
    } else {
      sum_rel_ += 1.0;  // no usable relative error; swamp the budget
    }
  }
  void add_classical(double /*value*/) {
    ++count_;
    sum_rel_ += kClassicalRel;
  }
  double budget(double lhs, double rhs) const {
    return count_ * sum_rel_ * std::min(std::abs(lhs), std::abs(rhs)) +
           kBudgetFloor;
  }

 private:
  int count_ = 0;
  double sum_rel_ = 0.0;
};

// Memoized B_{p,q} evaluations within one checker call.  Repeated
// argument pairs (the analytically-forced equality edges: a = 0,
// alpha in {0,1}, coinciding pairs) then share one result bit for bit,
// so their margins come out exactly zero.
class BetaCache {
 public:
  explicit BetaCache(const QuadratureConfig& config) : config_(config) {}

  const QuadratureResult& at(double x, double y, const ExtensionParams& ext) {
    const std::array<double, 4> key{x, y, ext.p, ext.q};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, extended_beta(x, y, ext, config_)).first;
    }
    return it->second;
  }

 private:
  QuadratureConfig config_;
  std::map<std::array<double, 4>, QuadratureResult> cache_;
};

// Same idea for Phi_{p,q} evaluations.
class PhiCache {
 public:
  explicit PhiCache(const QuadratureConfig& config) : config_(config) {}

  const QuadratureResult& at(double beta, double gamma, double z,
                             const ExtensionParams& ext) {
    const std::array<double, 5> key{beta, gamma, z, ext.p, ext.q};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(
                     key, phi_integral({beta, gamma, z}, ext, config_))
               .first;
    }
    return it->second;
  }

 private:
  QuadratureConfig config_;
  std::map<std::array<double, 5>, QuadratureResult> cache_;
};

using Params = std::vector<std::pair<std::string, double>>;

InequalityVerdict make_verdict(const char* checker, Params params, double lhs,
                               double rhs, double margin, double budget) {
  InequalityVerdict v;
  v.checker = checker;
  v.params = std::move(params);
  v.lhs = lhs;
  v.rhs = rhs;
  v.margin = margin;
  v.error_budget = budget;
  v.status = classify(margin, budget);
  return v;
}

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw std::invalid_argument(message);
  }
}

void require_weight(double alpha, const char* checker) {
  require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0,
          std::string(checker) + ": weight must lie in [0,1], got " +
              std::to_string(alpha));
}

void require_grid(const std::vector<double>& grid, const char* checker,
                  bool positive) {
  require(grid.size() >= 2,
          std::string(checker) + ": grid needs at least 2 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(std::isfinite(grid[i]) && (!positive || grid[i] > 0.0),
            std::string(checker) + ": grid points must be finite" +
                (positive ? " and > 0" : ""));
    if (i > 0) {
      require(grid[i] > grid[i - 1],
              std::string(checker) + ": grid must be strictly ascending");
    }
  }
}

}  // namespace

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kHolds:
      return "holds";
    case VerdictStatus::kViolated:
      return "violated";
    case VerdictStatus::kInconclusive:
      return "inconclusive";
    case VerdictStatus::kSkipped:
      return "skipped";
  }
  return "inconclusive";
}

VerdictStatus classify(double margin, double error_budget) {
  if (std::isnan(margin) || std::isnan(error_budget)) {
    return VerdictStatus::kInconclusive;
  }
  if (margin >= error_budget) {
    return VerdictStatus::kHolds;
  }
  if (margin <= -error_budget) {
    return VerdictStatus::kViolated;
  }
  return VerdictStatus::kInconclusive;
}

InequalityVerdict check_chebyshev_product(double x, double y, double x1,
                                          double y1,
                                          const ExtensionParams& ext,
                                          const QuadratureConfig& config) {
  require((x - x1) * (y - y1) >= 0.0,
          "chebyshev_product: shifts must be similarly ordered, "
          "(x-x1)(y-y1) >= 0");
  BetaCache cache(config);
  const QuadratureResult& b_matched_1 = cache.at(x1, y1, ext);
  const QuadratureResult& b_matched_2 = cache.at(x, y, ext);
  const QuadratureResult& b_mixed_1 = cache.at(x, y1, ext);
  const QuadratureResult& b_mixed_2 = cache.at(x1, y, ext);

  const double lhs = b_matched_1.value * b_matched_2.value;
  const double rhs = b_mixed_1.value * b_mixed_2.value;
  BudgetAcc acc;
  acc.add(b_matched_1);
  acc.add(b_matched_2);
  acc.add(b_mixed_1);
  acc.add(b_mixed_2);
  return make_verdict("chebyshev_product",
                      {{"x", x},
                       {"y", y},
                       {"x1", x1},
                       {"y1", y1},
                       {"p", ext.p},
                       {"q", ext.q}},
                      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_logconvex_pq(double x, double y, double p1, double q1,
                                     double p2, double q2, double alpha,
                                     const QuadratureConfig& config) {
  require_weight(alpha, "logconvex_pq");
  const double pm = alpha * p1 + (1.0 - alpha) * p2;
  const double qm = alpha * q1 + (1.0 - alpha) * q2;
  BetaCache cache(config);
  const QuadratureResult& r1 = cache.at(x, y, {p1, q1});
  const QuadratureResult& r2 = cache.at(x, y, {p2, q2});
  const QuadratureResult& rm = cache.at(x, y, {pm, qm});

  const double lhs = rm.value;
  const double rhs = std::pow(r1.value, alpha) * std::pow(r2.value, 1.0 - alpha);
  BudgetAcc acc;
  acc.add(rm);
  acc.add(r1);
  acc.add(r2);
  return make_verdict("logconvex_pq",
                      {{"x", x},
                       {"y", y},
                       {"p1", p1},
                       {"q1", q1},
                       {"p2", p2},
                       {"q2", q2},
                       {"alpha", alpha}},
                      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_turan_pq(double x, double y,
                                 const ExtensionParams& ext, double a,
                                 const QuadratureConfig& config) {
  require(std::isfinite(a), "turan_pq: shift must be finite");
  require(ext.p - a >= 0.0 && ext.q - a >= 0.0 && ext.p + a >= 0.0 &&
              ext.q + a >= 0.0,
          "turan_pq: infeasible shift, need p+-a >= 0 and q+-a >= 0");
  BetaCache cache(config);
  const QuadratureResult& mid = cache.at(x, y, ext);
  const QuadratureResult& up = cache.at(x, y, {ext.p + a, ext.q + a});
  const QuadratureResult& down = cache.at(x, y, {ext.p - a, ext.q - a});

  const double lhs = mid.value * mid.value;
  const double rhs = up.value * down.value;
  BudgetAcc acc;
  acc.add(mid);
  acc.add(mid);
  acc.add(up);
  acc.add(down);
  return make_verdict(
      "turan_pq",
      {{"x", x}, {"y", y}, {"p", ext.p}, {"q", ext.q}, {"a", a}}, lhs, rhs,
      rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_logconvex_args(double x1, double y1, double x2,
                                       double y2, double c,
                                       const ExtensionParams& ext,
                                       const QuadratureConfig& config) {
  require_weight(c, "logconvex_args");
  const double d = 1.0 - c;
  const double xm = c * x1 + d * x2;
  const double ym = c * y1 + d * y2;
  BetaCache cache(config);
  const QuadratureResult& r1 = cache.at(x1, y1, ext);
  const QuadratureResult& r2 = cache.at(x2, y2, ext);
  const QuadratureResult& rm = cache.at(xm, ym, ext);

  const double lhs = rm.value;
  const double rhs = std::pow(r1.value, c) * std::pow(r2.value, d);
  BudgetAcc acc;
  acc.add(rm);
  acc.add(r1);
  acc.add(r2);
  return make_verdict("logconvex_args",
                      {{"x1", x1},
                       {"y1", y1},
                       {"x2", x2},
                       {"y2", y2},
                       {"c", c},
                       {"p", ext.p},
                       {"q", ext.q}},
                      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_shifted_square(double x, double y,
                                       const ExtensionParams& ext,
                                       const ShiftParams& shifts,
                                       const QuadratureConfig& config) {
  const double a = shifts.a;
  const double b = shifts.b;
  require(std::isfinite(a) && std::isfinite(b),
          "shifted_square: shifts must be finite");
  if (ext.p == 0.0) {
    require(x + a > 0.0 && x - a > 0.0,
            "shifted_square: infeasible shift, x+-a must be > 0 when p = 0");
  }
  if (ext.q == 0.0) {
    require(y + b > 0.0 && y - b > 0.0,
            "shifted_square: infeasible shift, y+-b must be > 0 when q = 0");
  }
  BetaCache cache(config);
  const QuadratureResult& mid = cache.at(x, y, ext);
  const QuadratureResult& up = cache.at(x + a, y + b, ext);
  const QuadratureResult& down = cache.at(x - a, y - b, ext);

  const double lhs = mid.value * mid.value;
  const double rhs = up.value * down.value;
  BudgetAcc acc;
  acc.add(mid);
  acc.add(mid);
  acc.add(up);
  acc.add(down);
  return make_verdict(
      "shifted_square",
      {{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"p", ext.p}, {"q", ext.q}},
      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_ratio_monotone(double beta, double gamma, double delta,
                                       const ExtensionParams& ext,
                                       const std::vector<double>& z_grid,
                                       const QuadratureConfig& config) {
  require(beta > 0.0 && delta > beta && gamma >= delta,
          "ratio_monotone: requires gamma >= delta > beta > 0");
  require_grid(z_grid, "ratio_monotone", /*positive=*/true);

  PhiCache cache(config);
  struct Point {
    const QuadratureResult* num;
    const QuadratureResult* den;
    double ratio;
  };
  std::vector<Point> pts(z_grid.size());
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const QuadratureResult& num = cache.at(beta, gamma, z_grid[i], ext);
    const QuadratureResult& den = cache.at(beta, delta, z_grid[i], ext);
    pts[i] = {&num, &den, num.value / den.value};
  }

  // Claim per step: ratio(z_i) >= ratio(z_{i+1}).  Report the step with
  // the smallest difference, i.e. the closest call.
  std::size_t worst = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double m = pts[i].ratio - pts[i + 1].ratio;
    if (m < worst_margin) {
      worst_margin = m;
      worst = i;
    }
  }
  BudgetAcc acc;
  acc.add(*pts[worst].num);
  acc.add(*pts[worst].den);
  acc.add(*pts[worst + 1].num);
  acc.add(*pts[worst + 1].den);
  const double lhs = pts[worst + 1].ratio;
  const double rhs = pts[worst].ratio;
  return make_verdict("ratio_monotone",
                      {{"beta", beta},
                       {"gamma", gamma},
                       {"delta", delta},
                       {"p", ext.p},
                       {"q", ext.q},
                       {"z_lo", z_grid.front()},
                       {"z_hi", z_grid.back()},
                       {"z_points", static_cast<double>(z_grid.size())},
                       {"worst_z", z_grid[worst]}},
                      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_contiguous_product(double beta, double gamma,
                                           double delta,
                                           const ExtensionParams& ext,
                                           double z,
                                           const QuadratureConfig& config) {
  require(beta > 0.0 && delta > beta && gamma >= delta,
          "contiguous_product: requires gamma >= delta > beta > 0");
  require(std::isfinite(z), "contiguous_product: z must be finite");

  PhiCache cache(config);
  const QuadratureResult& up_g = cache.at(beta + 1.0, gamma + 1.0, z, ext);
  const QuadratureResult& lo_d = cache.at(beta, delta, z, ext);
  const QuadratureResult& lo_g = cache.at(beta, gamma, z, ext);
  const QuadratureResult& up_d = cache.at(beta + 1.0, delta + 1.0, z, ext);

  const double lhs = delta * (up_g.value * lo_d.value);
  const double rhs = gamma * (lo_g.value * up_d.value);
  BudgetAcc acc;
  acc.add(up_g);
  acc.add(lo_d);
  acc.add(lo_g);
  acc.add(up_d);
  return make_verdict("contiguous_product",
                      {{"beta", beta},
                       {"gamma", gamma},
                       {"delta", delta},
                       {"z", z},
                       {"p", ext.p},
                       {"q", ext.q}},
                      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_logconvex_z(double beta, double gamma, double z1,
                                    double z2, double alpha,
                                    const ExtensionParams& ext,
                                    const QuadratureConfig& config) {
  require_weight(alpha, "logconvex_z");
  const double zm = alpha * z1 + (1.0 - alpha) * z2;
  PhiCache cache(config);
  const QuadratureResult& r1 = cache.at(beta, gamma, z1, ext);
  const QuadratureResult& r2 = cache.at(beta, gamma, z2, ext);
  const QuadratureResult& rm = cache.at(beta, gamma, zm, ext);

  const double lhs = rm.value;
  const double rhs =
      std::pow(r1.value, alpha) * std::pow(r2.value, 1.0 - alpha);
  BudgetAcc acc;
  acc.add(rm);
  acc.add(r1);
  acc.add(r2);
  return make_verdict("logconvex_z",
                      {{"beta", beta},
                       {"gamma", gamma},
                       {"z1", z1},
                       {"z2", z2},
                       {"alpha", alpha},
                       {"p", ext.p},
                       {"q", ext.q}},
                      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_phi_logconvex_pq(const ConfluentArgs& args, double p1,
                                         double q1, double p2, double q2,
                                         double alpha,
                                         const QuadratureConfig& config) {
  require_weight(alpha, "phi_logconvex_pq");
  require(args.z > 0.0, "phi_logconvex_pq: requires z > 0");
  require(p1 > 0.0 && q1 > 0.0 && p2 > 0.0 && q2 > 0.0,
          "phi_logconvex_pq: extension parameters must be > 0");
  const double pm = alpha * p1 + (1.0 - alpha) * p2;
  const double qm = alpha * q1 + (1.0 - alpha) * q2;
  PhiCache cache(config);
  const QuadratureResult& r1 = cache.at(args.beta, args.gamma, args.z, {p1, q1});
  const QuadratureResult& r2 = cache.at(args.beta, args.gamma, args.z, {p2, q2});
  const QuadratureResult& rm = cache.at(args.beta, args.gamma, args.z, {pm, qm});

  const double lhs = rm.value;
  const double rhs =
      std::pow(r1.value, alpha) * std::pow(r2.value, 1.0 - alpha);
  BudgetAcc acc;
  acc.add(rm);
  acc.add(r1);
  acc.add(r2);
  return make_verdict("phi_logconvex_pq",
                      {{"beta", args.beta},
                       {"gamma", args.gamma},
                       {"z", args.z},
                       {"p1", p1},
                       {"q1", q1},
                       {"p2", p2},
                       {"q2", q2},
                       {"alpha", alpha}},
                      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_beta_ratio_decreasing(
    const std::vector<double>& beta_grid, double gamma, double sigma,
    const ExtensionParams& ext, double z, const QuadratureConfig& config) {
  require(std::isfinite(sigma) && sigma >= 0.0,
          "beta_ratio_decreasing: requires sigma >= 0");
  require(z > 0.0, "beta_ratio_decreasing: requires z > 0");
  require_grid(beta_grid, "beta_ratio_decreasing", /*positive=*/true);
  require(gamma > beta_grid.back() + sigma,
          "beta_ratio_decreasing: requires gamma > beta + sigma over the "
          "whole grid");

  PhiCache cache(config);
  struct Point {
    const QuadratureResult* up;
    const QuadratureResult* lo;
    double b_lo;
    double b_up;
    double ratio;
    double literal;
  };
  std::vector<Point> pts(beta_grid.size());
  for (std::size_t i = 0; i < beta_grid.size(); ++i) {
    const double b = beta_grid[i];
    const QuadratureResult& up = cache.at(b + sigma, gamma, z, ext);
    const QuadratureResult& lo = cache.at(b, gamma, z, ext);
    const double b_lo = beta(b, gamma - b);
    const double b_up = beta(b + sigma, gamma - b - sigma);
    const double ratio = (b_lo / b_up) * (up.value / lo.value);
    // Same ratio with the unshifted-weight normalization
    // B(beta, gamma) / B(beta+sigma, gamma); recorded, never asserted.
    const double literal =
        (beta(b, gamma) / beta(b + sigma, gamma)) * (up.value / lo.value);
    pts[i] = {&up, &lo, b_lo, b_up, ratio, literal};
  }

  std::size_t worst = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double literal_min_step = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double m = pts[i].ratio - pts[i + 1].ratio;
    if (m < worst_margin) {
      worst_margin = m;
      worst = i;
    }
    literal_min_step =
        std::min(literal_min_step, pts[i].literal - pts[i + 1].literal);
  }
  BudgetAcc acc;
  acc.add(*pts[worst].up);
  acc.add(*pts[worst].lo);
  acc.add(*pts[worst + 1].up);
  acc.add(*pts[worst + 1].lo);
  acc.add_classical(pts[worst].b_lo);
  acc.add_classical(pts[worst].b_up);
  acc.add_classical(pts[worst + 1].b_lo);
  acc.add_classical(pts[worst + 1].b_up);
  const double lhs = pts[worst + 1].ratio;
  const double rhs = pts[worst].ratio;
  return make_verdict("beta_ratio_decreasing",
                      {{"gamma", gamma},
                       {"sigma", sigma},
                       {"z", z},
                       {"p", ext.p},
                       {"q", ext.q},
                       {"beta_lo", beta_grid.front()},
                       {"beta_hi", beta_grid.back()},
                       {"beta_points", static_cast<double>(beta_grid.size())},
                       {"worst_beta", beta_grid[worst]},
                       {"literal_min_step", literal_min_step}},
                      lhs, rhs, rhs - lhs, acc.budget(lhs, rhs));
}

InequalityVerdict check_remark_turan(double beta_arg, double gamma,
                                     double sigma, const ExtensionParams& ext,
                                     double z, const QuadratureConfig& config) {
  require(std::isfinite(sigma) && sigma >= 0.0,
          "remark_turan: requires sigma >= 0");
  require(beta_arg > 0.0 && gamma > beta_arg + 2.0 * sigma,
          "remark_turan: requires gamma > beta + 2*sigma > 0");
  require(z > 0.0, "remark_turan: requires z > 0");

  PhiCache cache(config);
  const QuadratureResult& mid = cache.at(beta_arg + sigma, gamma, z, ext);
  const QuadratureResult& hi = cache.at(beta_arg + 2.0 * sigma, gamma, z, ext);
  const QuadratureResult& lo = cache.at(beta_arg, gamma, z, ext);

  const double b_mid = beta(beta_arg + sigma, gamma - beta_arg - sigma);
  const double b_hi =
      beta(beta_arg + 2.0 * sigma, gamma - beta_arg - 2.0 * sigma);
  const double b_lo = beta(beta_arg, gamma - beta_arg);
  const double coeff = (b_mid * b_mid) / (b_hi * b_lo);

  const double lhs = mid.value * mid.value;
  const double rhs = coeff * (hi.value * lo.value);
  BudgetAcc acc;
  acc.add(mid);
  acc.add(mid);
  acc.add(hi);
  acc.add(lo);
  acc.add_classical(b_mid);
  acc.add_classical(b_mid);
  acc.add_classical(b_hi);
  acc.add_classical(b_lo);
  // ">=" claim: margin is lhs - rhs.
  return make_verdict("remark_turan",
                      {{"beta", beta_arg},
                       {"gamma", gamma},
                       {"sigma", sigma},
                       {"z", z},
                       {"p", ext.p},
                       {"q", ext.q}},
                      lhs, rhs, lhs - rhs, acc.budget(lhs, rhs));
}

}  // namespace pqsf
