#include "pqsf/quadrature.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

namespace pqsf {

namespace {

constexpr int kMaxTableLevel = 15;
constexpr double kPi = 3.14159265358979323846;

// One precomputed abscissa of the u -> t map.  For u > 0, t is near 1
// and tc near 0; the mirrored abscissa at -u is obtained by swapping
// (t, tc).  w is the Jacobian dt/du = pi * cosh(u) * t * tc.
struct TableNode {
  double t;
  double tc;
  double w;
};

std::vector<TableNode> build_level(int level) {
  // Level 0 holds the integer abscissas u = 0, 1, 2, ...; level k >= 1
  // holds the odd multiples of 2^-k.  Nodes stop once the complement tc
  // (and with it the weight) underflows: beyond that point every
  // integrand with an integrable endpoint singularity contributes
  // nothing representable.
  std::vector<TableNode> nodes;
  const double min_complement = 4.0 * std::numeric_limits<double>::min();
  const double h = std::ldexp(1.0, -level);
  for (int m = 0;; ++m) {
    const double u = (level == 0) ? static_cast<double>(m) : h * (2 * m + 1);
    const double theta = 0.5 * kPi * std::sinh(u);
    const double t = 1.0 / (1.0 + std::exp(-2.0 * theta));
    const double tc = 1.0 / (1.0 + std::exp(2.0 * theta));
    const double w = kPi * std::cosh(u) * t * tc;
    if (tc < min_complement || w < min_complement) {
      break;
    }
    nodes.push_back({t, tc, w});
  }
  return nodes;
}

const std::array<std::vector<TableNode>, kMaxTableLevel + 1>& tables() {
  static const auto tb = [] {
    std::array<std::vector<TableNode>, kMaxTableLevel + 1> t;
    for (int k = 0; k <= kMaxTableLevel; ++k) {
      t[k] = build_level(k);
    }
    return t;
  }();
  return tb;
}

void validate_config(const QuadratureConfig& c) {
  if (!std::isfinite(c.rel_tol) || c.rel_tol <= 0.0) {
    throw std::invalid_argument("quadrature: rel_tol must be finite and > 0");
  }
  if (std::isnan(c.abs_tol) || c.abs_tol < 0.0) {
    throw std::invalid_argument("quadrature: abs_tol must be >= 0");
  }
  if (c.min_level < 1 || c.min_level > c.max_level ||
      c.max_level > kMaxTableLevel) {
    throw std::invalid_argument(
        "quadrature: levels must satisfy 1 <= min_level <= max_level <= " +
        std::to_string(kMaxTableLevel));
  }
}

// Integrand values of one refinement level, in table order, so a
// captured grid can be assembled after the final level is known.
struct LevelValues {
  std::vector<double> fplus;   // f(t, tc)
  std::vector<double> fminus;  // f(tc, t); unused for the center node
};

QuadratureResult run_levels(const UnitIntegrand& f,
                            const QuadratureConfig& cfg,
                            CapturedGrid* capture) {
  validate_config(cfg);
  const auto& tb = tables();
  QuadratureResult res;

  std::vector<LevelValues> saved;
  if (capture != nullptr) {
    saved.reserve(static_cast<std::size_t>(cfg.max_level) + 1);
  }

  auto eval = [&](double t, double tc) {
    const double v = f(t, tc);
    ++res.evaluations;
    if (!std::isfinite(v)) {
      throw integrand_error(t);
    }
    return v;
  };

  // lattice_sum accumulates w * f over every abscissa seen so far; the
  // level-k trapezoidal estimate is then S_k = 2^-k * lattice_sum.
  double lattice_sum = 0.0;
  double prev_s = 0.0;
  int level = 0;
  for (level = 0; level <= cfg.max_level; ++level) {
    const auto& nodes = tb[static_cast<std::size_t>(level)];
    LevelValues lv;
    if (capture != nullptr) {
      lv.fplus.reserve(nodes.size());
      lv.fminus.reserve(nodes.size());
    }
    double add = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const TableNode& nd = nodes[i];
      if (level == 0 && i == 0) {
        const double fc = eval(nd.t, nd.tc);  // center, t = tc = 1/2
        add += nd.w * fc;
        if (capture != nullptr) {
          lv.fplus.push_back(fc);
          lv.fminus.push_back(0.0);
        }
        continue;
      }
      const double fp = eval(nd.t, nd.tc);
      const double fm = eval(nd.tc, nd.t);
      add += nd.w * (fp + fm);
      if (capture != nullptr) {
        lv.fplus.push_back(fp);
        lv.fminus.push_back(fm);
      }
    }
    lattice_sum += add;
    if (capture != nullptr) {
      saved.push_back(std::move(lv));
    }

    const double s = std::ldexp(lattice_sum, -level);
    if (level == 0) {
      res.value = s;
      res.error_estimate = std::abs(s);
      prev_s = s;
      continue;
    }
    const double err = std::abs(s - prev_s);
    res.value = s;
    res.error_estimate = err;
    prev_s = s;
    if (level >= cfg.min_level &&
        (err <= cfg.rel_tol * std::abs(s) || err <= cfg.abs_tol)) {
      res.converged = true;
      break;
    }
  }
  const int final_level = res.converged ? level : cfg.max_level;

  // The level difference underestimates nothing but can reach exact
  // zero by luck; keep the report honest with a rounding floor.
  const double floor_est =
      10.0 * std::numeric_limits<double>::epsilon() * std::abs(res.value);
  if (res.error_estimate < floor_est) {
    res.error_estimate = floor_est;
  }

  if (capture != nullptr) {
    capture->nodes.clear();
    capture->level = final_level;
    const double h = std::ldexp(1.0, -final_level);
    for (int lev = 0; lev <= final_level; ++lev) {
      const auto& nodes = tb[static_cast<std::size_t>(lev)];
      const auto& lv = saved[static_cast<std::size_t>(lev)];
      // Abscissas of levels below the final one lie on the half-step
      // lattice as well; doubling their weights recovers S_{k-1}.
      const bool coarse = lev < final_level;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const TableNode& nd = nodes[i];
        capture->nodes.push_back({nd.t, nd.tc, h * nd.w, lv.fplus[i], coarse});
        if (!(lev == 0 && i == 0)) {
          capture->nodes.push_back(
              {nd.tc, nd.t, h * nd.w, lv.fminus[i], coarse});
        }
      }
    }
  }
  return res;
}

}  // namespace

integrand_error::integrand_error(double abscissa)
    : std::runtime_error("integrand produced a non-finite value at t = " +
                         std::to_string(abscissa)),
      abscissa_(abscissa) {}

QuadratureResult integrate_unit(const UnitIntegrand& f,
                                const QuadratureConfig& config) {
  return run_levels(f, config, nullptr);
}

QuadratureResult integrate_unit_capture(const UnitIntegrand& f,
                                        const QuadratureConfig& config,
                                        CapturedGrid& grid) {
  return run_levels(f, config, &grid);
}

QuadratureResult integrate_halfline(const HalflineIntegrand& f,
                                    const QuadratureConfig& config) {
  // Map (0, inf) onto (0, 1) by x = t / (1 - t); the Jacobian 1/(1-t)^2
  // is applied as two divisions so that a zero integrand value stays an
  // exact zero instead of turning into 0 * inf.
  auto g = [&f](double t, double tc) {
    const double x = t / tc;
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw integrand_error(x);
    }
    const double scaled = (v / tc) / tc;
    if (!std::isfinite(scaled)) {
      throw integrand_error(x);
    }
    return scaled;
  };
  return integrate_unit(g, config);
}

}  // namespace pqsf
