#include "pqsf/extended.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqsf/special_core.hpp"

namespace pqsf {

namespace {

void check_extension(const ExtensionParams& ext) {
  if (!std::isfinite(ext.p) || !std::isfinite(ext.q) || ext.p < 0.0 ||
      ext.q < 0.0) {
    throw std::domain_error(
        "extension parameters must be finite and >= 0, got p = " +
        std::to_string(ext.p) + ", q = " + std::to_string(ext.q));
  }
}

void check_beta_args(double x, double y, const ExtensionParams& ext) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::domain_error("extended_beta: arguments must be finite");
  }
  if (ext.p == 0.0 && x <= 0.0) {
    throw std::domain_error("extended_beta: x must be > 0 when p = 0, got x = " +
                            std::to_string(x));
  }
  if (ext.q == 0.0 && y <= 0.0) {
    throw std::domain_error("extended_beta: y must be > 0 when q = 0, got y = " +
                            std::to_string(y));
  }
}

void check_confluent(const ConfluentArgs& a) {
  if (!std::isfinite(a.beta) || !std::isfinite(a.gamma) ||
      !std::isfinite(a.z)) {
    throw std::domain_error("phi: arguments must be finite");
  }
  if (!(a.beta > 0.0) || !(a.gamma > a.beta)) {
    throw std::domain_error("phi: requires gamma > beta > 0, got beta = " +
                            std::to_string(a.beta) +
                            ", gamma = " + std::to_string(a.gamma));
  }
}

void check_series(const SeriesConfig& s) {
  if (!std::isfinite(s.rel_tol) || s.rel_tol <= 0.0) {
    throw std::invalid_argument("series: rel_tol must be finite and > 0");
  }
  if (s.max_terms < 10) {
    throw std::invalid_argument("series: max_terms must be >= 10");
  }
  if (s.tail_run < 1) {
    throw std::invalid_argument("series: tail_run must be >= 1");
  }
}

// t^(x-1) (1-t)^(y-1) exp(zt - p/t - q/(1-t)) evaluated in log space.
// Both logs are finite on the tabulated abscissas (t, tc > 0); p/t or
// q/tc may overflow to +inf at extreme nodes, where the exponent
// becomes -inf and the value a clean zero.
UnitIntegrand beta_kernel(double x, double y, double p, double q, double z) {
  return [x, y, p, q, z](double t, double tc) {
    double e = (x - 1.0) * std::log(t) + (y - 1.0) * std::log(tc);
    if (z != 0.0) {
      e += z * t;
    }
    if (p != 0.0) {
      e -= p / t;
    }
    if (q != 0.0) {
      e -= q / tc;
    }
    return std::exp(e);
  };
}

// Relative rounding allowance for one exp/log-space evaluation chain,
// used when combining quadrature results with the classical beta.
constexpr double kEvalSlack = 1e-14;

}  // namespace

QuadratureResult gamma_p(double z, double p, const QuadratureConfig& config) {
  if (!std::isfinite(z) || z <= 0.0) {
    throw std::domain_error("gamma_p: z must be finite and > 0, got z = " +
                            std::to_string(z));
  }
  if (!std::isfinite(p) || p < 0.0) {
    throw std::domain_error("gamma_p: p must be finite and >= 0, got p = " +
                            std::to_string(p));
  }
  if (p == 0.0) {
    QuadratureResult r;
    r.value = gamma(z);  // may throw range_error on overflow
    r.error_estimate = std::abs(r.value) * 1e-12;
    r.evaluations = 1;
    r.converged = true;
    return r;
  }
  return integrate_halfline(
      [z, p](double t) { return std::exp((z - 1.0) * std::log(t) - t - p / t); },
      config);
}

QuadratureResult extended_beta(double x, double y, const ExtensionParams& ext,
                               const QuadratureConfig& config) {
  check_extension(ext);
  check_beta_args(x, y, ext);
  return integrate_unit(beta_kernel(x, y, ext.p, ext.q, 0.0), config);
}

QuadratureResult extended_beta_single(double x, double y, double p,
                                      const QuadratureConfig& config) {
  return extended_beta(x, y, ExtensionParams{p, p}, config);
}

QuadratureResult phi_integral(const ConfluentArgs& args,
                              const ExtensionParams& ext,
                              const QuadratureConfig& config) {
  check_extension(ext);
  check_confluent(args);
  const double b = std::exp(log_beta(args.beta, args.gamma - args.beta));
  QuadratureResult r = integrate_unit(
      beta_kernel(args.beta, args.gamma - args.beta, ext.p, ext.q, args.z),
      config);
  r.value /= b;
  r.error_estimate = r.error_estimate / b + std::abs(r.value) * kEvalSlack;
  return r;
}

QuadratureResult phi_series(const ConfluentArgs& args,
                            const ExtensionParams& ext,
                            const SeriesConfig& series,
                            const QuadratureConfig& config) {
  check_extension(ext);
  check_confluent(args);
  check_series(series);

  const double b = std::exp(log_beta(args.beta, args.gamma - args.beta));

  // Coefficient n of the series is B_{p,q}(beta + n, gamma - beta) / B;
  // the integrands differ only by t^n, so one captured grid serves all
  // of them.
  CapturedGrid grid;
  const QuadratureResult base = integrate_unit_capture(
      beta_kernel(args.beta, args.gamma - args.beta, ext.p, ext.q, 0.0),
      config, grid);

  QuadratureResult out;
  out.evaluations = base.evaluations;

  double sum = base.value / b;
  double quad_err = base.error_estimate / b;
  double zfac = 1.0;  // z^n / n!
  double last_mag = std::abs(sum);
  int small_run = 0;
  bool tail_ok = false;

  std::vector<double> powt(grid.nodes.size(), 1.0);
  for (int n = 1; n < series.max_terms; ++n) {
    zfac *= args.z / n;
    double term = 0.0;
    if (zfac != 0.0) {
      double fine = 0.0;
      double coarse = 0.0;
      for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        powt[i] *= grid.nodes[i].t;
        const double c = grid.nodes[i].weight * grid.nodes[i].value * powt[i];
        fine += c;
        if (grid.nodes[i].coarse) {
          coarse += c;
        }
      }
      term = zfac * fine / b;
      quad_err += std::abs(zfac) * std::abs(fine - 2.0 * coarse) / b;
    }
    sum += term;
    last_mag = std::abs(term);
    if (last_mag <= series.rel_tol * std::abs(sum)) {
      if (++small_run >= series.tail_run) {
        tail_ok = true;
        break;
      }
    } else {
      small_run = 0;
    }
  }

  out.value = sum;
  out.converged = tail_ok && base.converged;
  // Quadrature error accumulated per coefficient, plus the dropped tail
  // (bounded by the last term seen) and the normalization rounding.
  out.error_estimate = quad_err + last_mag +
                       series.tail_run * series.rel_tol * std::abs(sum) +
                       std::abs(sum) * kEvalSlack;
  return out;
}

double phi_derivative(const ConfluentArgs& args, const ExtensionParams& ext,
                      int n, const QuadratureConfig& config) {
  if (n < 1) {
    throw std::invalid_argument("phi_derivative: order must be >= 1, got " +
                                std::to_string(n));
  }
  check_extension(ext);
  check_confluent(args);
  const double factor =
      pochhammer(args.beta, n) / pochhammer(args.gamma, n);
  const ConfluentArgs shifted{args.beta + n, args.gamma + n, args.z};
  return factor * phi_integral(shifted, ext, config).value;
}

double phi_reflect(const ConfluentArgs& args, const ExtensionParams& ext,
                   const QuadratureConfig& config) {
  check_extension(ext);
  check_confluent(args);
  const ConfluentArgs reflected{args.gamma - args.beta, args.gamma, -args.z};
  const ExtensionParams swapped{ext.q, ext.p};
  return std::exp(args.z) * phi_integral(reflected, swapped, config).value;
}

}  // namespace pqsf
