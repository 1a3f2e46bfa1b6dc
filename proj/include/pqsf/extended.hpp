#ifndef PQSF_EXTENDED_HPP
#define PQSF_EXTENDED_HPP

// The extended beta function
//
//   B_{p,q}(x, y) = integral_0^1 t^(x-1) (1-t)^(y-1)
//                                exp(-p/t - q/(1-t)) dt,
//
// the extended gamma function
//
//   Gamma_p(z) = integral_0^inf t^(z-1) exp(-t - p/t) dt,
//
// and the extended confluent hypergeometric function
//
//   Phi_{p,q}(beta; gamma; z),
//
// available both as a series in B_{p,q}(beta+n, gamma-beta) z^n / n!
// normalized by the classical B(beta, gamma-beta), and as the single
// integral of t^(beta-1) (1-t)^(gamma-beta-1) exp(zt - p/t - q/(1-t)).
//
// Domain rules: p and q must be >= 0.  When both are positive the
// exponential factor suppresses both endpoints and x, y may be any
// reals; when p = 0 the t=0 endpoint needs x > 0, and when q = 0 the
// t=1 endpoint needs y > 0.  Phi requires gamma > beta > 0.
//
// With p = q = 0 every function reduces to its classical counterpart.
// Note that Phi_{p,q}(beta; gamma; 0) equals
// B_{p,q}(beta, gamma-beta) / B(beta, gamma-beta), which is 1 only when
// p = q = 0.

#include "pqsf/quadrature.hpp"

namespace pqsf {

struct ExtensionParams {
  double p = 0.0;
  double q = 0.0;
};

struct ConfluentArgs {
  double beta = 1.0;
  double gamma = 2.0;
  double z = 0.0;
};

struct SeriesConfig {
  double rel_tol = 1e-13;  // a term is "small" below rel_tol * |partial sum|
  int max_terms = 500;
  int tail_run = 3;  // consecutive small terms required before truncating
};

// Gamma_p(z) for z > 0, p >= 0.  p = 0 short-circuits to the Lanczos
// gamma (evaluations = 1, converged = true); gamma's overflow range
// error propagates.
QuadratureResult gamma_p(double z, double p,
                         const QuadratureConfig& config = {});

// B_{p,q}(x, y) under the domain rules above; violations throw
// std::domain_error.
QuadratureResult extended_beta(double x, double y, const ExtensionParams& ext,
                               const QuadratureConfig& config = {});

// Symmetric-parameter shorthand B_p(x, y) = B_{p,p}(x, y).  Delegates to
// extended_beta with p = q, sharing its code path bit for bit.
QuadratureResult extended_beta_single(double x, double y, double p,
                                      const QuadratureConfig& config = {});

// Phi_{p,q}(beta; gamma; z) by the single-integral representation.
QuadratureResult phi_integral(const ConfluentArgs& args,
                              const ExtensionParams& ext,
                              const QuadratureConfig& config = {});

// Phi_{p,q}(beta; gamma; z) by the series.  The quadrature grid of the
// n = 0 coefficient is frozen and reused for every later coefficient
// (each differs from the last by a factor of t), so `evaluations`
// counts only the grid build.  `converged` requires both the grid and
// the tail truncation to have succeeded; on truncation failure the
// partial sum is still returned with converged = false.
QuadratureResult phi_series(const ConfluentArgs& args,
                            const ExtensionParams& ext,
                            const SeriesConfig& series = {},
                            const QuadratureConfig& config = {});

// n-th derivative of Phi_{p,q} with respect to z (n >= 1), via the
// contiguous relation
//   d^n/dz^n Phi(beta; gamma; z)
//     = (beta)_n / (gamma)_n * Phi(beta+n; gamma+n; z).
double phi_derivative(const ConfluentArgs& args, const ExtensionParams& ext,
                      int n, const QuadratureConfig& config = {});

// Phi via the reflection identity
//   Phi_{p,q}(beta; gamma; z) = e^z Phi_{q,p}(gamma-beta; gamma; -z),
// useful as an independent cross-check of phi_integral/phi_series.
double phi_reflect(const ConfluentArgs& args, const ExtensionParams& ext,
                   const QuadratureConfig& config = {});

}  // namespace pqsf

#endif  // PQSF_EXTENDED_HPP
