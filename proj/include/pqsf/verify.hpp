#ifndef PQSF_VERIFY_HPP
#define PQSF_VERIFY_HPP

// Margin-reporting checkers for the inequality family satisfied by
// B_{p,q} and Phi_{p,q}: a Chebyshev-type product bound, log-convexity
// in the extension parameters, in the arguments, and in z, Turan-type
// bounds along several parameter directions, and two monotone-ratio
// properties checked as finite-difference sign conditions over explicit
// grids.
//
// Every checker evaluates both sides numerically, reports
// margin = favorable side minus unfavorable side, and classifies the
// result against an explicit error budget:
//
//   margin >= budget   -> holds
//   margin <= -budget  -> violated
//   otherwise          -> inconclusive
//
// so "violated" is only reported when the inequality fails by more than
// the propagated numerical uncertainty.  The budget for a comparison
// whose sides multiply k evaluated quantities is
// k * (sum of their relative error estimates) * min(|lhs|, |rhs|),
// plus an absolute floor of 1e-14.
//
// Hypothesis violations (e.g. a dissimilar ordering for the Chebyshev
// checker, an infeasible Turan shift, a malformed grid) throw
// std::invalid_argument: the checker refuses to run rather than report
// "violated" on a case the claims do not cover.  Domain errors from the
// underlying evaluations propagate unchanged.

#include <string>
#include <utility>
#include <vector>

#include "pqsf/extended.hpp"
#include "pqsf/quadrature.hpp"

namespace pqsf {

enum class VerdictStatus { kHolds, kViolated, kInconclusive, kSkipped };

const char* to_string(VerdictStatus s);

// Three-way classification of a margin against an error budget; ties go
// to the decisive side (budget 0 means the comparison is exact).
VerdictStatus classify(double margin, double error_budget);

struct InequalityVerdict {
  std::string checker;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // favorable minus unfavorable side
  double error_budget = 0.0;
  VerdictStatus status = VerdictStatus::kInconclusive;
};

// Shift offsets for the shifted-square Turan checker; sigma rides along
// for callers that treat all shift-like knobs as one record.
struct ShiftParams {
  double a = 0.0;
  double b = 0.0;
  double sigma = 0.0;
};

// Chebyshev-type product bound: for similarly ordered argument shifts,
// (x - x1)(y - y1) >= 0,
//   B_{p,q}(x1,y1) * B_{p,q}(x,y)  <=  B_{p,q}(x,y1) * B_{p,q}(x1,y).
// The matched products are dominated by the mixed ones because t^(x-x1)
// and (1-t)^(y-y1) are oppositely ordered in t whenever the shifts are
// similarly ordered.  Dissimilar ordering -> std::invalid_argument.
InequalityVerdict check_chebyshev_product(double x, double y, double x1,
                                          double y1,
                                          const ExtensionParams& ext,
                                          const QuadratureConfig& config = {});

// Log-convexity of (p,q) -> B_{p,q}(x,y):
//   B_mix(x,y) <= B_{p1,q1}(x,y)^alpha * B_{p2,q2}(x,y)^(1-alpha)
// where mix = alpha*(p1,q1) + (1-alpha)*(p2,q2).  alpha outside [0,1]
// -> std::invalid_argument.
InequalityVerdict check_logconvex_pq(double x, double y, double p1, double q1,
                                     double p2, double q2, double alpha,
                                     const QuadratureConfig& config = {});

// Turan-type bound along the (p,q) diagonal:
//   B_{p,q}(x,y)^2 <= B_{p+a,q+a}(x,y) * B_{p-a,q-a}(x,y).
// Requires p+-a >= 0 and q+-a >= 0; infeasible shifts ->
// std::invalid_argument.
InequalityVerdict check_turan_pq(double x, double y,
                                 const ExtensionParams& ext, double a,
                                 const QuadratureConfig& config = {});

// Log-convexity of (x,y) -> B_{p,q}(x,y) along argument segments, with
// d = 1 - c:
//   B_{p,q}(c*x1 + d*x2, c*y1 + d*y2)
//     <= B_{p,q}(x1,y1)^c * B_{p,q}(x2,y2)^d.
InequalityVerdict check_logconvex_args(double x1, double y1, double x2,
                                       double y2, double c,
                                       const ExtensionParams& ext,
                                       const QuadratureConfig& config = {});

// Shifted-square Turan bound in the arguments:
//   B_{p,q}(x,y)^2 <= B_{p,q}(x+a,y+b) * B_{p,q}(x-a,y-b).
// All three argument pairs must be admissible for ext; infeasible
// shifts -> std::invalid_argument.
InequalityVerdict check_shifted_square(double x, double y,
                                       const ExtensionParams& ext,
                                       const ShiftParams& shifts,
                                       const QuadratureConfig& config = {});

// Monotone ratio in z: for gamma >= delta > beta > 0 the ratio
//   z -> Phi_{p,q}(beta; gamma; z) / Phi_{p,q}(beta; delta; z)
// is nonincreasing on z > 0 (the larger denominator parameter gamma
// damps the growth in z).  Verified as consecutive differences
// r(z_i) - r(z_{i+1}) >= 0 over the supplied ascending grid; the
// verdict reports the minimum difference and that step's budget.
// Grids with fewer than 2 points, non-ascending grids, or z <= 0 ->
// std::invalid_argument.
InequalityVerdict check_ratio_monotone(double beta, double gamma, double delta,
                                       const ExtensionParams& ext,
                                       const std::vector<double>& z_grid,
                                       const QuadratureConfig& config = {});

// Contiguous product comparison: for gamma >= delta > beta > 0,
//   delta * Phi_{p,q}(beta+1; gamma+1; z) * Phi_{p,q}(beta; delta; z)
//     <= gamma * Phi_{p,q}(beta; gamma; z) * Phi_{p,q}(beta+1; delta+1; z).
// This is the derivative form of the nonincreasing ratio above.
InequalityVerdict check_contiguous_product(double beta, double gamma,
                                           double delta,
                                           const ExtensionParams& ext,
                                           double z,
                                           const QuadratureConfig& config = {});

// Log-convexity of z -> Phi_{p,q}(beta; gamma; z):
//   Phi(alpha*z1 + (1-alpha)*z2) <= Phi(z1)^alpha * Phi(z2)^(1-alpha).
InequalityVerdict check_logconvex_z(double beta, double gamma, double z1,
                                    double z2, double alpha,
                                    const ExtensionParams& ext,
                                    const QuadratureConfig& config = {});

// Joint log-convexity of (p,q) -> Phi_{p,q}(beta; gamma; z) for fixed
// z > 0 and strictly positive extension parameters.
InequalityVerdict check_phi_logconvex_pq(const ConfluentArgs& args, double p1,
                                         double q1, double p2, double q2,
                                         double alpha,
                                         const QuadratureConfig& config = {});

// Monotone normalized shift ratio: for sigma >= 0, z > 0, and
// gamma > beta + sigma across the grid,
//   beta -> [B(beta, gamma-beta)   * Phi_{p,q}(beta+sigma; gamma; z)]
//         / [B(beta+sigma, gamma-beta-sigma) * Phi_{p,q}(beta; gamma; z)]
// is nonincreasing, where B is the classical beta: the normalization
// uses the same weights the underlying integral comparison produces.
// The unnormalized variant with B(beta, gamma) / B(beta+sigma, gamma)
// weights is evaluated as well and recorded in the params under
// literal_min_step, but carries no verdict.  Verified over the supplied
// ascending beta grid like check_ratio_monotone.
InequalityVerdict check_beta_ratio_decreasing(
    const std::vector<double>& beta_grid, double gamma, double sigma,
    const ExtensionParams& ext, double z,
    const QuadratureConfig& config = {});

// Turan-type bound in beta with beta-weight coefficient: for
// gamma > beta + 2*sigma > 0 and z > 0,
//   Phi_{p,q}(beta+sigma; gamma; z)^2
//     >= [B(beta+sigma, gamma-beta-sigma)^2
//         / (B(beta+2sigma, gamma-beta-2sigma) * B(beta, gamma-beta))]
//        * Phi_{p,q}(beta+2sigma; gamma; z) * Phi_{p,q}(beta; gamma; z).
// margin = lhs - rhs (this is a ">=" claim).
InequalityVerdict check_remark_turan(double beta, double gamma, double sigma,
                                     const ExtensionParams& ext, double z,
                                     const QuadratureConfig& config = {});

}  // namespace pqsf

#endif  // PQSF_VERIFY_HPP
