#ifndef PQSF_QUADRATURE_HPP
#define PQSF_QUADRATURE_HPP

// Tanh-sinh (double-exponential) quadrature on (0, 1), plus a half-line
// variant for integrals over (0, inf).  The node/weight tables are
// precomputed once per process and shared; the refinement loop halves
// the step until the level-to-level difference meets the tolerance.
//
// Integrands on (0, 1) take two arguments, f(t, tc) with tc = 1 - t
// computed to full relative precision near both endpoints, so that
// factors like (1-t)^(y-1) stay accurate where t is within one ulp of 1.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pqsf {

struct QuadratureConfig {
  double rel_tol = 1e-12;   // stop when level difference <= rel_tol * |value|
  double abs_tol = 1e-300;  // absolute stop for integrals that are ~0
  int max_level = 12;       // refinement ceiling, 1..15
  int min_level = 3;        // never stop before this level
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |S_k - S_{k-1}| of the final level
  std::int64_t evaluations = 0;
  bool converged = false;
};

// Thrown when the integrand produces a NaN or infinity; carries the
// abscissa at which it happened.
class integrand_error : public std::runtime_error {
 public:
  explicit integrand_error(double abscissa);
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

using UnitIntegrand = std::function<double(double t, double one_minus_t)>;
using HalflineIntegrand = std::function<double(double t)>;

// Integral of f over (0, 1).  Endpoint singularities that are integrable
// (e.g. t^(x-1) with x > 0) are handled by the double-exponential decay
// of the weights.  Non-convergence within max_level is reported through
// QuadratureResult::converged, not thrown.
QuadratureResult integrate_unit(const UnitIntegrand& f,
                                const QuadratureConfig& config = {});

// Integral of f over (0, inf), via the map t = u / (1 - u) with
// Jacobian 1 / (1 - u)^2 applied to the unit-interval rule.
QuadratureResult integrate_halfline(const HalflineIntegrand& f,
                                    const QuadratureConfig& config = {});

// One evaluation point of a captured quadrature grid.  `weight` is the
// final-level step times the tanh-sinh weight, so that
// sum(weight * value) reproduces QuadratureResult::value; the nodes with
// `coarse` set reproduce the previous level's estimate as
// 2 * sum over coarse nodes, which is what the per-term error estimates
// of series built on top of the grid use.
struct GridNode {
  double t = 0.0;
  double tc = 0.0;
  double weight = 0.0;
  double value = 0.0;  // integrand value at (t, tc)
  bool coarse = false;
};

struct CapturedGrid {
  std::vector<GridNode> nodes;
  int level = 0;  // refinement level the grid was frozen at
};

// Same as integrate_unit, but additionally freezes the converged node
// set (abscissas, weights, integrand values) into `grid` so callers can
// integrate related integrands -- e.g. the same integrand times t^n --
// by reweighting instead of re-refining.
QuadratureResult integrate_unit_capture(const UnitIntegrand& f,
                                        const QuadratureConfig& config,
                                        CapturedGrid& grid);

}  // namespace pqsf

#endif  // PQSF_QUADRATURE_HPP
