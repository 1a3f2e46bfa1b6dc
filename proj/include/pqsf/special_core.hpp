#ifndef PQSF_SPECIAL_CORE_HPP
#define PQSF_SPECIAL_CORE_HPP

// Scalar special functions used by everything else in the library:
// log-gamma (Lanczos), gamma, the Pochhammer rising factorial, and the
// classical beta function evaluated in log space.

namespace pqsf {

// Natural log of the gamma function for x > 0, via the Lanczos
// approximation (g = 7, 9 coefficients).  Achieves roughly 1e-13
// accuracy relative to max(1, |log_gamma(x)|); pure relative accuracy
// is not attainable near the zeros at x = 1 and x = 2.
// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

// Gamma function for x > 0.  Throws std::domain_error for x <= 0 or
// non-finite x, and std::range_error when the result would overflow a
// double (x > ~171.6).
double gamma(double x);

// Rising factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1), with
// (alpha)_0 = 1.  Computed by direct product so that consecutive orders
// share the same floating-point operations:
//   pochhammer(a, n+1) == pochhammer(a, n) * (a + n)  exactly.
// Throws std::invalid_argument for n < 0.
double pochhammer(double alpha, int n);

// Classical Euler beta function B(x, y) for x, y > 0, evaluated as
// exp(log_gamma(x) + log_gamma(y) - log_gamma(x+y)).
// Throws std::domain_error for non-positive or non-finite arguments.
double beta(double x, double y);

// log B(x, y) for x, y > 0.  Same domain checks as beta().
double log_beta(double x, double y);

}  // namespace pqsf

#endif  // PQSF_SPECIAL_CORE_HPP
