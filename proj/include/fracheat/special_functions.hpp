#pragma once

#include <vector>

#include "fracheat/errors.hpp"

namespace fracheat {

/// Gamma function via a 9-term Lanczos approximation (g = 7), with the
/// reflection formula for x < 0.5. Accurate to better than 12 significant
/// digits on (0, 50]. Throws PoleError at non-positive integers.
double gamma_fn(double x);

/// log |Gamma(x)| for x > 0.
double log_gamma(double x);

/// Parameters of the two-parameter Mittag-Leffler function
///   E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
struct MLParams {
  double alpha;
  double beta;

  void validate() const;
};

/// Evaluates E_{alpha,beta}(z) for real z with a certified relative error.
///
/// Scheme selection (all transitions are certificate-driven, and the unit
/// tests check that adjacent schemes agree at the crossovers):
///  - power series for z >= 0 and for small |z| (compensated long-double sum,
///    error bounded by the accumulated absolute sum);
///  - alpha == 1: Kummer-transformed confluent series, which has no
///    cancellation for z < 0;
///  - alpha < 1, z < -pi*alpha: real-line integral representation of the
///    inverse-Mellin contour (adaptive quadrature, no cancellation);
///  - alpha > 1, moderately negative z where the long-double series loses too
///    many digits: the same series in quad precision;
///  - large negative z: exponential pair plus the algebraic asymptotic series
///    truncated at its smallest term.
///
/// Throws ConvergenceError when no scheme certifies `rel_tol` (or, past the
/// series-feasible range |z| > 100, the looser asymptotic target 1e-6).
double mittag_leffler(const MLParams& p, double z, double rel_tol = 1e-10);

/// Uniformly sampled function f(start + j*step), j = 0..n-1.
struct SampledFunction {
  double start = 0.0;
  double step = 0.0;
  std::vector<double> values;
};

/// L1 finite-difference discretization of the Caputo derivative of order
/// alpha in (0,1): f is taken piecewise linear between nodes, the weakly
/// singular factor is integrated exactly per cell. Exact for linear f;
/// O(h^{2-alpha}) for C^2 integrands. Requires start == 0.
SampledFunction caputo_l1(const SampledFunction& f, double alpha);

/// Which transform pair to test:
///  growth:  E_a(b t^a)              <->  s^{a-1} / (s^a - b)
///  kernel:  t^{a-1} E_{a,a}(-b t^a) <->  1 / (s^a + b)
enum class LaplacePair { growth, kernel };

/// |numerical Laplace transform - closed form| at s, with the truncation
/// horizon chosen so that the analytic tail bound is below 1e-12. Requires
/// s to dominate the exponential growth rate of the time function.
double laplace_pair_residual(double alpha, double b, double s,
                             LaplacePair which = LaplacePair::growth);

namespace detail {
// Individual Mittag-Leffler schemes, exposed so tests can check that
// adjacent schemes agree at their crossovers.
double ml_series_value(const MLParams& p, double z, bool quad_precision);
double ml_asym_value(const MLParams& p, double z);
}  // namespace detail

}  // namespace fracheat
