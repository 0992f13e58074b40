#pragma once

#include "fracheat/fbm.hpp"

namespace fracheat {

/// Piecewise-constant integrand on the cells of a grid.
struct Integrand {
  Grid grid;
  std::vector<double> cell_values;
  bool adapted = true;

  void validate() const;
};

/// Forward Riemann-type sum  sum_c f(c) * dB_H(c). For deterministic f on a
/// shared grid this is the exact discrete Wick-Ito-Skorohod integral of the
/// piecewise-constant integrand.
double wis_integrate(const Integrand& f, const FieldRealization& increments);

/// Exact second moment of the integral of a deterministic piecewise-constant
/// integrand:  |f|_phi^2 with phi(x,y) = prod_j H_j(2H_j-1)|x_j-y_j|^{2H_j-2},
/// evaluated with closed per-axis cell-pair integrals (the weakly singular
/// diagonal is integrated analytically).
double isometry_norm(const Integrand& f, const HurstVector& H);

/// K_j = C_{H_j}^2 { 4 (H_j - 3/2)^{-2} + 2 (H_j - 1/2)^{-1} (1 - H_j)^{-1} }.
double k_constant(double hj);

/// Upper bound (integral of E[f^2] over S) * prod_j K_j xbar_j^{2H_j-1}.
/// `second_moments` holds E[f^2] per cell and must be nonnegative.
double l2_upper_bound(const Integrand& second_moments, const HurstVector& H,
                      const std::vector<double>& s_extents);

}  // namespace fracheat
