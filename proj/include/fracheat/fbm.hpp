#pragma once

#include <memory>

#include "fracheat/field.hpp"
#include "fracheat/grid.hpp"

namespace fracheat {

/// Per-axis Hurst exponents, every component strictly inside (1/2, 1).
struct HurstVector {
  std::vector<double> h;

  HurstVector() = default;
  explicit HurstVector(std::vector<double> components) : h(std::move(components)) {}

  std::size_t size() const { return h.size(); }
  double operator[](std::size_t j) const { return h[j]; }

  void validate(std::size_t expected_axes = 0) const;
};

/// C_H = [ 2 Gamma(H - 1/2) cos(pi/2 (H - 1/2)) ]^{-1}, H in (1/2, 1).
double c_h_constant(double hj);

/// Product covariance of the fractional Brownian sheet,
///   E[B_H(x) B_H(y)] = prod_j (1/2)(|x_j|^{2H_j} + |y_j|^{2H_j} - |x_j-y_j|^{2H_j}).
double fbm_covariance(const Point& x, const Point& y, const HurstVector& H);

/// Covariance of two 1-d fBm increments over [a1,b1] and [a2,b2]:
///   (1/2)(|b1-a2|^{2H} + |a1-b2|^{2H} - |a1-a2|^{2H} - |b1-b2|^{2H}).
/// Products of these give exact sheet-increment covariances per cell pair.
double axis_increment_covariance(double a1, double b1, double a2, double b2,
                                 double hj);

/// I.i.d. Gaussian(0, prod h_j) cell values, counter-seeded.
FieldRealization sample_white_noise(const Grid& grid, const SeedSpec& seed);

/// Fractional integration operator M (Fourier multiplier prod |y_j|^{1/2-H_j})
/// applied to node values, axis by axis, using exact cell integrals of the
/// equivalent spatial kernel C_H |u|^{H-3/2}. Requires the function to be
/// negligible near the grid boundary.
std::vector<double> apply_m_operator(const Grid& grid,
                                     const std::vector<double>& node_values,
                                     const HurstVector& H);

enum class FbmMethod { automatic, cholesky, multiplier };

/// Samples fractional Brownian sheets on a grid with origin 0 per axis.
/// cholesky: exact covariance (dense factorization, interior nodes capped);
/// multiplier: approximate spectral filtering of white noise on a 2x padded
/// lattice, rescaled per axis so Var[B_H(extent)] is exact.
///
/// Construction does the expensive part once; realizations are cheap and
/// fully determined by the SeedSpec.
class FbmSampler {
 public:
  static constexpr std::size_t kCholeskyCap = 4096;

  FbmSampler(const Grid& grid, const HurstVector& H,
             FbmMethod method = FbmMethod::automatic);

  FieldRealization values(const SeedSpec& seed) const;
  FieldRealization increments(const SeedSpec& seed) const;

  const char* method_name() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// One-shot convenience wrapper around FbmSampler.
FieldRealization sample_fbm(const Grid& grid, const HurstVector& H,
                            const SeedSpec& seed,
                            FbmMethod method = FbmMethod::automatic);

/// n-dimensional finite differencing of node values into cell increments.
FieldRealization to_increments(const FieldRealization& values_field);

}  // namespace fracheat
