#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fracheat {

/// Compensated (Kahan) accumulator. Also tracks the running sum of
/// absolute values, which bounds the rounding error of the total.
template <typename T>
struct Kahan {
  T sum{0};
  T comp{0};
  T abs_sum{0};

  void add(T v) {
    abs_sum += v < T(0) ? -v : v;
    T y = v - comp;
    T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

/// Sums a sequence pairwise (binary tree order). The result depends only on
/// the order of `xs`, never on thread count, so Monte-Carlo reductions stay
/// reproducible.
double pairwise_sum(std::span<const double> xs);

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Adaptive Simpson quadrature on [a, b]. `tol` is an absolute target; the
/// returned error_estimate is the accumulated local Richardson estimate.
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double tol, int max_depth = 32);

/// Composite Gauss-Legendre rule with `panels` equal panels of 16 nodes.
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int panels);

}  // namespace fracheat
