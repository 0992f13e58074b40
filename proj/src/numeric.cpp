#include "fracheat/numeric.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

namespace fracheat {

double pairwise_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace {

struct SimpsonCtx {
  const std::function<double(double)>* f;
  std::size_t evals = 0;
  double err = 0.0;

  double eval(double x) {
    ++evals;
    return (*f)(x);
  }
};

double simpson_step(SimpsonCtx& ctx, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = ctx.eval(lm);
  const double frm = ctx.eval(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    ctx.err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return simpson_step(ctx, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(ctx, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double tol, int max_depth) {
  SimpsonCtx ctx{&f};
  const double fa = ctx.eval(a);
  const double fb = ctx.eval(b);
  const double m = 0.5 * (a + b);
  const double fm = ctx.eval(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  QuadResult r;
  r.value = simpson_step(ctx, a, b, fa, fm, fb, whole, tol, max_depth);
  r.error_estimate = ctx.err;
  r.evaluations = ctx.evals;
  return r;
}

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int panels) {
  if (panels < 1) panels = 1;
  const double h = (b - a) / panels;
  Kahan<double> acc;
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
      acc.add(kGlWeights[i] * half * f(c - half * kGlNodes[i]));
      acc.add(kGlWeights[i] * half * f(c + half * kGlNodes[i]));
    }
  }
  return acc.sum;
}

}  // namespace fracheat
