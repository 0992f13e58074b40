#include "fracheat/special_functions.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "fracheat/numeric.hpp"

namespace fracheat {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPi = 3.141592653589793238462643383279502884;

double lanczos_gamma(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double lanczos_log_gamma(double x) {
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpositive_integer(x))
    throw PoleError("gamma_fn: pole at non-positive integer " +
                    std::to_string(x));
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

double log_gamma(double x) {
  if (x <= 0.0) throw DomainError("log_gamma requires x > 0");
  if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
  return lanczos_log_gamma(x);
}

void MLParams::validate() const {
  if (!(alpha > 0.0) || !(alpha <= 2.0))
    throw DomainError("MLParams: alpha must lie in (0, 2]");
  if (!(beta > 0.0)) throw DomainError("MLParams: beta must be positive");
}

// ---------------------------------------------------------------------------
// Mittag-Leffler evaluation
// ---------------------------------------------------------------------------

namespace {

// Per-(alpha,beta) coefficient tables. lg[k] = lgamma(alpha k + beta) in long
// double and quad precision drives the recursive series term update
//   term_{k+1} = term_k * z * exp(lg[k] - lg[k+1]),
// which never overflows regardless of how large Gamma grows. The asymptotic
// table stores 1/Gamma(beta - alpha k) split into sign and log magnitude
// (zero sign at the poles).
struct CoeffTable {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<long double> lg;
  std::vector<__float128> lgq;
  std::vector<long double> asym_logmag;  // index k, valid from k = 1
  std::vector<signed char> asym_sign;

  void extend_series(std::size_t k_need) {
    const std::size_t old = lg.size();
    if (old >= k_need) return;
    lg.resize(k_need);
    lgq.resize(k_need);
    for (std::size_t k = old; k < k_need; ++k) {
      const long double arg = (long double)alpha * k + (long double)beta;
      lg[k] = lgammal(arg);
      lgq[k] = lgammaq((__float128)alpha * k + (__float128)beta);
    }
  }

  void extend_asym(std::size_t k_need) {
    std::size_t old = asym_logmag.size();
    if (old >= k_need) return;
    asym_logmag.resize(k_need);
    asym_sign.resize(k_need);
    if (old == 0) {  // k = 0 slot unused
      asym_logmag[0] = 0;
      asym_sign[0] = 0;
      old = 1;
    }
    for (std::size_t k = old; k < k_need; ++k) {
      const long double w = (long double)beta - (long double)alpha * k;
      const long double r = nearbyintl(w);
      if (fabsl(w - r) < 1e-13L * (1.0L + fabsl(w)) && r <= 0.0L) {
        asym_sign[k] = 0;  // reciprocal Gamma vanishes at the pole
        asym_logmag[k] = -1e30L;
        continue;
      }
      // 1/Gamma(w) = Gamma(1-w) sin(pi w) / pi
      const long double s = sinl((long double)kPi * w);
      asym_sign[k] = s >= 0 ? 1 : -1;
      asym_logmag[k] =
          lgammal(1.0L - w) + logl(fabsl(s)) - logl((long double)kPi);
    }
  }
};

std::mutex g_coeff_mutex;
std::map<std::pair<double, double>, std::shared_ptr<CoeffTable>> g_coeffs;

std::shared_ptr<CoeffTable> coeff_table(double alpha, double beta,
                                        std::size_t k_series,
                                        std::size_t k_asym) {
  std::lock_guard<std::mutex> lock(g_coeff_mutex);
  auto& slot = g_coeffs[{alpha, beta}];
  if (!slot) {
    slot = std::make_shared<CoeffTable>();
    slot->alpha = alpha;
    slot->beta = beta;
  }
  if (slot->lg.size() < k_series || slot->asym_logmag.size() < k_asym) {
    // copy-on-extend so concurrent readers keep a stable snapshot
    auto grown = std::make_shared<CoeffTable>(*slot);
    grown->extend_series(std::max(k_series, grown->lg.size()));
    grown->extend_asym(std::max(k_asym, grown->asym_logmag.size()));
    slot = grown;
  }
  return slot;
}

struct SchemeOut {
  long double value = 0.0L;
  long double abs_err = HUGE_VALL;  // certified absolute error bound
  bool usable = false;
};

constexpr std::size_t kSeriesCap = 20000;

// Compensated power-series sum; T is long double or __float128.
template <typename T>
SchemeOut ml_series_impl(const CoeffTable& tab, const std::vector<T>& lg,
                         double z, T eps) {
  T term = 0, sum = 0, comp = 0, abs_sum = 0;
  term = T(1);
  // term_0 = 1/Gamma(beta)
  if constexpr (std::is_same_v<T, __float128>)
    term = expq(-lg[0]);
  else
    term = expl(-lg[0]);
  long double last = 0.0L;
  std::size_t k = 0;
  bool converged = false;
  for (;;) {
    // add term
    abs_sum += term < T(0) ? -term : term;
    T y = term - comp;
    T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (k + 1 >= lg.size()) break;  // table exhausted; caller retries bigger
    T ratio;
    if constexpr (std::is_same_v<T, __float128>)
      ratio = expq(lg[k] - lg[k + 1]);
    else
      ratio = expl(lg[k] - lg[k + 1]);
    T next = term * T(z) * ratio;
    T a_next = next < T(0) ? -next : next;
    T a_term = term < T(0) ? -term : term;
    if (k > 4 && a_next < a_term) {
      // decaying tail is dominated by a geometric series with ratio < 1/2
      // once |z| * ratio < 1/2; stop when it cannot move the sum
      T a_sum = sum < T(0) ? -sum : sum;
      if (a_next < eps * (abs_sum + a_sum) / 16 || a_next < T(1e-4900L)) {
        last = (long double)a_next;
        converged = true;
        break;
      }
    }
    term = next;
    ++k;
    if (k >= kSeriesCap) break;
  }
  SchemeOut out;
  out.value = (long double)sum;
  if (converged) {
    out.usable = true;
    out.abs_err = 6.0L * (long double)eps * (long double)abs_sum + 4.0L * last;
  }
  return out;
}

SchemeOut ml_series_ld(double alpha, double beta, double z) {
  std::size_t need = 64;
  for (int round = 0; round < 12; ++round) {
    auto tab = coeff_table(alpha, beta, need, 0);
    auto out = ml_series_impl<long double>(*tab, tab->lg, z, LDBL_EPSILON);
    if (out.usable || need >= kSeriesCap) return out;
    need *= 2;
  }
  return {};
}

SchemeOut ml_series_q(double alpha, double beta, double z) {
  std::size_t need = 64;
  for (int round = 0; round < 12; ++round) {
    auto tab = coeff_table(alpha, beta, need, 0);
    auto out =
        ml_series_impl<__float128>(*tab, tab->lgq, z, FLT128_EPSILON);
    if (out.usable || need >= kSeriesCap) return out;
    need *= 2;
  }
  return {};
}

// Large negative z: algebraic series - sum_k z^{-k}/Gamma(beta - alpha k),
// truncated at its smallest term, plus (for alpha > 1) the conjugate pair of
// exponential terms (1/alpha) zeta^{1-beta} e^{zeta} at zeta =
// |z|^{1/alpha} e^{+-i pi/alpha}, whose real part decays for alpha < 2.
SchemeOut ml_asym(double alpha, double beta, double z) {
  const long double az = fabsl((long double)z);
  const long double logaz = logl(az);
  auto tab = coeff_table(alpha, beta, 0, 512);
  const auto& mag = tab->asym_logmag;
  const auto& sgn = tab->asym_sign;

  long double sum = 0.0L, abs_sum = 0.0L;
  long double prev = HUGE_VALL;
  long double smallest = HUGE_VALL;
  bool truncated_ok = false;
  for (std::size_t k = 1; k < mag.size(); ++k) {
    const long double m = mag[k] - (long double)k * logaz;
    const long double amag = sgn[k] == 0 ? 0.0L : expl(m);
    if (k > 1 && amag > prev && prev < HUGE_VALL) {
      // passed the optimal truncation point
      smallest = std::min(smallest, prev);
      truncated_ok = true;
      break;
    }
    if (amag > 0.0L) {
      // term = -z^{-k}/Gamma(beta-alpha k); z < 0 so z^{-k} = (-1)^k |z|^{-k}
      const long double sign = -((k % 2 == 0) ? 1.0L : -1.0L) * sgn[k];
      sum += sign * amag;
      abs_sum += amag;
      prev = amag;
      smallest = std::min(smallest, amag);
    }
    if (amag > 0.0L && amag < 1e-60L * (fabsl(sum) + 1e-300L)) {
      truncated_ok = true;
      break;
    }
  }
  if (!truncated_ok && abs_sum > 0.0L) return {};  // never reached the dip

  long double pair = 0.0L;
  if (alpha > 1.0) {
    const std::complex<long double> i(0.0L, 1.0L);
    const std::complex<long double> logzeta =
        (logaz + i * (long double)kPi) / (long double)alpha;
    const std::complex<long double> zeta = std::exp(logzeta);
    const std::complex<long double> v =
        std::exp((1.0L - (long double)beta) * logzeta + zeta);
    pair = 2.0L / (long double)alpha * v.real();
  }

  SchemeOut out;
  out.value = sum + pair;
  out.abs_err = (abs_sum == 0.0L ? 0.0L : smallest) +
                8.0L * LDBL_EPSILON * (abs_sum + fabsl(pair));
  out.usable = true;
  return out;
}

// alpha == 1: E_{1,beta}(z) = e^z M(1, beta, z)/Gamma(beta)
//                           = e^z M(beta-1, beta, -z)/Gamma(beta),
// and the transformed series has no catastrophic cancellation for z < 0.
SchemeOut ml_kummer_a1(double beta, double z) {
  const long double w = -(long double)z;
  if (w > 600.0L) return {};
  long double term = 1.0L, sum = 1.0L, abs_sum = 1.0L;
  for (int k = 0; k < 100000; ++k) {
    term *= w * ((long double)beta - 1.0L + k) /
            (((long double)beta + k) * (k + 1.0L));
    sum += term;
    abs_sum += fabsl(term);
    if (fabsl(term) < 1e-24L * fabsl(sum) && k > 3) break;
  }
  SchemeOut out;
  const long double g = lgammal((long double)beta);
  out.value = expl((long double)z - g) * sum;
  out.abs_err = expl((long double)z - g) *
                (8.0L * LDBL_EPSILON * abs_sum + 1e-22L * fabsl(sum));
  out.usable = true;
  return out;
}

}  // namespace

namespace detail {
// Exposed for cross-scheme validation in the test suite.
double ml_series_value(const MLParams& p, double z, bool quad_precision) {
  auto out = quad_precision ? ml_series_q(p.alpha, p.beta, z)
                            : ml_series_ld(p.alpha, p.beta, z);
  if (!out.usable) throw ConvergenceError("ml series did not converge");
  return (double)out.value;
}
double ml_asym_value(const MLParams& p, double z) {
  auto out = ml_asym(p.alpha, p.beta, z);
  if (!out.usable) throw ConvergenceError("ml asymptotic not applicable");
  return (double)out.value;
}
}  // namespace detail

double mittag_leffler(const MLParams& p, double z, double rel_tol) {
  p.validate();
  if (!(rel_tol > 0)) throw DomainError("mittag_leffler: rel_tol must be > 0");
  if (z == 0.0) {
    auto tab = coeff_table(p.alpha, p.beta, 1, 0);
    return (double)expl(-tab->lg[0]);
  }

  const auto accept = [&](const SchemeOut& s) {
    if (!s.usable) return false;
    const long double scale = fabsl(s.value);
    return s.abs_err <= (long double)rel_tol * scale || s.abs_err <= 1e-18L;
  };

  if (z > 0.0) {
    auto ld = ml_series_ld(p.alpha, p.beta, z);
    if (accept(ld)) return (double)ld.value;
    auto q = ml_series_q(p.alpha, p.beta, z);
    if (accept(q)) return (double)q.value;
    throw ConvergenceError("mittag_leffler: series not certified at z = " +
                           std::to_string(z));
  }

  if (p.alpha == 1.0) {
    auto k = ml_kummer_a1(p.beta, z);
    if (accept(k)) return (double)k.value;
    auto a = ml_asym(p.alpha, p.beta, z);
    if (a.usable) return (double)a.value;  // |z| > 600: certified absolutely
    throw ConvergenceError("mittag_leffler: alpha=1 path failed");
  }

  SchemeOut best{};
  if (z >= -60.0) {
    auto ld = ml_series_ld(p.alpha, p.beta, z);
    if (accept(ld)) return (double)ld.value;
    if (ld.usable) best = ld;
  }
  if (z <= -6.0) {
    auto a = ml_asym(p.alpha, p.beta, z);
    if (accept(a)) return (double)a.value;
    if (a.usable && a.abs_err < best.abs_err) best = a;
  }
  if (z >= -3000.0) {
    auto q = ml_series_q(p.alpha, p.beta, z);
    if (accept(q)) return (double)q.value;
    if (q.usable && q.abs_err < best.abs_err) best = q;
  }
  // asymptotic regime: the contract loosens to 1e-6 relative
  if (z < -100.0 && best.usable &&
      best.abs_err <= 1e-6L * fabsl(best.value)) {
    return (double)best.value;
  }
  throw ConvergenceError("mittag_leffler: no scheme certified at alpha=" +
                         std::to_string(p.alpha) + " beta=" +
                         std::to_string(p.beta) + " z=" + std::to_string(z));
}

// ---------------------------------------------------------------------------
// Caputo L1 scheme
// ---------------------------------------------------------------------------

SampledFunction caputo_l1(const SampledFunction& f, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("caputo_l1: alpha must lie in (0,1)");
  if (f.values.size() < 2)
    throw DomainError("caputo_l1: need at least two samples");
  if (!(f.step > 0.0)) throw DomainError("caputo_l1: step must be positive");
  if (f.start != 0.0)
    throw DomainError("caputo_l1: samples must start at x = 0");

  const std::size_t n = f.values.size();
  const double h = f.step;
  // weights w_m = m^{1-a} - (m-1)^{1-a}; the scheme is
  //   D f(x_i) = h^{-a}/Gamma(2-a) * sum_{j<i} (f_{j+1}-f_j) w_{i-j}
  std::vector<double> w(n);
  for (std::size_t m = 1; m < n; ++m)
    w[m] = std::pow((double)m, 1.0 - alpha) -
           std::pow((double)(m - 1), 1.0 - alpha);

  const double coeff = std::pow(h, -alpha) / gamma_fn(2.0 - alpha);
  SampledFunction out;
  out.start = f.start;
  out.step = h;
  out.values.assign(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    Kahan<double> acc;
    for (std::size_t j = 0; j < i; ++j)
      acc.add((f.values[j + 1] - f.values[j]) * w[i - j]);
    out.values[i] = coeff * acc.sum;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Laplace transform pairs
// ---------------------------------------------------------------------------

double laplace_pair_residual(double alpha, double b, double s,
                             LaplacePair which) {
  MLParams p{alpha, which == LaplacePair::growth ? 1.0 : alpha};
  p.validate();
  if (!(s > 0.0)) throw DomainError("laplace_pair_residual: s must be > 0");

  // exponential growth rate of the time-domain function
  double rho = 0.0;
  if (which == LaplacePair::growth && b > 0.0) rho = std::pow(b, 1.0 / alpha);
  if (which == LaplacePair::kernel && b < 0.0) rho = std::pow(-b, 1.0 / alpha);
  if (s <= rho * (1.0 + 1e-9) + 1e-12)
    throw DomainError("laplace_pair_residual: integral diverges at this s");

  const double closed =
      which == LaplacePair::growth
          ? std::pow(s, alpha - 1.0) / (std::pow(s, alpha) - b)
          : 1.0 / (std::pow(s, alpha) + b);

  const auto time_fn = [&](double t) -> double {
    if (which == LaplacePair::growth)
      return mittag_leffler(p, b * std::pow(t, alpha), 1e-12);
    return std::pow(t, alpha - 1.0) *
           mittag_leffler(p, -b * std::pow(t, alpha), 1e-12);
  };

  // pick the horizon so the tail bound sits below 1e-12; past T the time
  // function grows no faster than e^{rho (t-T)}, so
  //   tail <= |f(T)| e^{-sT} / (s - rho)
  double T = (32.0 + std::log1p(std::abs(b))) / (s - rho);
  for (int attempt = 0;; ++attempt) {
    const double bound = std::abs(time_fn(T)) * std::exp(-s * T) / (s - rho);
    if (bound < 1e-12 || attempt >= 8) {
      if (bound >= 1e-12)
        throw ConvergenceError("laplace_pair_residual: tail bound not met");
      break;
    }
    T *= 1.5;
  }

  const auto integrand = [&](double t) {
    return std::exp(-s * t) * time_fn(t);
  };

  double quad = 0.0;
  if (which == LaplacePair::kernel && alpha < 1.0) {
    // remove the t^{a-1} endpoint singularity with u = t^a on [0, delta]
    const double delta = std::min(1.0, T / 10.0);
    const auto head = [&](double u) {
      const double t = std::pow(u, 1.0 / alpha);
      return std::exp(-s * t) * mittag_leffler(p, -b * u, 1e-12) / alpha;
    };
    quad += adaptive_simpson(head, 0.0, std::pow(delta, alpha), 1e-13).value;
    quad += adaptive_simpson(integrand, delta, T, 1e-13).value;
  } else {
    quad += adaptive_simpson(integrand, 0.0, T, 1e-13).value;
  }
  return std::abs(quad - closed);
}

}  // namespace fracheat
