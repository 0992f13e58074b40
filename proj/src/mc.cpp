#include "fracheat/mc.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "fracheat/numeric.hpp"

namespace fracheat {

std::string MomentEstimate::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"mean\":" << mean << ",\"variance\":" << variance << ",\"n\":" << n
     << ",\"stderr\":" << stderr_ << "}";
  return os.str();
}

MomentEstimate estimate_from_samples(const std::vector<double>& samples) {
  MomentEstimate e;
  e.n = samples.size();
  if (e.n == 0) return e;
  e.mean = pairwise_sum(samples) / double(e.n);
  if (e.n > 1) {
    std::vector<double> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double d = samples[i] - e.mean;
      sq[i] = d * d;
    }
    e.variance = pairwise_sum(sq) / double(e.n - 1);
    e.stderr_ = std::sqrt(e.variance / double(e.n));
  }
  return e;
}

namespace {

template <typename T>
std::vector<T> run_streams(std::size_t n_jobs, int n_threads,
                           const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n_jobs);
  if (n_threads < 1) n_threads = 1;
  if (n_threads == 1 || n_jobs <= 1) {
    for (std::size_t i = 0; i < n_jobs; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_jobs) return;
      out[i] = fn(i);  // slot is owned by stream index, not by the worker
    }
  };
  std::vector<std::thread> pool;
  const int k = int(std::min<std::size_t>(std::size_t(n_threads), n_jobs));
  pool.reserve(std::size_t(k));
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

std::vector<double> parallel_streams(
    std::size_t n_jobs, int n_threads,
    const std::function<double(std::size_t)>& fn) {
  return run_streams<double>(n_jobs, n_threads, fn);
}

std::vector<std::vector<double>> parallel_streams_vec(
    std::size_t n_jobs, int n_threads,
    const std::function<std::vector<double>(std::size_t)>& fn) {
  return run_streams<std::vector<double>>(n_jobs, n_threads, fn);
}

}  // namespace fracheat
