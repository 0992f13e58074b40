#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace fracheat {

/// Monte-Carlo estimate with its sampling uncertainty.
struct MomentEstimate {
  double mean = 0.0;
  double variance = 0.0;  // sample variance of the contributing values
  std::size_t n = 0;
  double stderr_ = 0.0;   // sqrt(variance / n)

  std::string to_json() const;
};

MomentEstimate estimate_from_samples(const std::vector<double>& samples);

/// Runs fn(stream_index) for stream_index = 0..n_jobs-1 on up to n_threads
/// workers and returns the results in stream order. Output is identical for
/// every thread count; reductions over it should use pairwise_sum.
std::vector<double> parallel_streams(std::size_t n_jobs, int n_threads,
                                     const std::function<double(std::size_t)>& fn);

/// Same, for vector-valued jobs.
std::vector<std::vector<double>> parallel_streams_vec(
    std::size_t n_jobs, int n_threads,
    const std::function<std::vector<double>(std::size_t)>& fn);

}  // namespace fracheat
