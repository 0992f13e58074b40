#include "fracheat/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace fracheat::fft {

namespace {

std::mutex g_plan_mutex;
std::map<std::pair<std::vector<int>, int>, fftw_plan> g_plans;

fftw_plan plan_for(const std::vector<int>& dims, int sign,
                   fftw_complex* buf) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto key = std::make_pair(dims, sign);
  auto it = g_plans.find(key);
  if (it != g_plans.end()) return it->second;
  fftw_plan p = fftw_plan_dft(int(dims.size()), dims.data(), buf, buf, sign,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw_plan_dft failed");
  g_plans.emplace(std::move(key), p);
  return p;
}

}  // namespace

void transform(std::vector<std::complex<double>>& data,
               const std::vector<int>& dims, int sign) {
  std::size_t total = 1;
  for (int d : dims) total *= std::size_t(d);
  if (total != data.size())
    throw std::invalid_argument("fft::transform: shape mismatch");
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan p = plan_for(dims, sign, buf);
  fftw_execute_dft(p, buf, buf);
}

}  // namespace fracheat::fft
