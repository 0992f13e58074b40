#pragma once

#include <complex>
#include <vector>

namespace fracheat::fft {

/// In-place n-dimensional complex DFT (row-major), sign = -1 forward /
/// +1 backward, unnormalized (FFTW convention). Plans are cached per shape
/// and created with FFTW_ESTIMATE only, so repeated runs are bit-identical.
/// Thread safe.
void transform(std::vector<std::complex<double>>& data,
               const std::vector<int>& dims, int sign);

}  // namespace fracheat::fft
