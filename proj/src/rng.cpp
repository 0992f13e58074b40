#include "fracheat/rng.hpp"

#include <cmath>

namespace fracheat {

namespace {

inline std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t master, std::uint64_t stream,
                           std::uint64_t cell, std::uint64_t salt) {
  std::uint64_t h = splitmix(master);
  h = splitmix(h ^ splitmix(stream + 0x632be59bd9b4e019ULL));
  h = splitmix(h ^ splitmix(cell + 0x9e6c63d0876a9a47ULL));
  return splitmix(h ^ splitmix(salt + 0xd1b54a32d192ed03ULL));
}

double uniform_at(const SeedSpec& seed, std::uint64_t cell,
                  std::uint64_t salt) {
  const std::uint64_t h =
      counter_hash(seed.master_seed, seed.stream_index, cell, salt);
  // 53 mantissa bits shifted into (0,1); the +0.5 keeps both endpoints out
  return (double(h >> 11) + 0.5) * 0x1.0p-53;
}

double gaussian_at(const SeedSpec& seed, std::uint64_t cell) {
  const double u1 = uniform_at(seed, cell, 0);
  const double u2 = uniform_at(seed, cell, 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace fracheat
