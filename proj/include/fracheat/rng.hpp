#pragma once

#include <cstdint>

#include "fracheat/grid.hpp"

namespace fracheat {

/// Counter-based randomness: every variate is a pure function of
/// (master_seed, stream_index, cell_index, salt), so fields are reproducible
/// regardless of traversal order or how work is split across threads.
std::uint64_t counter_hash(std::uint64_t master, std::uint64_t stream,
                           std::uint64_t cell, std::uint64_t salt);

/// Uniform in the open interval (0, 1).
double uniform_at(const SeedSpec& seed, std::uint64_t cell, std::uint64_t salt);

/// Standard normal variate addressed by cell index (Box-Muller on two
/// counter-hashed uniforms).
double gaussian_at(const SeedSpec& seed, std::uint64_t cell);

}  // namespace fracheat
