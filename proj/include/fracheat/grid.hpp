#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fracheat/errors.hpp"

namespace fracheat {

using Point = std::vector<double>;

/// One axis of a rectangular lattice: `count` nodes from origin to
/// origin + extent inclusive, so there are count-1 cells of width spacing().
struct AxisSpec {
  double origin = 0.0;
  double extent = 0.0;
  std::size_t count = 0;

  double spacing() const { return extent / double(count - 1); }
};

/// Rectangular time-space lattice. Axis 0 is time by convention in the
/// solver modules; the geometry here is agnostic.
class Grid {
 public:
  static constexpr std::size_t kMaxTotalNodes = std::size_t(1) << 26;

  Grid() = default;
  explicit Grid(std::vector<AxisSpec> axes);

  std::size_t n_axes() const { return axes_.size(); }
  const AxisSpec& axis(std::size_t j) const { return axes_[j]; }
  const std::vector<AxisSpec>& axes() const { return axes_; }

  std::vector<std::size_t> node_counts() const;
  std::vector<std::size_t> cell_counts() const;
  std::size_t total_nodes() const;
  std::size_t total_cells() const;

  /// Product of cell spacings (the cell volume).
  double cell_volume() const;

  double node_coord(std::size_t j, std::size_t idx) const {
    return axes_[j].origin + double(idx) * axes_[j].spacing();
  }
  double cell_midpoint(std::size_t j, std::size_t idx) const {
    return axes_[j].origin + (double(idx) + 0.5) * axes_[j].spacing();
  }

  /// Row-major linearization over an arbitrary shape.
  static std::size_t linear_index(const std::vector<std::size_t>& shape,
                                  const std::vector<std::size_t>& idx);
  static std::vector<std::size_t> unravel(const std::vector<std::size_t>& shape,
                                          std::size_t linear);

  bool operator==(const Grid& other) const;

 private:
  std::vector<AxisSpec> axes_;
};

/// Deterministic seeding: (master_seed, stream_index) fixes a realization
/// completely, independent of traversal order and worker count.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

}  // namespace fracheat
