#pragma once

#include <string>
#include <vector>

#include "fracheat/grid.hpp"

namespace fracheat {

enum class FieldKind { fbm_values, fbm_increments, white_noise };

std::string to_string(FieldKind k);
FieldKind field_kind_from_string(const std::string& s);

/// One sampled array on a Grid. Values of kind fbm_values live on grid
/// nodes; increments and white noise live on cells (one entry per cell).
struct FieldRealization {
  Grid grid;
  FieldKind kind = FieldKind::white_noise;
  std::vector<double> values;  // row-major over nodes or cells
  SeedSpec seed;
  std::string method;  // "cholesky", "multiplier", "iid", ...
  std::vector<double> hurst;  // empty for plain white noise

  std::vector<std::size_t> shape() const {
    return kind == FieldKind::fbm_values ? grid.node_counts()
                                         : grid.cell_counts();
  }
};

/// Flat binary field format: 16-byte header (magic "FHF1", u32 axis count,
/// u16 per-axis array dims, zero padded), then little-endian IEEE doubles in
/// row-major order. A JSON sidecar `<path>.json` carries grid, Hurst vector,
/// seed, kind and method.
void write_field(const FieldRealization& f, const std::string& path);
FieldRealization read_field(const std::string& path);

}  // namespace fracheat
