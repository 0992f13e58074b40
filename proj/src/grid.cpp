#include "fracheat/grid.hpp"

namespace fracheat {

Grid::Grid(std::vector<AxisSpec> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw DomainError("Grid: needs at least one axis");
  std::size_t total = 1;
  for (const auto& a : axes_) {
    if (!(a.extent > 0.0)) throw DomainError("Grid: axis extent must be > 0");
    if (a.count < 2) throw DomainError("Grid: axis needs at least 2 nodes");
    if (a.origin < 0.0) throw DomainError("Grid: axis origin must be >= 0");
    if (total > kMaxTotalNodes / a.count)
      throw CapExceeded("Grid: total node count exceeds cap");
    total *= a.count;
  }
}

std::vector<std::size_t> Grid::node_counts() const {
  std::vector<std::size_t> c(axes_.size());
  for (std::size_t j = 0; j < axes_.size(); ++j) c[j] = axes_[j].count;
  return c;
}

std::vector<std::size_t> Grid::cell_counts() const {
  std::vector<std::size_t> c(axes_.size());
  for (std::size_t j = 0; j < axes_.size(); ++j) c[j] = axes_[j].count - 1;
  return c;
}

std::size_t Grid::total_nodes() const {
  std::size_t t = 1;
  for (const auto& a : axes_) t *= a.count;
  return t;
}

std::size_t Grid::total_cells() const {
  std::size_t t = 1;
  for (const auto& a : axes_) t *= a.count - 1;
  return t;
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (const auto& a : axes_) v *= a.spacing();
  return v;
}

std::size_t Grid::linear_index(const std::vector<std::size_t>& shape,
                               const std::vector<std::size_t>& idx) {
  std::size_t lin = 0;
  for (std::size_t j = 0; j < shape.size(); ++j) lin = lin * shape[j] + idx[j];
  return lin;
}

std::vector<std::size_t> Grid::unravel(const std::vector<std::size_t>& shape,
                                       std::size_t linear) {
  std::vector<std::size_t> idx(shape.size());
  for (std::size_t j = shape.size(); j-- > 0;) {
    idx[j] = linear % shape[j];
    linear /= shape[j];
  }
  return idx;
}

bool Grid::operator==(const Grid& other) const {
  if (axes_.size() != other.axes_.size()) return false;
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    if (axes_[j].origin != other.axes_[j].origin ||
        axes_[j].extent != other.axes_[j].extent ||
        axes_[j].count != other.axes_[j].count)
      return false;
  }
  return true;
}

}  // namespace fracheat
