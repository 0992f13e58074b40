#include "fracheat/wis.hpp"

#include <cmath>

#include "fracheat/numeric.hpp"

namespace fracheat {

void Integrand::validate() const {
  if (cell_values.size() != grid.total_cells())
    throw DimensionMismatch("Integrand: one value per grid cell required");
}

double wis_integrate(const Integrand& f, const FieldRealization& increments) {
  f.validate();
  if (increments.kind == FieldKind::fbm_values)
    throw DomainError("wis_integrate: needs increments, not node values");
  if (!(f.grid == increments.grid))
    throw DimensionMismatch("wis_integrate: integrand and noise grids differ");
  Kahan<double> acc;
  for (std::size_t c = 0; c < f.cell_values.size(); ++c)
    acc.add(f.cell_values[c] * increments.values[c]);
  return acc.sum;
}

namespace {

// Applies the symmetric per-axis matrix A (dense, n x n) along `axis`.
void apply_axis_matrix(std::vector<double>& v,
                       const std::vector<std::size_t>& shape, std::size_t axis,
                       const std::vector<double>& a) {
  const std::size_t n = shape[axis];
  std::size_t stride = 1;
  for (std::size_t j = axis + 1; j < shape.size(); ++j) stride *= shape[j];
  const std::size_t block = stride * n;
  std::vector<double> line(n), out(n);
  for (std::size_t b = 0; b < v.size() / block; ++b)
    for (std::size_t s = 0; s < stride; ++s) {
      const std::size_t base = b * block + s;
      for (std::size_t i = 0; i < n; ++i) line[i] = v[base + i * stride];
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += a[i * n + k] * line[k];
        out[i] = acc;
      }
      for (std::size_t i = 0; i < n; ++i) v[base + i * stride] = out[i];
    }
}

}  // namespace

double isometry_norm(const Integrand& f, const HurstVector& H) {
  f.validate();
  H.validate(f.grid.n_axes());
  const auto cshape = f.grid.cell_counts();

  // g = (tensor product of per-axis increment-covariance matrices) f,
  // then |f|_phi^2 = <f, g>. The per-axis entries are the exact integrals
  // H(2H-1) int int |u-v|^{2H-2} over cell pairs.
  std::vector<double> g = f.cell_values;
  for (std::size_t j = 0; j < cshape.size(); ++j) {
    const std::size_t n = cshape[j];
    const double h = f.grid.axis(j).spacing();
    const double o = f.grid.axis(j).origin;
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const double a1 = o + double(i) * h, b1 = a1 + h;
        const double a2 = o + double(k) * h, b2 = a2 + h;
        a[i * n + k] = axis_increment_covariance(a1, b1, a2, b2, H[j]);
      }
    apply_axis_matrix(g, cshape, j, a);
  }

  Kahan<double> acc;
  for (std::size_t c = 0; c < g.size(); ++c)
    acc.add(f.cell_values[c] * g[c]);
  return acc.sum;
}

double k_constant(double hj) {
  if (!(hj > 0.5) || !(hj < 1.0))
    throw DomainError("k_constant: H must lie in (1/2, 1)");
  const double c = c_h_constant(hj);
  return c * c *
         (4.0 / ((hj - 1.5) * (hj - 1.5)) +
          2.0 / ((hj - 0.5) * (1.0 - hj)));
}

double l2_upper_bound(const Integrand& second_moments, const HurstVector& H,
                      const std::vector<double>& s_extents) {
  second_moments.validate();
  H.validate(second_moments.grid.n_axes());
  if (s_extents.size() != H.size())
    throw DimensionMismatch("l2_upper_bound: extents/Hurst size mismatch");

  Kahan<double> acc;
  for (double v : second_moments.cell_values) {
    if (v < 0.0) throw NegativeMoment("l2_upper_bound: negative E[f^2]");
    acc.add(v);
  }
  double bound = acc.sum * second_moments.grid.cell_volume();
  for (std::size_t j = 0; j < H.size(); ++j) {
    if (!(s_extents[j] > 0.0))
      throw DomainError("l2_upper_bound: extents must be positive");
    bound *= k_constant(H[j]) * std::pow(s_extents[j], 2.0 * H[j] - 1.0);
  }
  return bound;
}

}  // namespace fracheat
