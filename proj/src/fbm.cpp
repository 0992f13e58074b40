#include "fracheat/fbm.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>

#include "fracheat/fourier.hpp"
#include "fracheat/rng.hpp"
#include "fracheat/special_functions.hpp"

namespace fracheat {

void HurstVector::validate(std::size_t expected_axes) const {
  if (expected_axes != 0 && h.size() != expected_axes)
    throw DimensionMismatch("HurstVector: expected " +
                            std::to_string(expected_axes) + " components");
  if (h.empty()) throw DomainError("HurstVector: empty");
  for (double v : h)
    if (!(v > 0.5) || !(v < 1.0))
      throw DomainError("HurstVector: components must lie in (1/2, 1)");
}

double c_h_constant(double hj) {
  if (!(hj > 0.5) || !(hj < 1.0))
    throw DomainError("c_h_constant: H must lie in (1/2, 1)");
  const double a = hj - 0.5;
  return 1.0 / (2.0 * gamma_fn(a) * std::cos(M_PI / 2.0 * a));
}

double fbm_covariance(const Point& x, const Point& y, const HurstVector& H) {
  if (x.size() != y.size() || x.size() != H.size())
    throw DimensionMismatch("fbm_covariance: dimension mismatch");
  double prod = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double th = 2.0 * H[j];
    prod *= 0.5 * (std::pow(std::abs(x[j]), th) + std::pow(std::abs(y[j]), th) -
                   std::pow(std::abs(x[j] - y[j]), th));
  }
  return prod;
}

double axis_increment_covariance(double a1, double b1, double a2, double b2,
                                 double hj) {
  const double th = 2.0 * hj;
  return 0.5 * (std::pow(std::abs(b1 - a2), th) + std::pow(std::abs(a1 - b2), th) -
                std::pow(std::abs(a1 - a2), th) - std::pow(std::abs(b1 - b2), th));
}

FieldRealization sample_white_noise(const Grid& grid, const SeedSpec& seed) {
  FieldRealization f;
  f.grid = grid;
  f.kind = FieldKind::white_noise;
  f.seed = seed;
  f.method = "iid";
  const double sd = std::sqrt(grid.cell_volume());
  const std::size_t n = grid.total_cells();
  f.values.resize(n);
  for (std::size_t c = 0; c < n; ++c)
    f.values[c] = sd * gaussian_at(seed, c);
  return f;
}

// ---------------------------------------------------------------------------
// Operator M
// ---------------------------------------------------------------------------

namespace {

// antiderivative of |u|^{H-3/2}: sign(u) |u|^{H-1/2} / (H-1/2)
double m_kernel_antideriv(double u, double hj) {
  const double p = hj - 0.5;
  const double s = u >= 0 ? 1.0 : -1.0;
  return s * std::pow(std::abs(u), p) / p;
}

// antiderivative taken twice (even function): |w|^{H+1/2}/((H-1/2)(H+1/2))
double m_kernel_antideriv2(double w, double hj) {
  return std::pow(std::abs(w), hj + 0.5) / ((hj - 0.5) * (hj + 0.5));
}

// Applies one axis of M along `axis` of the row-major array `v` with shape
// `shape`, convolving node values with exact cell-integrated kernel weights.
void apply_m_axis(std::vector<double>& v, const std::vector<std::size_t>& shape,
                  std::size_t axis, double h, double hj) {
  const std::size_t n = shape[axis];
  const double ch = c_h_constant(hj);
  // weights for offsets -(n-1)..(n-1), exact integral over one cell width
  std::vector<double> w(2 * n - 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double o = double(std::ptrdiff_t(i) - std::ptrdiff_t(n - 1));
    w[i] = ch * (m_kernel_antideriv((o + 0.5) * h, hj) -
                 m_kernel_antideriv((o - 0.5) * h, hj));
  }

  std::size_t stride = 1;
  for (std::size_t j = axis + 1; j < shape.size(); ++j) stride *= shape[j];
  std::size_t outer = 1;
  for (std::size_t j = 0; j < shape.size(); ++j)
    if (j != axis) outer *= shape[j];

  std::vector<double> line(n), conv(n);
  // iterate over all 1-d lines along `axis`
  std::size_t block = stride * n;
  std::size_t n_blocks = v.size() / block;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    for (std::size_t s = 0; s < stride; ++s) {
      const std::size_t base = b * block + s;
      for (std::size_t i = 0; i < n; ++i) line[i] = v[base + i * stride];
      for (std::size_t m = 0; m < n; ++m) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k)
          acc += w[k + (n - 1) - m] * line[k];
        conv[m] = acc;
      }
      for (std::size_t i = 0; i < n; ++i) v[base + i * stride] = conv[i];
    }
  }
  (void)outer;
}

}  // namespace

std::vector<double> apply_m_operator(const Grid& grid,
                                     const std::vector<double>& node_values,
                                     const HurstVector& H) {
  H.validate(grid.n_axes());
  const auto shape = grid.node_counts();
  if (node_values.size() != grid.total_nodes())
    throw DimensionMismatch("apply_m_operator: value count mismatch");
  std::vector<double> v = node_values;
  for (std::size_t j = 0; j < shape.size(); ++j)
    apply_m_axis(v, shape, j, grid.axis(j).spacing(), H[j]);
  return v;
}

// ---------------------------------------------------------------------------
// fBm sampling
// ---------------------------------------------------------------------------

struct FbmSampler::Impl {
  Grid grid;
  HurstVector hurst;
  FbmMethod method = FbmMethod::cholesky;

  // cholesky state
  Eigen::MatrixXd chol_l;                   // lower factor over interior nodes
  std::vector<std::size_t> interior_nodes;  // full-grid linear node indices

  // multiplier state
  std::vector<int> padded_dims;
  std::vector<std::complex<double>> kernel_hat;  // FFT of separable kernel

  FieldRealization realize_values(const SeedSpec& seed) const;
  FieldRealization realize_increments(const SeedSpec& seed) const;
};

namespace {

void require_zero_origin(const Grid& grid) {
  for (const auto& a : grid.axes())
    if (a.origin != 0.0)
      throw DomainError("fBm sampling requires origin 0 on every axis");
}

// Interior = nodes with every index >= 1; the field vanishes on the
// hyperplanes {x_j = 0} so boundary nodes are pinned to zero.
std::vector<std::size_t> interior_node_indices(const Grid& grid) {
  const auto shape = grid.node_counts();
  std::vector<std::size_t> out;
  out.reserve(grid.total_cells());
  const std::size_t total = grid.total_nodes();
  for (std::size_t lin = 0; lin < total; ++lin) {
    auto idx = Grid::unravel(shape, lin);
    bool interior = true;
    for (auto i : idx)
      if (i == 0) interior = false;
    if (interior) out.push_back(lin);
  }
  return out;
}

void build_cholesky(FbmSampler::Impl& impl) {
  const auto& grid = impl.grid;
  const auto shape = grid.node_counts();
  impl.interior_nodes = interior_node_indices(grid);
  const std::size_t m = impl.interior_nodes.size();
  if (m > FbmSampler::kCholeskyCap)
    throw CapExceeded("FbmSampler: cholesky limited to " +
                      std::to_string(FbmSampler::kCholeskyCap) +
                      " interior nodes, got " + std::to_string(m));

  std::vector<Point> coords(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto idx = Grid::unravel(shape, impl.interior_nodes[i]);
    Point p(shape.size());
    for (std::size_t j = 0; j < shape.size(); ++j)
      p[j] = grid.node_coord(j, idx[j]);
    coords[i] = std::move(p);
  }

  Eigen::MatrixXd cov(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i; k < m; ++k) {
      const double c = fbm_covariance(coords[i], coords[k], impl.hurst);
      cov(Eigen::Index(i), Eigen::Index(k)) = c;
      cov(Eigen::Index(k), Eigen::Index(i)) = c;
    }

  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) {
    // one shot of diagonal jitter, then give up
    const double jitter = 1e-12 * cov.trace() / double(m);
    cov.diagonal().array() += jitter;
    llt.compute(cov);
    if (llt.info() != Eigen::Success)
      throw NotPositiveDefinite("FbmSampler: covariance not factorizable");
  }
  impl.chol_l = llt.matrixL();
}

void build_multiplier(FbmSampler::Impl& impl) {
  const auto& grid = impl.grid;
  const auto cells = grid.cell_counts();
  const std::size_t n = cells.size();

  impl.padded_dims.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    impl.padded_dims[j] = int(2 * cells[j]);

  // per-axis kernel lines: w(o) = (C_H/h) * [Psi((1-o)h) + Psi((1+o)h) - 2 Psi(oh)],
  // the exact double cell integral of C_H |u-v|^{H-3/2}; then rescaled so the
  // implied Var[B_H(extent)] over the core cells is exact.
  std::vector<std::vector<double>> lines(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double h = grid.axis(j).spacing();
    const double hj = impl.hurst[j];
    const double ch = c_h_constant(hj);
    const int p = impl.padded_dims[j];
    std::vector<double> w(std::size_t(p));
    for (int i = 0; i < p; ++i) {
      // circular offset in [-p/2, p/2)
      int o = i <= p / 2 ? i : i - p;
      w[std::size_t(i)] =
          ch / h *
          (m_kernel_antideriv2((1.0 - o) * h, hj) +
           m_kernel_antideriv2((1.0 + o) * h, hj) -
           2.0 * m_kernel_antideriv2(double(o) * h, hj));
    }
    // implied variance of B(extent): sum over noise cells of the squared
    // cumulative kernel, times the cell width
    const int core = int(cells[j]);
    double var = 0.0;
    for (int m = 0; m < p; ++m) {
      double cum = 0.0;
      for (int c = 0; c < core; ++c) {
        int o = m - c;
        if (o > p / 2) o -= p;      // circular distance, as the FFT sees it
        if (o < -p / 2 + 1) o += p;
        const std::size_t i = std::size_t(o >= 0 ? o : o + p);
        cum += w[i];
      }
      var += cum * cum * h;
    }
    const double target = std::pow(grid.axis(j).extent, 2.0 * hj);
    const double scale = std::sqrt(target / var);
    for (auto& x : w) x *= scale;
    lines[j] = std::move(w);
  }

  // separable kernel on the padded lattice, then its DFT
  std::size_t total = 1;
  for (int d : impl.padded_dims) total *= std::size_t(d);
  impl.kernel_hat.assign(total, {0.0, 0.0});
  std::vector<std::size_t> pshape(impl.padded_dims.begin(),
                                  impl.padded_dims.end());
  for (std::size_t lin = 0; lin < total; ++lin) {
    auto idx = Grid::unravel(pshape, lin);
    double v = 1.0;
    for (std::size_t j = 0; j < n; ++j) v *= lines[j][idx[j]];
    impl.kernel_hat[lin] = v;
  }
  fft::transform(impl.kernel_hat, impl.padded_dims, -1);
}

}  // namespace

FbmSampler::FbmSampler(const Grid& grid, const HurstVector& H,
                       FbmMethod method) {
  H.validate(grid.n_axes());
  require_zero_origin(grid);
  auto impl = std::make_shared<Impl>();
  impl->grid = grid;
  impl->hurst = H;
  if (method == FbmMethod::automatic) {
    method = interior_node_indices(grid).size() <= kCholeskyCap
                 ? FbmMethod::cholesky
                 : FbmMethod::multiplier;
  }
  impl->method = method;
  if (method == FbmMethod::cholesky)
    build_cholesky(*impl);
  else
    build_multiplier(*impl);
  impl_ = std::move(impl);
}

const char* FbmSampler::method_name() const {
  return impl_->method == FbmMethod::cholesky ? "cholesky" : "multiplier";
}

FieldRealization FbmSampler::Impl::realize_values(const SeedSpec& seed) const {
  FieldRealization f;
  f.grid = grid;
  f.kind = FieldKind::fbm_values;
  f.seed = seed;
  f.method = method == FbmMethod::cholesky ? "cholesky" : "multiplier";
  f.hurst = hurst.h;

  if (method == FbmMethod::cholesky) {
    const std::size_t m = interior_nodes.size();
    Eigen::VectorXd z(Eigen::Index(m));
    for (std::size_t i = 0; i < m; ++i)
      z(Eigen::Index(i)) = gaussian_at(seed, interior_nodes[i]);
    Eigen::VectorXd v = chol_l * z;
    f.values.assign(grid.total_nodes(), 0.0);
    for (std::size_t i = 0; i < m; ++i)
      f.values[interior_nodes[i]] = v(Eigen::Index(i));
    return f;
  }

  // multiplier: filter padded white noise, crop, then cumulative-sum cells
  auto inc = realize_increments(seed);
  const auto nshape = grid.node_counts();
  const auto cshape = grid.cell_counts();
  f.values.assign(grid.total_nodes(), 0.0);
  for (std::size_t lin = 0; lin < inc.values.size(); ++lin) {
    auto idx = Grid::unravel(cshape, lin);
    for (auto& i : idx) ++i;  // increment of cell c lands at node c+1
    f.values[Grid::linear_index(nshape, idx)] = inc.values[lin];
  }
  // prefix sums along each axis turn cell increments into node values
  for (std::size_t axis = 0; axis < nshape.size(); ++axis) {
    std::size_t stride = 1;
    for (std::size_t j = axis + 1; j < nshape.size(); ++j) stride *= nshape[j];
    const std::size_t n = nshape[axis];
    const std::size_t block = stride * n;
    for (std::size_t b = 0; b < f.values.size() / block; ++b)
      for (std::size_t s = 0; s < stride; ++s) {
        const std::size_t base = b * block + s;
        for (std::size_t i = 1; i < n; ++i)
          f.values[base + i * stride] += f.values[base + (i - 1) * stride];
      }
  }
  return f;
}

FieldRealization FbmSampler::Impl::realize_increments(
    const SeedSpec& seed) const {
  if (method == FbmMethod::cholesky)
    return to_increments(realize_values(seed));

  FieldRealization f;
  f.grid = grid;
  f.kind = FieldKind::fbm_increments;
  f.seed = seed;
  f.method = "multiplier";
  f.hurst = hurst.h;

  std::size_t total = 1;
  for (int d : padded_dims) total *= std::size_t(d);
  const double sd = std::sqrt(grid.cell_volume());
  std::vector<std::complex<double>> buf(total);
  for (std::size_t c = 0; c < total; ++c)
    buf[c] = sd * gaussian_at(seed, c);
  fft::transform(buf, padded_dims, -1);
  for (std::size_t i = 0; i < total; ++i) buf[i] *= kernel_hat[i];
  fft::transform(buf, padded_dims, +1);
  const double norm = 1.0 / double(total);

  const auto cshape = grid.cell_counts();
  std::vector<std::size_t> pshape(padded_dims.begin(), padded_dims.end());
  f.values.resize(grid.total_cells());
  for (std::size_t lin = 0; lin < f.values.size(); ++lin) {
    auto idx = Grid::unravel(cshape, lin);
    f.values[lin] = buf[Grid::linear_index(pshape, idx)].real() * norm;
  }
  return f;
}

FieldRealization FbmSampler::values(const SeedSpec& seed) const {
  return impl_->realize_values(seed);
}

FieldRealization FbmSampler::increments(const SeedSpec& seed) const {
  return impl_->realize_increments(seed);
}

FieldRealization sample_fbm(const Grid& grid, const HurstVector& H,
                            const SeedSpec& seed, FbmMethod method) {
  return FbmSampler(grid, H, method).values(seed);
}

FieldRealization to_increments(const FieldRealization& values_field) {
  if (values_field.kind != FieldKind::fbm_values)
    throw DomainError("to_increments: input must hold node values");
  const Grid& grid = values_field.grid;
  const auto nshape = grid.node_counts();
  const auto cshape = grid.cell_counts();
  const std::size_t n = nshape.size();

  FieldRealization out;
  out.grid = grid;
  out.kind = FieldKind::fbm_increments;
  out.seed = values_field.seed;
  out.method = values_field.method;
  out.hurst = values_field.hurst;
  out.values.resize(grid.total_cells());

  // inclusion-exclusion over the 2^n corners of each cell
  const std::size_t corners = std::size_t(1) << n;
  std::vector<std::size_t> idx(n);
  for (std::size_t lin = 0; lin < out.values.size(); ++lin) {
    auto cell = Grid::unravel(cshape, lin);
    double acc = 0.0;
    for (std::size_t mask = 0; mask < corners; ++mask) {
      int ones = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const bool hi = (mask >> j) & 1u;
        idx[j] = cell[j] + (hi ? 1 : 0);
        ones += hi ? 1 : 0;
      }
      const double sign = ((n - std::size_t(ones)) % 2 == 0) ? 1.0 : -1.0;
      acc += sign * values_field.values[Grid::linear_index(nshape, idx)];
    }
    out.values[lin] = acc;
  }
  return out;
}

}  // namespace fracheat
