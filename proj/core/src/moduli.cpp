#include "overbern/moduli.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "overbern/node_grid.hpp"

namespace overbern {

namespace {

struct Lattice {
  int dimension = 0;
  int resolution = 0;                 // points per axis = resolution + 1
  std::vector<std::size_t> strides;   // row-major
  std::vector<double> values;
};

Lattice sample_lattice(const ScalarField& f, int resolution) {
  const int d = f.dimension();
  if (d < 1 || d > kMaxDimension) {
    throw std::domain_error("moduli: dimension must be in [1," +
                            std::to_string(kMaxDimension) + "]");
  }
  if (resolution < 2) {
    throw std::invalid_argument("moduli: resolution must be >= 2");
  }
  const std::size_t extent = static_cast<std::size_t>(resolution) + 1;
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) {
    if (total > kDefaultGridCapacity / extent) {
      throw std::length_error("moduli: sample lattice exceeds capacity");
    }
    total *= extent;
  }
  Lattice lat;
  lat.dimension = d;
  lat.resolution = resolution;
  lat.strides.assign(static_cast<std::size_t>(d), 1);
  for (int a = d - 2; a >= 0; --a) {
    lat.strides[static_cast<std::size_t>(a)] =
        lat.strides[static_cast<std::size_t>(a) + 1] * extent;
  }
  lat.values.resize(total);
  std::vector<int> index(static_cast<std::size_t>(d), 0);
  std::vector<double> point(static_cast<std::size_t>(d), 0.0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (int a = 0; a < d; ++a) {
      point[static_cast<std::size_t>(a)] =
          static_cast<double>(index[static_cast<std::size_t>(a)]) / resolution;
    }
    lat.values[flat] = f(std::span<const double>(point));
    for (int a = d - 1; a >= 0; --a) {
      if (++index[static_cast<std::size_t>(a)] <= resolution) break;
      index[static_cast<std::size_t>(a)] = 0;
    }
  }
  return lat;
}

/// Max |second difference| at lattice step j along `axis`, over all base
/// points with both shifted points inside the cube.
double step_max(const Lattice& lat, int axis, int j) {
  const int n = lat.resolution;
  const std::size_t stride = lat.strides[static_cast<std::size_t>(axis)];
  const std::size_t extent = static_cast<std::size_t>(n) + 1;
  std::size_t outer = 1;
  for (int a = 0; a < axis; ++a) outer *= extent;
  std::size_t inner = 1;
  for (int a = axis + 1; a < lat.dimension; ++a) inner *= extent;

  double best = 0.0;
  const double* v = lat.values.data();
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t in = 0; in < inner; ++in) {
      const std::size_t base = o * extent * inner + in;
      for (int i = j; i + j <= n; ++i) {
        const std::size_t mid = base + static_cast<std::size_t>(i) * stride;
        const double diff = v[mid - static_cast<std::size_t>(j) * stride] -
                            2.0 * v[mid] +
                            v[mid + static_cast<std::size_t>(j) * stride];
        best = std::max(best, std::abs(diff));
      }
    }
  }
  return best;
}

int max_step(double h, int resolution) {
  if (!(h > 0.0 && h <= 1.0)) {
    throw std::domain_error("moduli: h must lie in (0,1], got " +
                            std::to_string(h));
  }
  const int j = static_cast<int>(std::floor(h * resolution + 1e-9));
  return std::min(j, resolution);
}

void check_axis(const ScalarField& f, int axis) {
  if (axis < 0 || axis >= f.dimension()) {
    throw std::domain_error("moduli: axis out of range");
  }
}

}  // namespace

int default_moduli_resolution(int dimension) {
  return dimension == 1 ? 1000 : 200;
}

ModulusEstimate partial_omega2(const ScalarField& f, int axis, double h,
                               int resolution) {
  check_axis(f, axis);
  const int jmax = max_step(h, resolution);
  if (jmax < 1) {
    throw std::invalid_argument(
        "partial_omega2: no admissible step on a lattice of " +
        std::to_string(resolution) + " intervals for h = " + std::to_string(h));
  }
  const Lattice lat = sample_lattice(f, resolution);
  double best = 0.0;
  for (int j = 1; j <= jmax; ++j) {
    best = std::max(best, step_max(lat, axis, j));
  }
  return ModulusEstimate{h, axis, best, resolution, ModulusKind::grid_lower_bound};
}

ModulusEstimate omega2(const ScalarField& f, double h, int resolution) {
  if (f.dimension() != 1) {
    throw std::invalid_argument("omega2: field must be univariate");
  }
  return partial_omega2(f, 0, h, resolution);
}

PartialOmega2Table::PartialOmega2Table(const ScalarField& f, int axis,
                                       int resolution)
    : axis_(axis), resolution_(resolution) {
  check_axis(f, axis);
  const Lattice lat = sample_lattice(f, resolution);
  prefix_max_.assign(static_cast<std::size_t>(resolution) + 1, 0.0);
  double running = 0.0;
  for (int j = 1; j <= resolution; ++j) {
    // Steps above resolution/2 admit no base point; step_max returns 0 there.
    running = std::max(running, step_max(lat, axis, j));
    prefix_max_[static_cast<std::size_t>(j)] = running;
  }
}

ModulusEstimate PartialOmega2Table::query(double h) const {
  int j = 0;
  if (h > 0.0) {
    j = std::min(static_cast<int>(std::floor(h * resolution_ + 1e-9)), resolution_);
  }
  return ModulusEstimate{h, axis_, prefix_max_[static_cast<std::size_t>(j)],
                         resolution_, ModulusKind::grid_lower_bound};
}

}  // namespace overbern
