#include "overbern/node_grid.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace overbern {

NodeGrid::NodeGrid(std::vector<int> degrees, std::size_t capacity)
    : degrees_(std::move(degrees)) {
  if (degrees_.empty() || static_cast<int>(degrees_.size()) > kMaxDimension) {
    throw std::domain_error("NodeGrid: dimension must be in [1," +
                            std::to_string(kMaxDimension) + "]");
  }
  std::size_t total = 1;
  for (int l : degrees_) {
    if (l < 1) throw std::domain_error("NodeGrid: degrees must be >= 1");
    const std::size_t extent = static_cast<std::size_t>(l) + 1;
    if (total > capacity / extent) {
      throw std::length_error("NodeGrid: grid size exceeds capacity of " +
                              std::to_string(capacity) + " entries");
    }
    total *= extent;
  }
  strides_.assign(degrees_.size(), 1);
  for (int a = static_cast<int>(degrees_.size()) - 2; a >= 0; --a) {
    strides_[static_cast<std::size_t>(a)] =
        strides_[static_cast<std::size_t>(a) + 1] *
        (static_cast<std::size_t>(degrees_[static_cast<std::size_t>(a) + 1]) + 1);
  }
  values_.assign(total, 0.0);
}

std::size_t NodeGrid::offset(std::span<const int> index) const {
  if (index.size() != degrees_.size()) {
    throw std::invalid_argument("NodeGrid: index rank mismatch");
  }
  std::size_t off = 0;
  for (std::size_t a = 0; a < index.size(); ++a) {
    const int j = index[a];
    if (j < 0 || j > degrees_[a]) {
      throw std::out_of_range("NodeGrid: index out of range on axis " +
                              std::to_string(a));
    }
    off += static_cast<std::size_t>(j) * strides_[a];
  }
  return off;
}

NodeGrid sample_nodes(const ScalarField& f, const std::vector<int>& degrees,
                      std::size_t capacity) {
  if (f.dimension() != static_cast<int>(degrees.size())) {
    throw std::invalid_argument("sample_nodes: field/degrees dimension mismatch");
  }
  NodeGrid grid(degrees, capacity);
  const int d = grid.dimension();
  std::vector<int> index(static_cast<std::size_t>(d), 0);
  std::vector<double> point(static_cast<std::size_t>(d), 0.0);
  std::vector<double>& out = grid.values();
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    for (int a = 0; a < d; ++a) {
      point[static_cast<std::size_t>(a)] =
          static_cast<double>(index[static_cast<std::size_t>(a)]) /
          degrees[static_cast<std::size_t>(a)];
    }
    out[flat] = f(std::span<const double>(point));
    for (int a = d - 1; a >= 0; --a) {
      if (++index[static_cast<std::size_t>(a)] <= degrees[static_cast<std::size_t>(a)]) break;
      index[static_cast<std::size_t>(a)] = 0;
    }
  }
  return grid;
}

void mode_apply_inplace(NodeGrid& grid, int axis, const BernsteinMatrix& m) {
  const int d = grid.dimension();
  if (axis < 0 || axis >= d) {
    throw std::domain_error("mode_apply: axis out of range");
  }
  if (m.degree != grid.degrees()[static_cast<std::size_t>(axis)]) {
    throw std::invalid_argument(
        "mode_apply: matrix degree " + std::to_string(m.degree) +
        " does not match axis degree " +
        std::to_string(grid.degrees()[static_cast<std::size_t>(axis)]));
  }
  const std::size_t n = grid.extent(axis);
  const std::size_t stride = grid.stride(axis);
  std::size_t outer = 1;
  for (int a = 0; a < axis; ++a) outer *= grid.extent(a);
  const std::size_t inner = stride;  // product of extents after `axis`

  std::vector<double> fiber(n, 0.0);
  std::vector<double>& v = grid.values();
  for (std::size_t o = 0; o < outer; ++o) {
    const std::size_t block = o * n * inner;
    for (std::size_t i = 0; i < inner; ++i) {
      const std::size_t base = block + i;
      for (std::size_t j = 0; j < n; ++j) fiber[j] = v[base + j * stride];
      for (std::size_t r = 0; r < n; ++r) {
        double acc = 0.0;
        const double* row = m.entries.data() + r * n;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * fiber[j];
        v[base + r * stride] = acc;
      }
    }
  }
}

NodeGrid mode_apply(const NodeGrid& grid, int axis, const BernsteinMatrix& m) {
  NodeGrid out = grid;
  mode_apply_inplace(out, axis, m);
  return out;
}

}  // namespace overbern
