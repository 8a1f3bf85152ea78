#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "overbern/bernstein.hpp"
#include "overbern/scalar_field.hpp"

namespace overbern {

inline constexpr std::size_t kDefaultGridCapacity = 10'000'000;
inline constexpr int kMaxDimension = 4;

/// Dense d-dimensional array of values attached to the tensor nodes
/// (j1/l1, ..., jd/ld). Flat row-major storage; the last axis is contiguous.
class NodeGrid {
 public:
  explicit NodeGrid(std::vector<int> degrees,
                    std::size_t capacity = kDefaultGridCapacity);

  int dimension() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t size() const { return values_.size(); }
  std::size_t extent(int axis) const {
    return static_cast<std::size_t>(degrees_[static_cast<std::size_t>(axis)]) + 1;
  }
  std::size_t stride(int axis) const {
    return strides_[static_cast<std::size_t>(axis)];
  }

  double at(std::span<const int> index) const { return values_[offset(index)]; }
  double& at(std::span<const int> index) { return values_[offset(index)]; }
  double at(std::initializer_list<int> index) const {
    return at(std::span<const int>(index.begin(), index.size()));
  }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t offset(std::span<const int> index) const;

  std::vector<int> degrees_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
};

/// values[(j1,...,jd)] = f(j1/l1, ..., jd/ld).
NodeGrid sample_nodes(const ScalarField& f, const std::vector<int>& degrees,
                      std::size_t capacity = kDefaultGridCapacity);

/// Replaces every 1-d fiber along `axis` (0-based) by m applied to it.
/// Distinct fibers are disjoint, so this is one parametric extension of the
/// univariate operator realized on node values.
void mode_apply_inplace(NodeGrid& grid, int axis, const BernsteinMatrix& m);

NodeGrid mode_apply(const NodeGrid& grid, int axis, const BernsteinMatrix& m);

}  // namespace overbern
