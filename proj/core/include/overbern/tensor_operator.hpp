#pragma once

#include <span>
#include <vector>

#include "overbern/node_grid.hpp"

namespace overbern {

/// 2^d vertex values of a field, indexed by bitmask: bit delta set means
/// x_delta = 1 at that vertex (bit 0 = first axis).
struct VertexTable {
  int dimension = 0;
  std::vector<double> values;  // length 2^d

  double at(unsigned mask) const { return values[mask]; }
};

VertexTable sample_vertices(const ScalarField& f);

/// Multilinear interpolation of the vertex values at x.
double multilinear_eval(const VertexTable& table, std::span<const double> x);

/// (Lf)(x): the multilinear interpolant of f's 2^d vertex values. This is
/// the common fixed point of every tensor-product Bernstein operator and
/// the uniform limit of their powers.
double limit_eval(const ScalarField& f, std::span<const double> x);
double limit_eval(const ScalarField& f, std::initializer_list<double> x);

/// 1 - prod_delta 2^(1-l_delta): the Lipschitz factor of one tensor
/// application on the class of fields sharing fixed vertex values.
double contraction_constant(const std::vector<int>& degrees);

/// prod_delta [(1-x_delta)^l_delta + x_delta^l_delta].
double vertex_mass(const std::vector<int>& degrees, std::span<const double> x);

/// Minimum of vertex_mass over [0,1]^d. Each factor is minimized at 1/2,
/// so the value is prod 2^(1-l_delta); a per-axis grid scan cross-checks
/// the closed form on every call.
double min_vertex_mass(const std::vector<int>& degrees);

/// One overiterate of the tensor-product operator, precomputed: the field
/// is sampled once and each axis' transfer-matrix power is applied once;
/// evaluation anywhere is then a per-axis basis contraction.
class TensorIterate {
 public:
  TensorIterate(const ScalarField& f, std::vector<int> degrees,
                std::vector<long long> powers,
                std::size_t capacity = kDefaultGridCapacity);

  double operator()(std::span<const double> x) const;
  double operator()(std::initializer_list<double> x) const {
    return (*this)(std::span<const double>(x.begin(), x.size()));
  }

  const NodeGrid& grid() const { return grid_; }

 private:
  NodeGrid grid_;
};

/// (B_{l1}^{n1} o ... o B_{ld}^{nd})(f; x) with per-axis power counts.
/// Equal powers n give the n-th power of the full tensor operator.
double tensor_iterate_eval(const ScalarField& f, const std::vector<int>& degrees,
                           const std::vector<long long>& powers,
                           std::span<const double> x,
                           std::size_t capacity = kDefaultGridCapacity);
double tensor_iterate_eval(const ScalarField& f, const std::vector<int>& degrees,
                           const std::vector<long long>& powers,
                           std::initializer_list<double> x);

}  // namespace overbern
