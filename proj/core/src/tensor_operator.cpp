#include "overbern/tensor_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace overbern {

namespace {

void check_dimension(int d) {
  if (d < 1 || d > kMaxDimension) {
    throw std::domain_error("tensor: dimension must be in [1," +
                            std::to_string(kMaxDimension) + "]");
  }
}

void check_degrees(const std::vector<int>& degrees) {
  check_dimension(static_cast<int>(degrees.size()));
  for (int l : degrees) {
    if (l < 1) throw std::domain_error("tensor: degrees must be >= 1");
  }
}

}  // namespace

VertexTable sample_vertices(const ScalarField& f) {
  const int d = f.dimension();
  check_dimension(d);
  VertexTable table;
  table.dimension = d;
  table.values.resize(std::size_t{1} << d);
  std::vector<double> point(static_cast<std::size_t>(d), 0.0);
  for (unsigned mask = 0; mask < table.values.size(); ++mask) {
    for (int a = 0; a < d; ++a) {
      point[static_cast<std::size_t>(a)] = (mask >> a) & 1u ? 1.0 : 0.0;
    }
    table.values[mask] = f(std::span<const double>(point));
  }
  return table;
}

double multilinear_eval(const VertexTable& table, std::span<const double> x) {
  if (static_cast<int>(x.size()) != table.dimension) {
    throw std::invalid_argument("multilinear_eval: point/dimension mismatch");
  }
  double acc = 0.0;
  const unsigned count = 1u << table.dimension;
  for (unsigned mask = 0; mask < count; ++mask) {
    double w = 1.0;
    for (int a = 0; a < table.dimension; ++a) {
      w *= (mask >> a) & 1u ? x[static_cast<std::size_t>(a)]
                            : 1.0 - x[static_cast<std::size_t>(a)];
    }
    acc += w * table.values[mask];
  }
  return acc;
}

double limit_eval(const ScalarField& f, std::span<const double> x) {
  return multilinear_eval(sample_vertices(f), x);
}

double limit_eval(const ScalarField& f, std::initializer_list<double> x) {
  return limit_eval(f, std::span<const double>(x.begin(), x.size()));
}

double contraction_constant(const std::vector<int>& degrees) {
  check_degrees(degrees);
  double mass = 1.0;
  for (int l : degrees) mass *= std::exp2(1.0 - l);
  return 1.0 - mass;
}

double vertex_mass(const std::vector<int>& degrees, std::span<const double> x) {
  check_degrees(degrees);
  if (x.size() != degrees.size()) {
    throw std::invalid_argument("vertex_mass: point/degrees mismatch");
  }
  double mass = 1.0;
  for (std::size_t a = 0; a < degrees.size(); ++a) {
    const double t = x[a];
    mass *= std::pow(1.0 - t, degrees[a]) + std::pow(t, degrees[a]);
  }
  return mass;
}

double min_vertex_mass(const std::vector<int>& degrees) {
  check_degrees(degrees);
  double analytic = 1.0;
  for (int l : degrees) {
    const double factor = std::exp2(1.0 - l);
    // The factor (1-t)^l + t^l is convex with its minimum at t = 1/2; scan
    // each axis to catch any regression of that claim.
    double scanned = 1.0;
    for (int i = 0; i <= 100; ++i) {
      const double t = i / 100.0;
      scanned = std::min(scanned, std::pow(1.0 - t, l) + std::pow(t, l));
    }
    if (scanned < factor - 1e-12) {
      throw std::logic_error("min_vertex_mass: grid scan undercut the closed form");
    }
    analytic *= factor;
  }
  return analytic;
}

TensorIterate::TensorIterate(const ScalarField& f, std::vector<int> degrees,
                             std::vector<long long> powers, std::size_t capacity)
    : grid_(degrees, capacity) {
  if (degrees.size() != powers.size()) {
    throw std::invalid_argument("TensorIterate: degrees/powers length mismatch");
  }
  for (long long n : powers) {
    if (n < 1) throw std::domain_error("TensorIterate: powers must be >= 1");
  }
  grid_ = sample_nodes(f, degrees, capacity);
  for (int a = 0; a < grid_.dimension(); ++a) {
    const long long n = powers[static_cast<std::size_t>(a)];
    if (n == 1) continue;  // identity on node values
    const BernsteinMatrix m =
        matrix_power(transfer_matrix(degrees[static_cast<std::size_t>(a)]), n - 1);
    mode_apply_inplace(grid_, a, m);
  }
}

double TensorIterate::operator()(std::span<const double> x) const {
  const int d = grid_.dimension();
  if (static_cast<int>(x.size()) != d) {
    throw std::invalid_argument("TensorIterate: point/dimension mismatch");
  }
  // Contract the last axis first: fibers are contiguous and the working
  // buffer shrinks by one axis per pass.
  std::vector<double> work = grid_.values();
  std::size_t remaining = work.size();
  for (int a = d - 1; a >= 0; --a) {
    const std::vector<double> row =
        basis_row(grid_.degrees()[static_cast<std::size_t>(a)],
                  x[static_cast<std::size_t>(a)]);
    const std::size_t n = row.size();
    const std::size_t blocks = remaining / n;
    for (std::size_t b = 0; b < blocks; ++b) {
      double acc = 0.0;
      const double* chunk = work.data() + b * n;
      for (std::size_t j = 0; j < n; ++j) acc += chunk[j] * row[j];
      work[b] = acc;
    }
    remaining = blocks;
  }
  return work[0];
}

double tensor_iterate_eval(const ScalarField& f, const std::vector<int>& degrees,
                           const std::vector<long long>& powers,
                           std::span<const double> x, std::size_t capacity) {
  return TensorIterate(f, degrees, powers, capacity)(x);
}

double tensor_iterate_eval(const ScalarField& f, const std::vector<int>& degrees,
                           const std::vector<long long>& powers,
                           std::initializer_list<double> x) {
  return tensor_iterate_eval(f, degrees, powers,
                             std::span<const double>(x.begin(), x.size()));
}

}  // namespace overbern
