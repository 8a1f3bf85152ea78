#pragma once

#include <vector>

#include "overbern/scalar_field.hpp"

namespace overbern {

enum class ModulusKind { grid_lower_bound, analytic };

/// A second-order modulus value together with how it was obtained. Grid
/// estimates discretize the sup over a uniform lattice with steps restricted
/// to lattice multiples, so they are lower bounds of the true modulus; they
/// are nondecreasing along lattice refinements (N -> multiple of N).
struct ModulusEstimate {
  double h = 0.0;
  int axis = 0;               // 0-based
  double value = 0.0;
  long long resolution = 0;   // lattice intervals per axis; 0 for analytic
  ModulusKind kind = ModulusKind::grid_lower_bound;
};

/// omega_2(f; h) for univariate f: max over x = i/N and delta = j/N with
/// 0 < delta <= h and x +- delta in [0,1] of |f(x-delta) - 2f(x) + f(x+delta)|.
ModulusEstimate omega2(const ScalarField& f, double h, int resolution);

/// Partial modulus along one axis: the second difference steps along `axis`
/// (0-based) while every other coordinate sweeps the same lattice.
ModulusEstimate partial_omega2(const ScalarField& f, int axis, double h,
                               int resolution);

/// 1000 for d = 1, 200 per axis otherwise (the full scan is O(N^(d+1))).
int default_moduli_resolution(int dimension);

/// One O(N^(d+1)) sweep per (field, axis, lattice); afterwards the grid
/// modulus for any h on that lattice is a prefix-max lookup. Used by the
/// experiment runners that need omega_2 at a different h per evaluation point.
class PartialOmega2Table {
 public:
  PartialOmega2Table(const ScalarField& f, int axis, int resolution);

  /// Grid lower bound with h snapped down to a lattice multiple; h below
  /// one lattice step yields 0 (no admissible step, still a lower bound).
  ModulusEstimate query(double h) const;

  int axis() const { return axis_; }
  int resolution() const { return resolution_; }

 private:
  int axis_ = 0;
  int resolution_ = 0;
  std::vector<double> prefix_max_;  // [j] = max over steps j' <= j
};

}  // namespace overbern
