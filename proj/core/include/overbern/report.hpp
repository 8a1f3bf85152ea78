#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace overbern {

inline constexpr double kPassSlack = 1e-12;

/// One evaluation record of an inequality check: rhs - lhs is the margin,
/// negative margin past the slack means the check failed there.
struct PointRecord {
  std::vector<double> point;  // evaluation point, trial index, or iterate count
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  int tag = 0;  // experiment-specific label (e.g. which of two inequalities)
};

struct BoundReport {
  std::vector<PointRecord> points;
  double max_lhs = 0.0;
  double min_margin = 0.0;
  bool pass = false;
  /// True when any grid (lower-bound) modulus fed the right-hand side; a
  /// failure in that mode may be an artifact of the underestimated rhs.
  bool advisory = false;
  std::string moduli_mode = "none";  // "analytic" | "grid_lower_bound" | "none"
  std::vector<long long> resolutions;
  std::uint64_t seed = 0;
  std::optional<double> worst_ratio;  // contraction runs only

  /// Fills the aggregates from `points`.
  void finalize() {
    max_lhs = 0.0;
    min_margin = points.empty() ? 0.0 : points.front().margin;
    for (const PointRecord& p : points) {
      if (p.lhs > max_lhs) max_lhs = p.lhs;
      if (p.margin < min_margin) min_margin = p.margin;
    }
    pass = min_margin >= -kPassSlack;
  }
};

struct ConvergenceReport {
  std::vector<PointRecord> points;  // point = {n}, lhs = E(n), rhs = fitted model
  double max_lhs = 0.0;
  double min_margin = 0.0;
  bool pass = false;
  bool trivially_converged = false;
  double fitted_rate = 0.0;
  double expected_rate = 0.0;
  std::string moduli_mode = "none";
  std::vector<long long> resolutions;
  std::uint64_t seed = 0;
};

}  // namespace overbern
