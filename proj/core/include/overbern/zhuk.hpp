#pragma once

#include <array>
#include <optional>
#include <span>

#include "overbern/moduli.hpp"
#include "overbern/report.hpp"
#include "overbern/scalar_field.hpp"

namespace overbern {

/// Best uniform degree-1 approximation on [lo, hi], found by exchange
/// iteration on a 2001-point grid. `error` is the max residual over that
/// grid; `witness` holds three grid points whose residuals alternate in
/// sign at (nearly) that magnitude.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double error = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::array<double, 3> witness{};

  double operator()(double x) const { return slope * x + intercept; }
};

LinearFit best_linear_minimax(const ScalarField& f, double lo, double hi,
                              double tol = 1e-10);

/// f continued past each end of [a, b] by its minimax line on the adjacent
/// 2h-wide strip: the left line on [a, a+2h] serves [a-h, a), the right
/// line on [b-2h, b] serves (b, b+h]. No continuity at a or b is enforced;
/// jumps up to the fit error may remain.
class ZhukExtension {
 public:
  ZhukExtension(ScalarField f, double a, double b, double h);

  /// f_h on [a-h, b+h].
  double operator()(double x) const;

  double a() const { return a_; }
  double b() const { return b_; }
  double h() const { return h_; }
  const LinearFit& left() const { return left_; }
  const LinearFit& right() const { return right_; }
  const ScalarField& field() const { return f_; }

 private:
  ScalarField f_;
  double a_, b_, h_;
  LinearFit left_, right_;
};

inline ZhukExtension extend(const ScalarField& f, double a, double b, double h) {
  return ZhukExtension(f, a, b, h);
}

/// S_h(f; x) = (1/h) Int_{-h}^{h} (1 - |t|/h) f_h(x+t) dt for x in [a, b].
/// The integral is split at t = 0 and wherever x+t crosses a or b, then each
/// smooth piece gets composite Simpson with 1024 panels.
double smooth_eval(const ZhukExtension& ext, double x);

/// (S_h f)''(x) = [f_h(x+h) - 2 f_h(x) + f_h(x-h)] / h^2, the exact a.e.
/// second derivative of the double-Steklov form of S_h.
double smooth_second_derivative(const ZhukExtension& ext, double x);

/// Checks both smoothing inequalities on [0,1] at scan_resolution+1 points:
///   max |f - S_h f|      <= (3/4)  omega_2(f; h)
///   max |(S_h f)''|      <= (3/2) h^-2 omega_2(f; h)
/// With no modulus supplied, a grid estimate at 5000 intervals is used and
/// the report is flagged advisory (the grid value lower-bounds the true
/// modulus). Inequality records carry tag 1 and tag 2 respectively.
BoundReport lemma1_check(const ScalarField& f, double h,
                         int scan_resolution = 1000,
                         std::optional<ModulusEstimate> modulus = std::nullopt);

/// Freezes every coordinate except `axis` (0-based) at the given values
/// (listed in axis order, skipping `axis`) and returns the univariate
/// smoothing S_h of that partial function on [0,1].
ScalarField axis_smooth(const ScalarField& f, int axis,
                        std::span<const double> frozen, double h);

}  // namespace overbern
