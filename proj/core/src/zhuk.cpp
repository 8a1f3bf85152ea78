#include "overbern/zhuk.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace overbern {

namespace {

constexpr int kFitGridPoints = 2001;
constexpr int kMaxExchanges = 100;
constexpr int kSimpsonPanels = 1024;

struct Reference {
  int i0, i1, i2;  // sorted grid indices
};

struct Levelled {
  double slope, intercept, deviation;  // signed deviation at i0
};

Levelled solve_reference(const std::vector<double>& xs,
                         const std::vector<double>& fs, const Reference& ref) {
  const double t0 = xs[static_cast<std::size_t>(ref.i0)];
  const double t1 = xs[static_cast<std::size_t>(ref.i1)];
  const double t2 = xs[static_cast<std::size_t>(ref.i2)];
  const double f0 = fs[static_cast<std::size_t>(ref.i0)];
  const double f1 = fs[static_cast<std::size_t>(ref.i1)];
  const double f2 = fs[static_cast<std::size_t>(ref.i2)];
  Levelled out;
  out.slope = (f2 - f0) / (t2 - t0);
  out.deviation = (f0 - f1 - out.slope * (t0 - t1)) / 2.0;
  out.intercept = f0 - out.slope * t0 - out.deviation;
  return out;
}

}  // namespace

LinearFit best_linear_minimax(const ScalarField& f, double lo, double hi,
                              double tol) {
  if (f.dimension() != 1) {
    throw std::invalid_argument("best_linear_minimax: field must be univariate");
  }
  if (!(lo < hi)) {
    throw std::domain_error("best_linear_minimax: need lo < hi");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("best_linear_minimax: tol must be > 0");
  }

  std::vector<double> xs(kFitGridPoints), fs(kFitGridPoints);
  for (int i = 0; i < kFitGridPoints; ++i) {
    xs[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * i / (kFitGridPoints - 1);
    fs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }

  Reference ref{0, (kFitGridPoints - 1) / 2, kFitGridPoints - 1};
  Levelled lev{};
  double prev_max = -1.0;
  bool converged = false;

  for (int pass = 0; pass < kMaxExchanges; ++pass) {
    lev = solve_reference(xs, fs, ref);
    int worst = 0;
    double worst_abs = 0.0;
    for (int i = 0; i < kFitGridPoints; ++i) {
      const double r = fs[static_cast<std::size_t>(i)] -
                       (lev.slope * xs[static_cast<std::size_t>(i)] + lev.intercept);
      const double rabs = std::abs(r);
      if (rabs > worst_abs) {
        worst_abs = rabs;
        worst = i;
      }
    }
    if (worst_abs <= std::abs(lev.deviation) + tol ||
        (prev_max >= 0.0 && std::abs(worst_abs - prev_max) < tol)) {
      converged = true;
      break;
    }
    prev_max = worst_abs;

    const double r_worst =
        fs[static_cast<std::size_t>(worst)] -
        (lev.slope * xs[static_cast<std::size_t>(worst)] + lev.intercept);
    const double s_worst = r_worst >= 0.0 ? 1.0 : -1.0;
    const double s0 = lev.deviation >= 0.0 ? 1.0 : -1.0;  // sign at i0; alternates

    if (worst < ref.i0) {
      if (s_worst == s0) {
        ref.i0 = worst;
      } else {
        ref = Reference{worst, ref.i0, ref.i1};
      }
    } else if (worst > ref.i2) {
      if (s_worst == s0) {  // residual at i2 has sign s0 as well
        ref.i2 = worst;
      } else {
        ref = Reference{ref.i1, ref.i2, worst};
      }
    } else if (worst == ref.i0 || worst == ref.i1 || worst == ref.i2) {
      converged = true;  // extremum already levelled; grid optimum reached
      break;
    } else if (worst < ref.i1) {
      (s_worst == s0 ? ref.i0 : ref.i1) = worst;
    } else {
      (s_worst == -s0 ? ref.i1 : ref.i2) = worst;
    }
  }

  LinearFit fit;
  fit.slope = lev.slope;
  fit.intercept = lev.intercept;
  fit.lo = lo;
  fit.hi = hi;
  fit.witness = {xs[static_cast<std::size_t>(ref.i0)],
                 xs[static_cast<std::size_t>(ref.i1)],
                 xs[static_cast<std::size_t>(ref.i2)]};
  double max_resid = 0.0;
  for (int i = 0; i < kFitGridPoints; ++i) {
    max_resid = std::max(max_resid,
                         std::abs(fs[static_cast<std::size_t>(i)] -
                                  fit(xs[static_cast<std::size_t>(i)])));
  }
  fit.error = max_resid;

  if (!converged) {
    throw std::runtime_error(
        "best_linear_minimax: no convergence after " +
        std::to_string(kMaxExchanges) + " exchanges; best found slope=" +
        std::to_string(fit.slope) + " intercept=" + std::to_string(fit.intercept) +
        " error=" + std::to_string(fit.error));
  }
  return fit;
}

ZhukExtension::ZhukExtension(ScalarField f, double a, double b, double h)
    : f_(std::move(f)), a_(a), b_(b), h_(h),
      left_{}, right_{} {
  if (f_.dimension() != 1) {
    throw std::invalid_argument("ZhukExtension: field must be univariate");
  }
  if (!(a_ < b_)) {
    throw std::domain_error("ZhukExtension: need a < b");
  }
  if (!(h_ > 0.0 && h_ <= (b_ - a_) / 2.0)) {
    throw std::domain_error("ZhukExtension: need 0 < h <= (b-a)/2, got h = " +
                            std::to_string(h_));
  }
  left_ = best_linear_minimax(f_, a_, a_ + 2.0 * h_);
  right_ = best_linear_minimax(f_, b_ - 2.0 * h_, b_);
}

double ZhukExtension::operator()(double x) const {
  if (x < a_) {
    if (x >= a_ - h_) return left_(x);
    throw std::domain_error("ZhukExtension: x below a-h");
  }
  if (x <= b_) return f_(x);
  if (x <= b_ + h_) return right_(x);
  throw std::domain_error("ZhukExtension: x above b+h");
}

double smooth_eval(const ZhukExtension& ext, double x) {
  const double a = ext.a(), b = ext.b(), h = ext.h();
  if (!(a <= x && x <= b)) {
    throw std::domain_error("smooth_eval: x must lie in [a,b]");
  }

  // Breakpoints of the integrand in t: the kernel kink at 0 and the points
  // where x+t crosses a or b (where f_h switches formula or jumps).
  std::vector<double> cuts = {-h, h};
  for (double c : {0.0, a - x, b - x}) {
    if (c > -h && c < h) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double lo = cuts[p], hi = cuts[p + 1];
    if (!(hi > lo)) continue;
    // Lock the branch of f_h from the piece midpoint: f_h may jump at a and
    // b, and a sample landing exactly on the cut must take this piece's
    // one-sided limit, not the other branch's value.
    const double arg_mid = x + 0.5 * (lo + hi);
    const auto integrand = [&](double t) {
      const double arg = x + t;
      double v;
      if (arg_mid < a) {
        v = ext.left()(arg);
      } else if (arg_mid > b) {
        v = ext.right()(arg);
      } else {
        v = ext.field()(std::clamp(arg, a, b));
      }
      return (1.0 - std::abs(t) / h) * v;
    };
    const double step = (hi - lo) / kSimpsonPanels;
    double sum = integrand(lo) + integrand(hi);
    for (int i = 1; i < kSimpsonPanels; ++i) {
      sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(lo + step * i);
    }
    total += sum * step / 3.0;
  }
  return total / h;
}

double smooth_second_derivative(const ZhukExtension& ext, double x) {
  const double h = ext.h();
  if (!(ext.a() <= x && x <= ext.b())) {
    throw std::domain_error("smooth_second_derivative: x must lie in [a,b]");
  }
  return (ext(x + h) - 2.0 * ext(x) + ext(x - h)) / (h * h);
}

BoundReport lemma1_check(const ScalarField& f, double h, int scan_resolution,
                         std::optional<ModulusEstimate> modulus) {
  if (f.dimension() != 1) {
    throw std::invalid_argument("lemma1_check: field must be univariate");
  }
  if (!(h > 0.0 && h <= 0.5)) {
    throw std::domain_error("lemma1_check: need 0 < h <= 1/2 on [0,1]");
  }
  if (scan_resolution < 1) {
    throw std::invalid_argument("lemma1_check: scan resolution must be >= 1");
  }
  if (modulus && modulus->h + 1e-12 < h) {
    throw std::invalid_argument(
        "lemma1_check: supplied modulus was taken at a smaller step than h");
  }
  const ModulusEstimate w =
      modulus ? *modulus : omega2(f, h, 5000);

  const ZhukExtension ext(f, 0.0, 1.0, h);
  const double rhs_dev = 0.75 * w.value;
  const double rhs_second = 1.5 * w.value / (h * h);

  BoundReport report;
  report.points.reserve(2 * (static_cast<std::size_t>(scan_resolution) + 1));
  std::vector<double> second_lhs(static_cast<std::size_t>(scan_resolution) + 1);
  for (int i = 0; i <= scan_resolution; ++i) {
    const double x = static_cast<double>(i) / scan_resolution;
    const double lhs = std::abs(f(x) - smooth_eval(ext, x));
    report.points.push_back({{x}, lhs, rhs_dev, rhs_dev - lhs, 1});
    second_lhs[static_cast<std::size_t>(i)] =
        std::abs(smooth_second_derivative(ext, x));
  }
  for (int i = 0; i <= scan_resolution; ++i) {
    const double x = static_cast<double>(i) / scan_resolution;
    const double lhs = second_lhs[static_cast<std::size_t>(i)];
    report.points.push_back({{x}, lhs, rhs_second, rhs_second - lhs, 2});
  }

  report.moduli_mode =
      w.kind == ModulusKind::analytic ? "analytic" : "grid_lower_bound";
  report.advisory = w.kind != ModulusKind::analytic;
  report.resolutions = {scan_resolution};
  if (w.resolution > 0) report.resolutions.push_back(w.resolution);
  report.finalize();
  return report;
}

ScalarField axis_smooth(const ScalarField& f, int axis,
                        std::span<const double> frozen, double h) {
  const int d = f.dimension();
  if (axis < 0 || axis >= d) {
    throw std::domain_error("axis_smooth: axis out of range");
  }
  if (static_cast<int>(frozen.size()) != d - 1) {
    throw std::invalid_argument(
        "axis_smooth: need exactly d-1 frozen coordinates");
  }
  std::vector<double> fixed(frozen.begin(), frozen.end());
  const ScalarField partial(1, [f, axis, fixed, d](std::span<const double> t) {
    std::vector<double> point(static_cast<std::size_t>(d));
    int src = 0;
    for (int a = 0; a < d; ++a) {
      point[static_cast<std::size_t>(a)] =
          (a == axis) ? t[0] : fixed[static_cast<std::size_t>(src++)];
    }
    return f(std::span<const double>(point));
  });
  auto ext = std::make_shared<const ZhukExtension>(partial, 0.0, 1.0, h);
  return ScalarField(1, [ext](std::span<const double> t) {
    return smooth_eval(*ext, t[0]);
  });
}

}  // namespace overbern
