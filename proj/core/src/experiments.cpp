#include "overbern/experiments.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "overbern/bernstein.hpp"
#include "overbern/corpus.hpp"
#include "overbern/moduli.hpp"
#include "overbern/node_grid.hpp"
#include "overbern/prng.hpp"
#include "overbern/tensor_operator.hpp"
#include "overbern/zhuk.hpp"

namespace overbern {

namespace {

void validate_common(const ExperimentConfig& c) {
  if (c.degrees.empty()) {
    throw std::invalid_argument("config: degrees must not be empty");
  }
  for (int l : c.degrees) {
    if (l < 1) throw std::invalid_argument("config: degrees must be >= 1");
  }
  for (long long n : c.powers) {
    if (n < 1) throw std::invalid_argument("config: powers must be >= 1");
  }
  if (!(c.constant > 0.0)) {
    throw std::invalid_argument("config: constant must be > 0");
  }
}

struct LatticeWalker {
  int dimension;
  int points;  // per axis
  std::vector<int> index;
  std::vector<double> x;

  explicit LatticeWalker(int d, int pts)
      : dimension(d), points(pts), index(static_cast<std::size_t>(d), 0),
        x(static_cast<std::size_t>(d), 0.0) {
    if (points < 2) {
      throw std::invalid_argument("config: eval_resolution must be >= 2");
    }
    refresh();
  }

  void refresh() {
    for (int a = 0; a < dimension; ++a) {
      x[static_cast<std::size_t>(a)] =
          static_cast<double>(index[static_cast<std::size_t>(a)]) / (points - 1);
    }
  }

  bool advance() {
    for (int a = dimension - 1; a >= 0; --a) {
      if (++index[static_cast<std::size_t>(a)] <= points - 1) {
        refresh();
        return true;
      }
      index[static_cast<std::size_t>(a)] = 0;
    }
    refresh();
    return false;
  }

  bool interior() const {
    for (int a = 0; a < dimension; ++a) {
      const int i = index[static_cast<std::size_t>(a)];
      if (i == 0 || i == points - 1) return false;
    }
    return true;
  }
};

/// Per-axis modulus source: the registered closed form when requested and
/// available, otherwise a precomputed grid table.
class ModulusSource {
 public:
  ModulusSource(const CorpusEntry& entry, ModuliMode requested, int resolution) {
    if (requested == ModuliMode::analytic && entry.analytic) {
      analytic_ = entry.analytic;
    } else {
      resolution_ = resolution;
      for (int a = 0; a < entry.dimension; ++a) {
        tables_.push_back(
            std::make_unique<PartialOmega2Table>(entry.field, a, resolution));
      }
    }
  }

  bool analytic() const { return static_cast<bool>(analytic_); }
  int resolution() const { return resolution_; }

  double value(double h, int axis) const {
    if (h <= 0.0) return 0.0;  // omega_2(f; 0) = 0 for continuous f
    if (analytic_) return analytic_(h, axis);
    return tables_[static_cast<std::size_t>(axis)]->query(h).value;
  }

 private:
  std::function<double(double, int)> analytic_;
  std::vector<std::unique_ptr<PartialOmega2Table>> tables_;
  int resolution_ = 0;
};

double iterate_decay(int degree, long long power) {
  return std::pow(1.0 - 1.0 / degree, static_cast<double>(power));
}

/// Contract a node grid against per-axis basis rows at x (the evaluation
/// step of the tensor operator, shared by the convergence sweep).
double contract_grid(const NodeGrid& grid,
                     const std::vector<std::vector<double>>& rows) {
  std::vector<double> work = grid.values();
  std::size_t remaining = work.size();
  for (int a = grid.dimension() - 1; a >= 0; --a) {
    const std::vector<double>& row = rows[static_cast<std::size_t>(a)];
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

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::bound_univariate: return "bound_univariate";
    case Experiment::bound_tensor: return "bound_tensor";
    case Experiment::contraction: return "contraction";
    case Experiment::converge_to_L: return "converge_to_L";
    case Experiment::zhuk_lemma1: return "zhuk_lemma1";
    case Experiment::optimality_dlinear: return "optimality_dlinear";
  }
  throw std::logic_error("to_string: bad Experiment value");
}

std::string to_string(ModuliMode m) {
  return m == ModuliMode::analytic ? "analytic" : "grid";
}

Experiment experiment_from_string(const std::string& name) {
  for (Experiment e : {Experiment::bound_univariate, Experiment::bound_tensor,
                       Experiment::contraction, Experiment::converge_to_L,
                       Experiment::zhuk_lemma1, Experiment::optimality_dlinear}) {
    if (to_string(e) == name) return e;
  }
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

ModuliMode moduli_mode_from_string(const std::string& name) {
  if (name == "analytic") return ModuliMode::analytic;
  if (name == "grid") return ModuliMode::grid;
  throw std::invalid_argument("unknown moduli mode '" + name + "'");
}

int default_eval_resolution(int dimension) {
  return dimension <= 2 ? 41 : 11;
}

BoundReport run_bound_univariate(const ExperimentConfig& config) {
  validate_common(config);
  if (config.degrees.size() != 1 || config.powers.size() != 1) {
    throw std::invalid_argument("bound_univariate: needs one degree and one power");
  }
  const int l = config.degrees[0];
  const long long k = config.powers[0];
  const CorpusEntry entry = corpus(config.function_id, 1, config.seed);
  const int points =
      config.eval_resolution > 0 ? config.eval_resolution : default_eval_resolution(1);
  if (points < 2) {
    throw std::invalid_argument("config: eval_resolution must be >= 2");
  }
  const int mod_res = config.moduli_resolution > 0 ? config.moduli_resolution
                                                   : default_moduli_resolution(1);
  const ModulusSource moduli(entry, config.moduli_mode, mod_res);
  const double decay = iterate_decay(l, k);

  BoundReport report;
  report.points.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = static_cast<double>(i) / (points - 1);
    const double lhs =
        std::abs(iterate_eval(l, k, entry.field, x) - b1_eval(entry.field, x));
    const double harg = std::sqrt(x * (1.0 - x) * decay);
    const double rhs = config.constant * moduli.value(harg, 0);
    report.points.push_back({{x}, lhs, rhs, rhs - lhs, 0});
  }
  report.moduli_mode = moduli.analytic() ? "analytic" : "grid_lower_bound";
  report.advisory = !moduli.analytic();
  report.resolutions = {points};
  if (!moduli.analytic()) report.resolutions.push_back(moduli.resolution());
  report.seed = config.seed;
  report.finalize();
  return report;
}

BoundReport run_bound_tensor(const ExperimentConfig& config) {
  validate_common(config);
  const int d = static_cast<int>(config.degrees.size());
  if (d < 2) {
    throw std::invalid_argument("bound_tensor: needs dimension >= 2");
  }
  if (config.powers.size() != config.degrees.size()) {
    throw std::invalid_argument("bound_tensor: degrees/powers length mismatch");
  }
  const CorpusEntry entry = corpus(config.function_id, d, config.seed);
  const int points =
      config.eval_resolution > 0 ? config.eval_resolution : default_eval_resolution(d);
  const int mod_res = config.moduli_resolution > 0 ? config.moduli_resolution
                                                   : default_moduli_resolution(d);
  const ModulusSource moduli(entry, config.moduli_mode, mod_res);

  const TensorIterate iterate(entry.field, config.degrees, config.powers);
  const VertexTable vertices = sample_vertices(entry.field);
  std::vector<double> decay(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    decay[static_cast<std::size_t>(a)] =
        iterate_decay(config.degrees[static_cast<std::size_t>(a)],
                      config.powers[static_cast<std::size_t>(a)]);
  }

  BoundReport report;
  LatticeWalker walker(d, points);
  do {
    const std::span<const double> x(walker.x);
    const double lhs = std::abs(iterate(x) - multilinear_eval(vertices, x));
    double sum = 0.0;
    for (int a = 0; a < d; ++a) {
      const double xa = walker.x[static_cast<std::size_t>(a)];
      const double harg =
          std::sqrt(xa * (1.0 - xa) * decay[static_cast<std::size_t>(a)]);
      sum += moduli.value(harg, a);
    }
    const double rhs = config.constant * sum;
    report.points.push_back({walker.x, lhs, rhs, rhs - lhs, 0});
  } while (walker.advance());

  report.moduli_mode = moduli.analytic() ? "analytic" : "grid_lower_bound";
  report.advisory = !moduli.analytic();
  report.resolutions = {points};
  if (!moduli.analytic()) report.resolutions.push_back(moduli.resolution());
  report.seed = config.seed;
  report.finalize();
  return report;
}

BoundReport run_contraction(const ExperimentConfig& config) {
  validate_common(config);
  if (config.trials < 1) {
    throw std::invalid_argument("contraction: trials must be >= 1");
  }
  const std::vector<int>& degrees = config.degrees;
  const int d = static_cast<int>(degrees.size());
  const double c = contraction_constant(degrees);

  std::vector<BernsteinMatrix> mats;
  mats.reserve(degrees.size());
  for (int l : degrees) mats.push_back(transfer_matrix(l));

  SplitMix64 rng(config.seed);
  BoundReport report;
  double worst = 0.0;
  for (int trial = 0; trial < config.trials; ++trial) {
    NodeGrid u(degrees), v(degrees);
    for (double& val : u.values()) val = rng.next_symmetric();
    for (double& val : v.values()) val = rng.next_symmetric();
    // The pair must agree at the 2^d hypercube vertices.
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<int> idx(static_cast<std::size_t>(d), 0);
      for (int a = 0; a < d; ++a) {
        idx[static_cast<std::size_t>(a)] =
            (mask >> a) & 1u ? degrees[static_cast<std::size_t>(a)] : 0;
      }
      v.at(std::span<const int>(idx)) = u.at(std::span<const int>(idx));
    }
    NodeGrid diff(degrees);
    for (std::size_t i = 0; i < diff.values().size(); ++i) {
      diff.values()[i] = u.values()[i] - v.values()[i];
    }
    double before = 0.0;
    for (double val : diff.values()) before = std::max(before, std::abs(val));
    for (int a = 0; a < d; ++a) mode_apply_inplace(diff, a, mats[static_cast<std::size_t>(a)]);
    double after = 0.0;
    for (double val : diff.values()) after = std::max(after, std::abs(val));

    const double rhs = c * before;
    report.points.push_back(
        {{static_cast<double>(trial)}, after, rhs, rhs - after, 0});
    if (before > 0.0) worst = std::max(worst, after / before);
  }
  report.worst_ratio = worst;
  report.moduli_mode = "none";
  report.resolutions = {};
  report.seed = config.seed;
  report.finalize();
  return report;
}

ConvergenceReport run_converge_to_L(const ExperimentConfig& config) {
  validate_common(config);
  const int d = static_cast<int>(config.degrees.size());
  if (config.fit_min < 1 || config.fit_max < config.fit_min) {
    throw std::invalid_argument("converge_to_L: bad fit window");
  }
  const CorpusEntry entry = corpus(config.function_id, d, config.seed);
  const int points =
      config.eval_resolution > 0 ? config.eval_resolution : default_eval_resolution(d);

  std::vector<BernsteinMatrix> mats;
  for (int l : config.degrees) mats.push_back(transfer_matrix(l));

  // Evaluation lattice, its limit values, and per-point basis rows.
  const VertexTable vertices = sample_vertices(entry.field);
  std::vector<std::vector<double>> lattice;
  std::vector<double> limit_values;
  LatticeWalker walker(d, points);
  do {
    lattice.push_back(walker.x);
    limit_values.push_back(multilinear_eval(vertices, walker.x));
  } while (walker.advance());
  std::vector<std::vector<std::vector<double>>> rows(lattice.size());
  for (std::size_t p = 0; p < lattice.size(); ++p) {
    rows[p].resize(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
      rows[p][static_cast<std::size_t>(a)] =
          basis_row(config.degrees[static_cast<std::size_t>(a)],
                    lattice[p][static_cast<std::size_t>(a)]);
    }
  }

  NodeGrid grid = sample_nodes(entry.field, config.degrees);
  std::vector<double> errors(static_cast<std::size_t>(config.fit_max) + 1, 0.0);
  for (int n = 1; n <= config.fit_max; ++n) {
    if (n > 1) {
      for (int a = 0; a < d; ++a) mode_apply_inplace(grid, a, mats[static_cast<std::size_t>(a)]);
    }
    double err = 0.0;
    for (std::size_t p = 0; p < lattice.size(); ++p) {
      err = std::max(err, std::abs(contract_grid(grid, rows[p]) - limit_values[p]));
    }
    errors[static_cast<std::size_t>(n)] = err;
  }

  double expected = 0.0;
  for (int l : config.degrees) expected = std::max(expected, 1.0 - 1.0 / l);

  // Least-squares line through (n, log E(n)) over the usable fit window.
  double sn = 0.0, se = 0.0, snn = 0.0, sne = 0.0;
  int count = 0;
  for (int n = config.fit_min; n <= config.fit_max; ++n) {
    const double e = errors[static_cast<std::size_t>(n)];
    if (e <= 1e-13) continue;
    const double le = std::log(e);
    sn += n; se += le; snn += static_cast<double>(n) * n; sne += n * le;
    ++count;
  }

  ConvergenceReport report;
  report.seed = config.seed;
  report.resolutions = {points};
  report.expected_rate = expected;
  double level = 0.0;
  if (count < 2) {
    report.trivially_converged = true;
    report.fitted_rate = 0.0;
    report.pass = true;
    report.min_margin = 0.0;
  } else {
    const double slope = (count * sne - sn * se) / (count * snn - sn * sn);
    const double intercept = (se - slope * sn) / count;
    report.fitted_rate = std::exp(slope);
    level = std::exp(intercept);
    const double tolerance = 0.05 * expected;
    report.min_margin = tolerance - std::abs(report.fitted_rate - expected);
    report.pass = report.min_margin >= -kPassSlack;
  }

  for (int n = 1; n <= config.fit_max; ++n) {
    const double e = errors[static_cast<std::size_t>(n)];
    const double model =
        report.trivially_converged ? 0.0 : level * std::pow(report.fitted_rate, n);
    report.points.push_back({{static_cast<double>(n)}, e, model, model - e, 0});
    report.max_lhs = std::max(report.max_lhs, e);
  }
  return report;
}

BoundReport run_zhuk_lemma1(const ExperimentConfig& config) {
  validate_common(config);
  const CorpusEntry entry = corpus(config.function_id, 1, config.seed);
  const int scan_points =
      config.eval_resolution > 0 ? config.eval_resolution : 1001;
  if (scan_points < 2) {
    throw std::invalid_argument("zhuk_lemma1: need at least 2 scan points");
  }
  std::optional<ModulusEstimate> modulus;
  if (config.moduli_mode == ModuliMode::analytic && entry.analytic) {
    modulus = analytic_omega2(entry, config.h, 0);
  } else if (config.moduli_resolution > 0) {
    modulus = omega2(entry.field, config.h, config.moduli_resolution);
  }
  BoundReport report =
      lemma1_check(entry.field, config.h, scan_points - 1, modulus);
  report.seed = config.seed;
  return report;
}

BoundReport run_optimality_dlinear(const ExperimentConfig& config) {
  validate_common(config);
  const int d = static_cast<int>(config.degrees.size());
  if (d < 2) {
    throw std::invalid_argument("optimality_dlinear: needs dimension >= 2");
  }
  if (config.powers.size() != config.degrees.size()) {
    throw std::invalid_argument("optimality_dlinear: degrees/powers mismatch");
  }
  const CorpusEntry entry = corpus(config.function_id, d, config.seed);
  if (!entry.multilinear) {
    throw std::invalid_argument("optimality_dlinear: '" + config.function_id +
                                "' is not multilinear");
  }
  const int points =
      config.eval_resolution > 0 ? config.eval_resolution : default_eval_resolution(d);
  const int mod_res = config.moduli_resolution > 0 ? config.moduli_resolution
                                                   : default_moduli_resolution(d);
  // Grid moduli on purpose: the vanishing of the terms is then measured,
  // not read off the registry.
  const ModulusSource moduli(entry, ModuliMode::grid, mod_res);
  const TensorIterate iterate(entry.field, config.degrees, config.powers);
  const VertexTable vertices = sample_vertices(entry.field);
  std::vector<double> decay(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    decay[static_cast<std::size_t>(a)] =
        iterate_decay(config.degrees[static_cast<std::size_t>(a)],
                      config.powers[static_cast<std::size_t>(a)]);
  }

  BoundReport report;
  LatticeWalker walker(d, points);
  do {
    if (!walker.interior()) continue;
    const std::span<const double> x(walker.x);
    double worst = std::abs(iterate(x) - multilinear_eval(vertices, x));
    for (int a = 0; a < d; ++a) {
      const double xa = walker.x[static_cast<std::size_t>(a)];
      const double harg =
          std::sqrt(xa * (1.0 - xa) * decay[static_cast<std::size_t>(a)]);
      worst = std::max(worst, moduli.value(harg, a));
    }
    report.points.push_back({walker.x, worst, 0.0, -worst, 0});
  } while (walker.advance());

  report.moduli_mode = "grid_lower_bound";
  report.advisory = true;
  report.resolutions = {points, moduli.resolution()};
  report.seed = config.seed;
  report.finalize();
  return report;
}

}  // namespace overbern
