#include "overbern/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "overbern/prng.hpp"
#include "overbern/tensor_operator.hpp"

namespace overbern {

namespace {

void check_dimension(const std::string& id, int d, int minimum = 1) {
  if (d < minimum || d > kMaxDimension) {
    throw std::invalid_argument("corpus: '" + id + "' needs dimension in [" +
                                std::to_string(minimum) + "," +
                                std::to_string(kMaxDimension) + "], got " +
                                std::to_string(d));
  }
}

/// omega_2(x^2; h) on [0,1]: the second difference is 2 delta^2 and steps
/// above 1/2 admit no base point, so the sup is 2 min(h, 1/2)^2.
double quadratic_omega2(double h) {
  const double t = std::min(h, 0.5);
  return 2.0 * t * t;
}

/// omega_2(|x - 1/2|; h): peak 2 delta at the kink, delta capped at 1/2.
double kink_omega2(double h) { return 2.0 * std::min(h, 0.5); }

CorpusEntry monomial_axis(const std::string& id, int d, int axis, int power) {
  check_dimension(id, d, axis + 1);
  CorpusEntry e;
  e.id = id;
  e.dimension = d;
  e.multilinear = power <= 1;
  e.field = ScalarField(d, [axis, power](std::span<const double> x) {
    double v = 1.0;
    for (int p = 0; p < power; ++p) v *= x[static_cast<std::size_t>(axis)];
    return v;
  });
  if (power <= 1) {
    e.analytic = [](double, int) { return 0.0; };
  } else if (power == 2) {
    e.analytic = [axis](double h, int ax) {
      return ax == axis ? quadratic_omega2(h) : 0.0;
    };
  }
  // power >= 3 keeps no closed form; grid estimation applies.
  return e;
}

ScalarField gridml_field(int d, std::uint64_t seed) {
  constexpr int kCells = 4;  // 5 lattice points per axis
  const std::size_t points = 5;
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) total *= points;
  auto data = std::make_shared<std::vector<double>>(total);
  SplitMix64 rng(seed);
  for (double& v : *data) v = rng.next_symmetric();

  return ScalarField(d, [d, data](std::span<const double> x) {
    // Locate the cell, then blend its 2^d corners multilinearly.
    std::size_t base = 0;
    double local[kMaxDimension];
    std::size_t stride[kMaxDimension];
    std::size_t s = 1;
    for (int a = d - 1; a >= 0; --a) {
      stride[a] = s;
      s *= 5;
    }
    for (int a = 0; a < d; ++a) {
      double scaled = x[static_cast<std::size_t>(a)] * kCells;
      int cell = static_cast<int>(std::floor(scaled));
      cell = std::clamp(cell, 0, kCells - 1);
      local[a] = scaled - cell;
      base += static_cast<std::size_t>(cell) * stride[a];
    }
    double acc = 0.0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      double w = 1.0;
      std::size_t off = base;
      for (int a = 0; a < d; ++a) {
        if ((mask >> a) & 1u) {
          w *= local[a];
          off += stride[a];
        } else {
          w *= 1.0 - local[a];
        }
      }
      acc += w * (*data)[off];
    }
    return acc;
  });
}

}  // namespace

CorpusEntry corpus(const std::string& id, int dimension, std::uint64_t seed) {
  if (id == "affine") {
    check_dimension(id, dimension);
    SplitMix64 rng(seed);
    auto coeff = std::make_shared<std::vector<double>>();
    coeff->push_back(rng.next_in(-2.0, 2.0));
    for (int a = 0; a < dimension; ++a) coeff->push_back(rng.next_in(-2.0, 2.0));
    CorpusEntry e;
    e.id = id;
    e.description = "seeded affine c0 + sum_d c_d x_d";
    e.dimension = dimension;
    e.multilinear = true;
    e.field = ScalarField(dimension, [coeff](std::span<const double> x) {
      double v = (*coeff)[0];
      for (std::size_t a = 0; a < x.size(); ++a) v += (*coeff)[a + 1] * x[a];
      return v;
    });
    e.analytic = [](double, int) { return 0.0; };
    return e;
  }
  if (id == "e1" || id == "e2" || id == "e3") {
    const int power = id[1] - '0';
    CorpusEntry e = monomial_axis(id, dimension, 0, power);
    e.description = "x1^" + std::to_string(power);
    return e;
  }
  if (id == "e2x" || id == "e2y" || id == "e2z") {
    const int axis = id[2] - 'x';
    CorpusEntry e = monomial_axis(id, dimension, axis, 2);
    e.description = "x" + std::to_string(axis + 1) + "^2";
    return e;
  }
  if (id == "e2sum") {
    check_dimension(id, dimension);
    CorpusEntry e;
    e.id = id;
    e.description = "sum_d x_d^2";
    e.dimension = dimension;
    e.field = ScalarField(dimension, [](std::span<const double> x) {
      double v = 0.0;
      for (double t : x) v += t * t;
      return v;
    });
    e.analytic = [](double h, int) { return quadratic_omega2(h); };
    return e;
  }
  if (id == "abs") {
    check_dimension(id, dimension);
    CorpusEntry e;
    e.id = id;
    e.description = "|x1 - 1/2|";
    e.dimension = dimension;
    e.field = ScalarField(dimension, [](std::span<const double> x) {
      return std::abs(x[0] - 0.5);
    });
    e.analytic = [](double h, int axis) {
      return axis == 0 ? kink_omega2(h) : 0.0;
    };
    return e;
  }
  if (id == "cos") {
    check_dimension(id, dimension);
    CorpusEntry e;
    e.id = id;
    e.description = "prod_d cos(pi x_d / 2)";
    e.dimension = dimension;
    // Quarter wave: no symmetry about 1/2, so the field keeps a component
    // on the slowest-decaying eigenfunction of every Bernstein matrix (the
    // full wave cos(pi x) is antisymmetric and loses it).
    e.field = ScalarField(dimension, [](std::span<const double> x) {
      double v = 1.0;
      for (double t : x) v *= std::cos(0.5 * std::numbers::pi * t);
      return v;
    });
    return e;
  }
  if (id == "runge") {
    check_dimension(id, dimension);
    CorpusEntry e;
    e.id = id;
    e.description = "1 / (1 + 25 |x - 1/2|^2)";
    e.dimension = dimension;
    e.field = ScalarField(dimension, [](std::span<const double> x) {
      double r2 = 0.0;
      for (double t : x) r2 += (t - 0.5) * (t - 0.5);
      return 1.0 / (1.0 + 25.0 * r2);
    });
    return e;
  }
  if (id == "multilinear") {
    check_dimension(id, dimension);
    VertexTable table;
    table.dimension = dimension;
    table.values.resize(std::size_t{1} << dimension);
    SplitMix64 rng(seed);
    for (double& v : table.values) v = rng.next_symmetric();
    CorpusEntry e;
    e.id = id;
    e.description = "multilinear interpolant of seeded corner values";
    e.dimension = dimension;
    e.multilinear = true;
    e.field = ScalarField(dimension, [table](std::span<const double> x) {
      return multilinear_eval(table, x);
    });
    e.analytic = [](double, int) { return 0.0; };
    return e;
  }
  if (id == "gridml") {
    check_dimension(id, dimension);
    CorpusEntry e;
    e.id = id;
    e.description = "piecewise multilinear, seeded values on a 5^d lattice";
    e.dimension = dimension;
    e.field = gridml_field(dimension, seed);
    return e;
  }
  throw std::out_of_range("corpus: unknown function id '" + id + "'");
}

std::vector<std::pair<std::string, std::string>> corpus_catalog() {
  const char* ids[] = {"affine", "e1",  "e2",    "e3",    "e2x",        "e2y",
                       "e2z",    "e2sum", "abs", "cos",   "runge",
                       "multilinear", "gridml"};
  std::vector<std::pair<std::string, std::string>> out;
  for (const char* id : ids) {
    // Build each entry at its smallest legal dimension for the description.
    const int d = (std::string(id) == "e2y") ? 2 : (std::string(id) == "e2z") ? 3 : 1;
    out.emplace_back(id, corpus(id, d, 0).description);
  }
  return out;
}

ModulusEstimate analytic_omega2(const CorpusEntry& entry, double h, int axis) {
  if (axis < 0 || axis >= entry.dimension) {
    throw std::domain_error("analytic_omega2: axis out of range");
  }
  if (!(h >= 0.0 && h <= 1.0)) {
    throw std::domain_error("analytic_omega2: h must lie in [0,1]");
  }
  if (!entry.analytic) {
    throw std::out_of_range("analytic_omega2: no closed form registered for '" +
                            entry.id + "'");
  }
  return ModulusEstimate{h, axis, entry.analytic(h, axis), 0,
                         ModulusKind::analytic};
}

ModulusEstimate analytic_omega2(const std::string& id, double h, int axis,
                                int dimension, std::uint64_t seed) {
  return analytic_omega2(corpus(id, dimension, seed), h, axis);
}

}  // namespace overbern
