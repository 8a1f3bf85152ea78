#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "overbern/experiments.hpp"
#include "overbern/moduli.hpp"
#include "overbern/report_io.hpp"
#include "overbern/tensor_operator.hpp"

using namespace overbern;

TEST_CASE("bound_univariate on e2 passes with ratio 2/9 at interior points") {
  ExperimentConfig c;
  c.experiment = Experiment::bound_univariate;
  c.function_id = "e2";
  c.degrees = {5};
  c.powers = {10};
  const BoundReport r = run_bound_univariate(c);
  CHECK(r.pass);
  CHECK_FALSE(r.advisory);
  CHECK(r.moduli_mode == "analytic");
  for (const PointRecord& p : r.points) {
    const double x = p.point[0];
    if (x == 0.0 || x == 1.0) {
      CHECK(p.lhs <= 1e-12);
      CHECK(p.rhs == 0.0);
      CHECK(std::abs(p.margin) <= 1e-12);
    } else {
      CHECK(std::abs(p.lhs / p.rhs - 2.0 / 9.0) <= 1e-9);
    }
  }
}

TEST_CASE("bound_univariate on an affine field is identically zero") {
  ExperimentConfig c;
  c.function_id = "affine";
  c.seed = 11;
  c.degrees = {4};
  c.powers = {25};
  const BoundReport r = run_bound_univariate(c);
  CHECK(r.pass);
  CHECK(r.max_lhs <= 1e-10);
  for (const PointRecord& p : r.points) CHECK(p.rhs == 0.0);
}

TEST_CASE("bound_univariate in grid mode is advisory and still passes for e2") {
  ExperimentConfig c;
  c.function_id = "e2";
  c.degrees = {5};
  c.powers = {10};
  c.moduli_mode = ModuliMode::grid;
  const BoundReport r = run_bound_univariate(c);
  CHECK(r.pass);
  CHECK(r.advisory);
  CHECK(r.moduli_mode == "grid_lower_bound");
  CHECK(r.resolutions.size() == 2);
}

TEST_CASE("bound_tensor") {
  SUBCASE("multilinear fields give 0 <= 0 everywhere") {
    ExperimentConfig c;
    c.experiment = Experiment::bound_tensor;
    c.function_id = "multilinear";
    c.seed = 3;
    c.degrees = {3, 4};
    c.powers = {5, 2};
    const BoundReport r = run_bound_tensor(c);
    CHECK(r.pass);
    CHECK(r.max_lhs <= 1e-12);
    for (const PointRecord& p : r.points) CHECK(p.rhs == 0.0);
  }
  SUBCASE("x1^2 reduces to the univariate ratio 2/9") {
    ExperimentConfig c;
    c.experiment = Experiment::bound_tensor;
    c.function_id = "e2";
    c.degrees = {5, 3};
    c.powers = {10, 4};
    const BoundReport r = run_bound_tensor(c);
    CHECK(r.pass);
    CHECK_FALSE(r.advisory);
    for (const PointRecord& p : r.points) {
      const double x = p.point[0];
      if (x > 0.0 && x < 1.0) {
        CHECK(std::abs(p.lhs / p.rhs - 2.0 / 9.0) <= 1e-9);
      }
    }
  }
  SUBCASE("cosine product runs advisory in grid mode and passes") {
    ExperimentConfig c;
    c.experiment = Experiment::bound_tensor;
    c.function_id = "cos";
    c.degrees = {4, 4};
    // Powers small enough that every interior modulus argument clears one
    // lattice step of the N=200 moduli grid (h >= 0.049 here).
    c.powers = {8, 8};
    c.moduli_mode = ModuliMode::grid;
    const BoundReport r = run_bound_tensor(c);
    CHECK(r.pass);
    CHECK(r.advisory);
  }
  SUBCASE("dimension guard") {
    ExperimentConfig c;
    c.experiment = Experiment::bound_tensor;
    c.degrees = {5};
    c.powers = {10};
    CHECK_THROWS_AS(run_bound_tensor(c), std::invalid_argument);
  }
}

TEST_CASE("contraction") {
  SUBCASE("degree (1,1) is the identity on bilinear data") {
    ExperimentConfig c;
    c.experiment = Experiment::contraction;
    c.degrees = {1, 1};
    c.trials = 20;
    const BoundReport r = run_contraction(c);
    CHECK(r.pass);
    CHECK(r.max_lhs <= 1e-15);
    CHECK(r.worst_ratio.has_value());
    CHECK(*r.worst_ratio == 0.0);
  }
  SUBCASE("degrees (2,2) stay below the 0.75 constant") {
    ExperimentConfig c;
    c.experiment = Experiment::contraction;
    c.degrees = {2, 2};
    c.trials = 100;
    c.seed = 17;
    const BoundReport r = run_contraction(c);
    CHECK(r.pass);
    CHECK(*r.worst_ratio <= 0.75 + 1e-12);
    CHECK(*r.worst_ratio > 0.0);
  }
}

TEST_CASE("converge_to_L") {
  SUBCASE("y-independent e2 field decays at rate 0.8 on degrees (5,3)") {
    ExperimentConfig c;
    c.experiment = Experiment::converge_to_L;
    c.function_id = "e2";
    c.degrees = {5, 3};
    const ConvergenceReport r = run_converge_to_L(c);
    CHECK(r.pass);
    CHECK_FALSE(r.trivially_converged);
    CHECK(r.expected_rate == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::abs(r.fitted_rate - 0.8) <= 0.04);
  }
  SUBCASE("multilinear fields are already converged") {
    ExperimentConfig c;
    c.experiment = Experiment::converge_to_L;
    c.function_id = "multilinear";
    c.seed = 21;
    c.degrees = {3, 2};
    const ConvergenceReport r = run_converge_to_L(c);
    CHECK(r.pass);
    CHECK(r.trivially_converged);
    CHECK(r.max_lhs <= 1e-13);
  }
  SUBCASE("degree 2 halves the error at every step") {
    ExperimentConfig c;
    c.experiment = Experiment::converge_to_L;
    c.function_id = "e2";
    c.degrees = {2};
    const ConvergenceReport r = run_converge_to_L(c);
    CHECK(r.pass);
    CHECK(r.fitted_rate == doctest::Approx(0.5).epsilon(1e-6));
    for (std::size_t i = 1; i < r.points.size(); ++i) {
      const double prev = r.points[i - 1].lhs;
      const double cur = r.points[i].lhs;
      if (prev > 1e-12) {
        CHECK(cur / prev == doctest::Approx(0.5).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("zhuk_lemma1 runner") {
  SUBCASE("certified for e2") {
    ExperimentConfig c;
    c.experiment = Experiment::zhuk_lemma1;
    c.function_id = "e2";
    c.h = 0.25;
    c.eval_resolution = 201;
    const BoundReport r = run_zhuk_lemma1(c);
    CHECK(r.pass);
    CHECK_FALSE(r.advisory);
  }
  SUBCASE("advisory fallback for cos") {
    ExperimentConfig c;
    c.experiment = Experiment::zhuk_lemma1;
    c.function_id = "cos";
    c.h = 0.25;
    c.eval_resolution = 201;
    const BoundReport r = run_zhuk_lemma1(c);
    CHECK(r.pass);
    CHECK(r.advisory);
    CHECK(r.moduli_mode == "grid_lower_bound");
  }
}

TEST_CASE("optimality_dlinear") {
  SUBCASE("seeded multilinear at d = 3") {
    ExperimentConfig c;
    c.experiment = Experiment::optimality_dlinear;
    c.function_id = "multilinear";
    c.seed = 5;
    c.degrees = {2, 3, 4};
    c.powers = {3, 3, 3};
    c.moduli_resolution = 40;
    const BoundReport r = run_optimality_dlinear(c);
    CHECK(r.pass);
    CHECK(r.max_lhs <= 1e-12);
  }
  SUBCASE("xy at d = 2") {
    ExperimentConfig c;
    c.experiment = Experiment::optimality_dlinear;
    c.function_id = "multilinear";
    c.seed = 1;
    c.degrees = {2, 2};
    c.powers = {2, 2};
    const BoundReport r = run_optimality_dlinear(c);
    CHECK(r.pass);
  }
  SUBCASE("non-multilinear fields are rejected") {
    ExperimentConfig c;
    c.experiment = Experiment::optimality_dlinear;
    c.function_id = "e2";
    c.degrees = {2, 2};
    c.powers = {2, 2};
    CHECK_THROWS_AS(run_optimality_dlinear(c), std::invalid_argument);
  }
  SUBCASE("contrapositive: a non-multilinear field has a positive term") {
    // x1^2 x2 has a strictly positive partial modulus along axis 1 at any
    // interior-point step, which is what forces it out of the zero case.
    const ScalarField f =
        ScalarField::bivariate([](double x, double y) { return x * x * y; });
    CHECK(partial_omega2(f, 0, 0.2, 100).value > 1e-3);
  }
}

TEST_CASE("reports are deterministic for identical config and seed") {
  ExperimentConfig c;
  c.experiment = Experiment::contraction;
  c.degrees = {2, 2};
  c.trials = 50;
  c.seed = 12345;
  const std::string a = report_json(c, run_contraction(c), false);
  const std::string b = report_json(c, run_contraction(c), false);
  CHECK(a == b);
}
