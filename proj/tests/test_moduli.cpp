#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "overbern/corpus.hpp"
#include "overbern/moduli.hpp"
#include "overbern/scalar_field.hpp"

using namespace overbern;

namespace {
const ScalarField lin = ScalarField::univariate([](double x) { return 3.0 * x - 1.0; });
const ScalarField e2 = ScalarField::univariate([](double x) { return x * x; });
const ScalarField kink =
    ScalarField::univariate([](double x) { return std::abs(x - 0.5); });
}  // namespace

TEST_CASE("omega2 point values") {
  CHECK(omega2(lin, 0.3, 1000).value == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(omega2(e2, 0.25, 1000).value == doctest::Approx(0.125).epsilon(1e-9));
  CHECK(omega2(kink, 0.25, 1000).value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("omega2 rejects degenerate lattices") {
  // No lattice step is <= h here.
  CHECK_THROWS_AS(omega2(e2, 0.05, 10), std::invalid_argument);
  CHECK_THROWS_AS(omega2(e2, 0.0, 1000), std::domain_error);
  CHECK_THROWS_AS(omega2(e2, 1.5, 1000), std::domain_error);
}

TEST_CASE("partial_omega2") {
  const ScalarField plane =
      ScalarField::bivariate([](double x, double y) { return x + y; });
  CHECK(partial_omega2(plane, 0, 0.3, 100).value == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(partial_omega2(plane, 1, 0.3, 100).value == doctest::Approx(0.0).epsilon(1e-13));

  const ScalarField f =
      ScalarField::bivariate([](double x, double y) { return x * x * y; });
  // Second difference along x is 2 delta^2 y, peaking at y = 1, delta = h.
  CHECK(partial_omega2(f, 0, 0.2, 200).value == doctest::Approx(0.08).epsilon(1e-6));
  CHECK(partial_omega2(f, 1, 0.2, 200).value == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("analytic registry") {
  CHECK(analytic_omega2("e2", 0.1, 0).value == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(analytic_omega2("multilinear", 0.3, 1, 2, 7).value == 0.0);
  CHECK(analytic_omega2("abs", 0.3, 0).value == doctest::Approx(0.6).epsilon(1e-14));
  CHECK_THROWS_AS(analytic_omega2("cos", 0.2, 0), std::out_of_range);

  SUBCASE("abs closed form against a fine grid scan") {
    const ModulusEstimate grid = omega2(kink, 0.3, 5000);
    CHECK(grid.value == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(grid.kind == ModulusKind::grid_lower_bound);
  }

  SUBCASE("steps above 1/2 admit no base point") {
    CHECK(analytic_omega2("e2", 0.8, 0).value ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(omega2(e2, 0.8, 1000).value == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("monotone in h on a fixed lattice") {
  double prev = 0.0;
  for (double h : {0.05, 0.1, 0.2, 0.4, 0.8, 1.0}) {
    const double v = omega2(e2, h, 400).value;
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
}

TEST_CASE("grid values lower-bound the analytic modulus") {
  for (int n : {100, 1000, 5000}) {
    for (double h : {0.1, 0.25, 0.5}) {
      const double grid = omega2(e2, h, n).value;
      const double exact = analytic_omega2("e2", h, 0).value;
      CHECK(grid <= exact + 1e-12);
      // The sup of e2's second difference is attained on these lattices.
      CHECK(exact - grid <= 1e-9);
    }
  }
}

TEST_CASE("nondecreasing along lattice refinement") {
  const ScalarField bump = ScalarField::univariate(
      [](double x) { return std::sin(7.0 * x) + std::abs(x - 0.37); });
  double prev = 0.0;
  for (int n : {100, 200, 1000, 2000}) {
    const double v = omega2(bump, 0.22, n).value;
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
}

TEST_CASE("scaling is exact on a fixed grid") {
  const ScalarField f = ScalarField::univariate(
      [](double x) { return std::cos(5.0 * x) * x + 0.2 * x * x; });
  const ScalarField g = ScalarField::univariate(
      [](double x) { return -3.5 * (std::cos(5.0 * x) * x + 0.2 * x * x); });
  for (double h : {0.1, 0.37}) {
    CHECK(omega2(g, h, 500).value ==
          doctest::Approx(3.5 * omega2(f, h, 500).value).epsilon(1e-13));
  }
}

TEST_CASE("partial moduli vanish on multilinear fields") {
  for (int d : {2, 3, 4}) {
    const CorpusEntry entry = corpus("multilinear", d, 99);
    const int n = d == 2 ? 60 : (d == 3 ? 24 : 10);
    for (int axis = 0; axis < d; ++axis) {
      for (double h : {0.1, 0.3, 0.5, 1.0}) {
        CHECK(partial_omega2(entry.field, axis, h, n).value <= 1e-12);
      }
    }
  }
}

TEST_CASE("four-dimensional partial scan still sees the quadratic axis") {
  const CorpusEntry entry = corpus("e2", 4, 0);
  CHECK(partial_omega2(entry.field, 0, 0.5, 10).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(partial_omega2(entry.field, 3, 0.5, 10).value <= 1e-13);
}

TEST_CASE("prefix-max table agrees with one-shot scans") {
  const ScalarField f = ScalarField::univariate(
      [](double x) { return std::exp(x) * std::sin(4.0 * x); });
  const PartialOmega2Table table(f, 0, 500);
  for (double h : {0.05, 0.13, 0.5, 0.99}) {
    CHECK(table.query(h).value ==
          doctest::Approx(omega2(f, h, 500).value).epsilon(1e-14));
  }
  CHECK(table.query(1e-4).value == 0.0);  // below one lattice step
}
