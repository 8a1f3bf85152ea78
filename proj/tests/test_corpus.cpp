#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "overbern/corpus.hpp"
#include "overbern/prng.hpp"
#include "overbern/tensor_operator.hpp"

using namespace overbern;

TEST_CASE("splitmix64 reference sequence from seed 0") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  CHECK(rng.next() == 0xF88BB8A8724C81ECULL);
}

TEST_CASE("splitmix64 doubles live in [0,1)") {
  SplitMix64 rng(987654321);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("catalog lists every id exactly once") {
  const auto catalog = corpus_catalog();
  std::set<std::string> ids;
  for (const auto& [id, description] : catalog) {
    CHECK(ids.insert(id).second);
    CHECK_FALSE(description.empty());
  }
  CHECK(ids.count("e2") == 1);
  CHECK(ids.count("multilinear") == 1);
  CHECK(ids.count("gridml") == 1);
  CHECK(ids.count("runge") == 1);
}

TEST_CASE("known definitions") {
  CHECK(corpus("e2", 1).field(0.7) == doctest::Approx(0.49).epsilon(1e-14));
  CHECK(corpus("e3", 1).field(0.5) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(corpus("abs", 1).field(0.2) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(corpus("cos", 2).field(1.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(corpus("cos", 1).field(0.5) ==
        doctest::Approx(std::cos(0.25 * 3.14159265358979323846)).epsilon(1e-14));
  CHECK(corpus("runge", 1).field(0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(corpus("runge", 1).field(1.0) ==
        doctest::Approx(1.0 / (1.0 + 25.0 * 0.25)).epsilon(1e-14));
  CHECK(corpus("e2y", 2).field(0.3, 0.6) == doctest::Approx(0.36).epsilon(1e-14));
  CHECK(corpus("e2sum", 3).field({0.1, 0.2, 0.3}) ==
        doctest::Approx(0.14).epsilon(1e-14));
}

TEST_CASE("lookup and dimension errors") {
  CHECK_THROWS_AS(corpus("nope", 1), std::out_of_range);
  CHECK_THROWS_AS(corpus("e2y", 1), std::invalid_argument);
  CHECK_THROWS_AS(corpus("e2z", 2), std::invalid_argument);
  CHECK_THROWS_AS(corpus("e2", 9), std::invalid_argument);
}

TEST_CASE("same id and seed reproduce the same field") {
  for (const char* id : {"affine", "multilinear", "gridml"}) {
    const CorpusEntry a = corpus(id, 2, 7);
    const CorpusEntry b = corpus(id, 2, 7);
    const CorpusEntry other = corpus(id, 2, 8);
    bool any_different = false;
    for (double x : {0.0, 0.3, 0.62, 1.0}) {
      for (double y : {0.11, 0.5, 0.99}) {
        CHECK(a.field(x, y) == b.field(x, y));
        if (a.field(x, y) != other.field(x, y)) any_different = true;
      }
    }
    CHECK(any_different);
  }
}

TEST_CASE("multilinear corpus members are fixed points of L") {
  for (int d : {1, 2, 3}) {
    const CorpusEntry entry = corpus("multilinear", d, 7);
    CHECK(entry.multilinear);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> x(static_cast<std::size_t>(d));
      for (double& c : x) c = rng.next_double();
      CHECK(limit_eval(entry.field, std::span<const double>(x)) ==
            doctest::Approx(entry.field(std::span<const double>(x))).epsilon(1e-12));
    }
  }
}

TEST_CASE("gridml blends its lattice values multilinearly") {
  const CorpusEntry entry = corpus("gridml", 2, 3);
  CHECK_FALSE(entry.multilinear);
  // The center of any cell is the average of its four lattice corners.
  for (int cx = 0; cx < 4; ++cx) {
    for (int cy = 0; cy < 4; ++cy) {
      const double corners =
          entry.field(cx / 4.0, cy / 4.0) + entry.field((cx + 1) / 4.0, cy / 4.0) +
          entry.field(cx / 4.0, (cy + 1) / 4.0) +
          entry.field((cx + 1) / 4.0, (cy + 1) / 4.0);
      CHECK(entry.field((cx + 0.5) / 4.0, (cy + 0.5) / 4.0) ==
            doctest::Approx(corners / 4.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("analytic moduli coverage matches the registry") {
  CHECK(corpus("affine", 2, 1).analytic);
  CHECK(corpus("e2", 1).analytic);
  CHECK(corpus("e2sum", 2).analytic);
  CHECK(corpus("abs", 1).analytic);
  CHECK(corpus("multilinear", 2, 1).analytic);
  CHECK_FALSE(corpus("cos", 1).analytic);
  CHECK_FALSE(corpus("runge", 2).analytic);
  CHECK_FALSE(corpus("gridml", 2, 1).analytic);
  CHECK_FALSE(corpus("e3", 1).analytic);

  const CorpusEntry e2sum = corpus("e2sum", 3);
  for (int axis = 0; axis < 3; ++axis) {
    CHECK(analytic_omega2(e2sum, 0.1, axis).value ==
          doctest::Approx(0.02).epsilon(1e-14));
  }
  const CorpusEntry e2y = corpus("e2y", 2);
  CHECK(analytic_omega2(e2y, 0.1, 1).value == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(analytic_omega2(e2y, 0.1, 0).value == 0.0);
}
