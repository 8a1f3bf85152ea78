#pragma once

#include <cstddef>
#include <vector>

#include "overbern/scalar_field.hpp"

namespace overbern {

/// Row-stochastic node-transfer matrix of the degree-l Bernstein operator:
/// entry (i, j) = p_{l,j}(i/l), so M * v gives the operator's output at the
/// nodes i/l from input node values v[j] = f(j/l). Powers of M realize
/// overiteration on node values.
struct BernsteinMatrix {
  int degree = 0;
  std::vector<double> entries;  // (degree+1)^2, row-major

  int size() const { return degree + 1; }

  double operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * (degree + 1) + j];
  }
  double& operator()(int i, int j) {
    return entries[static_cast<std::size_t>(i) * (degree + 1) + j];
  }
};

/// p_{l,k}(x) = C(l,k) x^k (1-x)^(l-k), with the 0^0 = 1 convention so the
/// endpoints are exact. Evaluated by the de Casteljau-style recurrence over
/// the degree at fixed x; no binomial coefficients are formed, so large l
/// neither overflows nor loses the partition of unity.
double basis(int degree, int index, double x);

/// All of p_{l,0}(x) .. p_{l,l}(x) in one O(l^2) sweep.
std::vector<double> basis_row(int degree, double x);

BernsteinMatrix transfer_matrix(int degree);

/// Max over rows of |row sum - 1|.
double row_sum_drift(const BernsteinMatrix& m);

/// M^k by binary exponentiation; k = 0 gives the identity. Row sums are
/// monitored, never renormalized: if the drift of the result exceeds 1e-9
/// the call fails instead of silently degrading.
BernsteinMatrix matrix_power(const BernsteinMatrix& m, long long exponent);

std::vector<double> apply_matrix(const BernsteinMatrix& m, const std::vector<double>& values);

/// values[j] = f(j/l) for a univariate field.
std::vector<double> sample_nodes(const ScalarField& f, int degree);

/// B_l^k(f; x): node samples are pushed through M^(k-1), then contracted
/// with the basis row at x. k = 1 is the plain operator.
double iterate_eval(int degree, long long iterations, const ScalarField& f, double x);

/// B_1(f; x) = f(0)(1-x) + f(1)x, the line interpolating f at 0 and 1.
double b1_eval(const ScalarField& f, double x);

}  // namespace overbern
