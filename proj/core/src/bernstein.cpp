#include "overbern/bernstein.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace overbern {

namespace {

void check_degree(int degree) {
  if (degree < 1) {
    throw std::domain_error("bernstein: degree must be >= 1, got " +
                            std::to_string(degree));
  }
}

void check_unit(double x) {
  if (!(0.0 <= x && x <= 1.0)) {
    throw std::domain_error("bernstein: x must lie in [0,1], got " +
                            std::to_string(x));
  }
}

BernsteinMatrix identity(int degree) {
  BernsteinMatrix m;
  m.degree = degree;
  m.entries.assign(static_cast<std::size_t>(degree + 1) * (degree + 1), 0.0);
  for (int i = 0; i <= degree; ++i) m(i, i) = 1.0;
  return m;
}

BernsteinMatrix multiply(const BernsteinMatrix& a, const BernsteinMatrix& b) {
  const int n = a.size();
  BernsteinMatrix c;
  c.degree = a.degree;
  c.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

}  // namespace

std::vector<double> basis_row(int degree, double x) {
  check_degree(degree);
  check_unit(x);
  std::vector<double> row(static_cast<std::size_t>(degree) + 1, 0.0);
  row[0] = 1.0;
  const double omx = 1.0 - x;
  for (int r = 1; r <= degree; ++r) {
    row[r] = x * row[r - 1];
    for (int j = r - 1; j >= 1; --j) {
      row[j] = x * row[j - 1] + omx * row[j];
    }
    row[0] *= omx;
  }
  return row;
}

double basis(int degree, int index, double x) {
  check_degree(degree);
  if (index < 0 || index > degree) {
    throw std::domain_error("bernstein: basis index out of [0,l]");
  }
  return basis_row(degree, x)[static_cast<std::size_t>(index)];
}

BernsteinMatrix transfer_matrix(int degree) {
  check_degree(degree);
  BernsteinMatrix m;
  m.degree = degree;
  m.entries.reserve(static_cast<std::size_t>(degree + 1) * (degree + 1));
  for (int i = 0; i <= degree; ++i) {
    const std::vector<double> row =
        basis_row(degree, static_cast<double>(i) / degree);
    m.entries.insert(m.entries.end(), row.begin(), row.end());
  }
  return m;
}

double row_sum_drift(const BernsteinMatrix& m) {
  const int n = m.size();
  double drift = 0.0;
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += m(i, j);
    drift = std::max(drift, std::abs(sum - 1.0));
  }
  return drift;
}

BernsteinMatrix matrix_power(const BernsteinMatrix& m, long long exponent) {
  if (exponent < 0) {
    throw std::domain_error("matrix_power: exponent must be >= 0");
  }
  BernsteinMatrix result = identity(m.degree);
  BernsteinMatrix base = m;
  long long e = exponent;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  const double drift = row_sum_drift(result);
  if (drift > 1e-9) {
    throw std::runtime_error("matrix_power: row-sum drift " +
                             std::to_string(drift) + " exceeds 1e-9");
  }
  return result;
}

std::vector<double> apply_matrix(const BernsteinMatrix& m, const std::vector<double>& values) {
  const int n = m.size();
  if (static_cast<int>(values.size()) != n) {
    throw std::invalid_argument("apply: vector length does not match degree+1");
  }
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += m(i, j) * values[j];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

std::vector<double> sample_nodes(const ScalarField& f, int degree) {
  check_degree(degree);
  if (f.dimension() != 1) {
    throw std::invalid_argument("sample_nodes: field must be univariate");
  }
  std::vector<double> v(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int j = 0; j <= degree; ++j) {
    v[static_cast<std::size_t>(j)] = f(static_cast<double>(j) / degree);
  }
  return v;
}

double iterate_eval(int degree, long long iterations, const ScalarField& f, double x) {
  check_degree(degree);
  check_unit(x);
  if (iterations < 1) {
    throw std::domain_error("iterate_eval: iteration count must be >= 1");
  }
  if (f.dimension() != 1) {
    throw std::invalid_argument("iterate_eval: field must be univariate");
  }
  std::vector<double> v = sample_nodes(f, degree);
  if (iterations > 1) {
    v = apply_matrix(matrix_power(transfer_matrix(degree), iterations - 1), v);
  }
  const std::vector<double> row = basis_row(degree, x);
  double acc = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) acc += v[j] * row[j];
  return acc;
}

double b1_eval(const ScalarField& f, double x) {
  check_unit(x);
  if (f.dimension() != 1) {
    throw std::invalid_argument("b1_eval: field must be univariate");
  }
  return f(0.0) * (1.0 - x) + f(1.0) * x;
}

}  // namespace overbern
