#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>

namespace overbern {

/// A total real-valued function on [0,1]^d with a known dimension d.
/// Immutable after construction; copies share the underlying callable
/// and are safe to use from multiple threads.
class ScalarField {
 public:
  using Fn = std::function<double(std::span<const double>)>;

  ScalarField(int dimension, Fn eval)
      : dimension_(dimension), eval_(std::move(eval)) {
    if (dimension_ < 1) {
      throw std::domain_error("ScalarField: dimension must be >= 1");
    }
    if (!eval_) {
      throw std::invalid_argument("ScalarField: null evaluator");
    }
  }

  int dimension() const { return dimension_; }

  double operator()(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_) {
      throw std::invalid_argument("ScalarField: point/dimension mismatch");
    }
    return eval_(x);
  }

  double operator()(std::initializer_list<double> x) const {
    return (*this)(std::span<const double>(x.begin(), x.size()));
  }

  double operator()(double x) const {
    return (*this)(std::span<const double>(&x, 1));
  }

  double operator()(double x, double y) const {
    const double p[2] = {x, y};
    return (*this)(std::span<const double>(p, 2));
  }

  static ScalarField univariate(std::function<double(double)> f) {
    return ScalarField(1, [f = std::move(f)](std::span<const double> x) {
      return f(x[0]);
    });
  }

  static ScalarField bivariate(std::function<double(double, double)> f) {
    return ScalarField(2, [f = std::move(f)](std::span<const double> x) {
      return f(x[0], x[1]);
    });
  }

  static ScalarField constant(int dimension, double c) {
    return ScalarField(dimension, [c](std::span<const double>) { return c; });
  }

 private:
  int dimension_;
  Fn eval_;
};

}  // namespace overbern
