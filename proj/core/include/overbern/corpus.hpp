#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "overbern/moduli.hpp"
#include "overbern/scalar_field.hpp"

namespace overbern {

/// A named test function together with what is known about it: whether it
/// is multilinear (a fixed point of every tensor Bernstein operator) and,
/// when available, the closed form of its partial second-order moduli.
struct CorpusEntry {
  std::string id;
  std::string description;
  int dimension = 1;
  bool multilinear = false;
  ScalarField field = ScalarField::constant(1, 0.0);
  /// omega_2(f; 0,..,h,..,0) along `axis` (0-based); null when no closed
  /// form is registered (grid estimation is the fallback).
  std::function<double(double h, int axis)> analytic;
};

/// Deterministic field for a given (id, dimension, seed). Randomized
/// members (affine, multilinear, gridml) draw their coefficients from
/// SplitMix64(seed). Unknown ids raise std::out_of_range.
CorpusEntry corpus(const std::string& id, int dimension, std::uint64_t seed = 0);

/// (id, description) pairs for every registered function id.
std::vector<std::pair<std::string, std::string>> corpus_catalog();

/// Closed-form modulus of a corpus member; raises std::out_of_range when
/// the entry has no registered form.
ModulusEstimate analytic_omega2(const CorpusEntry& entry, double h, int axis);
ModulusEstimate analytic_omega2(const std::string& id, double h, int axis,
                                int dimension = 1, std::uint64_t seed = 0);

}  // namespace overbern
