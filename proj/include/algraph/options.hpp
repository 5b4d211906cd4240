#pragma once

#include "algraph/field.hpp"
#include "algraph/polymatrix.hpp"

namespace algraph {

/// Knobs shared by every randomized algorithm.
struct Options {
  /// Root seed; each operation derives its own stream from (seed, tag).
  u64 seed = 1;
  u64 prime = PrimeField::kMersenne61;
  /// How many fresh substitutions to try before giving up on a step that
  /// can only fail through an unlucky random evaluation.
  int max_attempts = 6;
  GradientBackend backend = GradientBackend::Adjugate;
};

}  // namespace algraph
