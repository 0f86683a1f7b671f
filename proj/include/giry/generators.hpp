#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "giry/inference.hpp"

namespace giry {

/// Deterministic draw source for the law runner and the test suites.  Every
/// draw goes through pick(), which reduces raw mt19937_64 output by modulo;
/// the engine's output is specified bit for bit, so a seed fixes the whole
/// stream across platforms and runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-enough draw from {0, ..., bound-1}; bound must be positive.
  /// The modulo bias is irrelevant for test-case generation.
  Index pick(Index bound);

 private:
  std::mt19937_64 engine_;
};

/// A space named `label` with 1..max_points points labeled label1, label2, ...
/// (label lowercased).
Space random_space(Rng& rng, const std::string& label, Index max_points);

/// Balls-in-boxes: picks a denominator d in 1..max_denominator and drops d
/// unit weights on random points.  Zero weights (partial support) arise
/// naturally, which the null-set paths need.
Dist random_dist(Rng& rng, const Space& space, Index max_denominator);

/// Like random_dist but supported inside the given event, so mu << nu pairs
/// can be built directly.  The event must be non-empty.
Dist random_dist_within(Rng& rng, const Event& carrier, Index max_denominator);

Map random_map(Rng& rng, const Space& source, const Space& target);

Kernel random_kernel(Rng& rng, const Space& source, const Space& target, Index max_denominator);

/// A full random model: spaces X and Y, prior on X, likelihood X -> G(Y).
BayesModel random_model(Rng& rng, Index max_points, Index max_denominator);

/// Every distribution on the space whose weights can be written over a common
/// denominator d <= max_denominator, deduplicated across d and returned in a
/// fixed deterministic order.
std::vector<Dist> enumerate_dists(const Space& space, Index max_denominator);

}  // namespace giry
