#pragma once

#include <cstdint>
#include <random>

#include "socpref/game.hpp"

namespace socpref {

/// Derives independent sub-seeds from a master seed. Used to give each trial
/// of a randomized suite its own reproducible stream.
class SeedSequence {
 public:
  explicit SeedSequence(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Uniform double in [0, 1) built from the top 53 bits of the engine output.
/// mt19937_64 output is pinned by the standard, so the stream is identical
/// across platforms, unlike std::uniform_real_distribution.
double uniform_unit(std::mt19937_64& rng);

/// Uniform double in [lo, hi).
double uniform_in(std::mt19937_64& rng, double lo, double hi);

/// Uniformly distributed point on the probability simplex of the given
/// dimension (flat Dirichlet), via normalized exponential draws.
MixedStrategy random_simplex_point(std::size_t dim, std::mt19937_64& rng);

/// Random profile for a game; row strategy drawn before column strategy.
Profile random_profile(const Game& game, std::mt19937_64& rng);

}  // namespace socpref
