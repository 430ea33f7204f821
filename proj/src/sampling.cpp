#include "socpref/sampling.hpp"

#include <cmath>

namespace socpref {

std::uint64_t SeedSequence::next() {
  // splitmix64 step; decorrelates consecutive sub-seeds.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

MixedStrategy random_simplex_point(std::size_t dim, std::mt19937_64& rng) {
  if (dim == 0) {
    throw EmptyVector("simplex dimension must be at least one");
  }
  std::vector<double> weights(dim);
  while (true) {
    double sum = 0.0;
    for (double& w : weights) {
      // Exp(1) draw; the argument stays in (0, 1], so the log is finite.
      w = -std::log(1.0 - uniform_unit(rng));
      sum += w;
    }
    if (sum > 0.0) {
      return make_mixed(weights);
    }
  }
}

Profile random_profile(const Game& game, std::mt19937_64& rng) {
  MixedStrategy row = random_simplex_point(game.num_rows(), rng);
  MixedStrategy col = random_simplex_point(game.num_cols(), rng);
  return Profile{std::move(row), std::move(col)};
}

}  // namespace socpref
