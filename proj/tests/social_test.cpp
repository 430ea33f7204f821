#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "socpref/fixture.hpp"
#include "socpref/sampling.hpp"
#include "socpref/social.hpp"

using namespace socpref;

namespace {

Profile left_vs_half() { return {MixedStrategy::pure(2, 0), MixedStrategy::uniform(2)}; }
Profile center(const Game& g) { return uniform_profile(g); }

}  // namespace

TEST_CASE("step model on the bundled example") {
  const Game game = fixture::illustrative_game();
  const SocialFunctional step = SocialFunctional::step(1.0);
  CHECK(eval_social(step, game, left_vs_half()) == -1.0);
  CHECK(eval_social(step, game, {MixedStrategy::pure(2, 1), MixedStrategy::uniform(2)}) ==
        -1.0);
  CHECK(eval_social(step, game, center(game)) == 0.0);
}

TEST_CASE("step model matches a hand-applied rule on random profiles") {
  const Game game = fixture::illustrative_game();
  const SocialFunctional step = SocialFunctional::step(2.5, 1e-9);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = random_profile(game, rng);
    CHECK(eval_social(step, game, p) == oracle::step_social(game, p, 2.5, 1e-9));
  }
}

TEST_CASE("step model is symmetric in the two payoff matrices") {
  const Game game({"a", "b"}, {"x", "y", "z"},
                  Matrix::from_rows({{3.0, -1.0, 2.0}, {0.0, 4.0, -2.0}}),
                  Matrix::from_rows({{1.0, 1.0, -3.0}, {2.0, -4.0, 5.0}}));
  const Game swapped({"a", "b"}, {"x", "y", "z"}, game.bob_payoffs(), game.alice_payoffs());
  const SocialFunctional step = SocialFunctional::step(1.0);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = random_profile(game, rng);
    CHECK(eval_social(step, game, p) == eval_social(step, swapped, p));
  }
}

TEST_CASE("linear model weighs disadvantage and advantage separately") {
  const Game game = fixture::illustrative_game();
  // Expected payoffs at (Left, half-mix) are (5, 10): disadvantage of 5.
  CHECK(eval_social(SocialFunctional::linear(0.5, 0.0), game, left_vs_half()) == -2.5);
  // The advantage weight alone ignores disadvantageous inequality.
  CHECK(eval_social(SocialFunctional::linear(0.0, 0.7), game, left_vs_half()) == 0.0);
  // At (Right, half-mix) payoffs are (15, 10): advantage of 5.
  const Profile right{MixedStrategy::pure(2, 1), MixedStrategy::uniform(2)};
  CHECK(eval_social(SocialFunctional::linear(0.0, 0.7), game, right) == -3.5);
}

TEST_CASE("linear model with equal weights is a scaled absolute gap") {
  const Game game = fixture::illustrative_game();
  const SocialFunctional linear = SocialFunctional::linear(0.3, 0.3);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Profile p = random_profile(game, rng);
    const oracle::PayoffPair m = oracle::expected_payoffs(game, p);
    CHECK(std::fabs(eval_social(linear, game, p) - (-0.3 * std::fabs(m.alice - m.bob))) <=
          1e-12);
  }
}

TEST_CASE("zero functional is identically zero") {
  const Game game = fixture::illustrative_game();
  const SocialFunctional zero = SocialFunctional::zero();
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(eval_social(zero, game, random_profile(game, rng)) == 0.0);
  }
}

TEST_CASE("equality tolerance decides near-ties deterministically") {
  const Game close({"a"}, {"x"}, Matrix::from_rows({{1.0 + 5e-10}}),
                   Matrix::from_rows({{1.0}}));
  const Game apart({"a"}, {"x"}, Matrix::from_rows({{1.1}}), Matrix::from_rows({{1.0}}));
  const SocialFunctional step = SocialFunctional::step(1.0, 1e-9);
  const Profile p{MixedStrategy::pure(1, 0), MixedStrategy::pure(1, 0)};
  CHECK(eval_social(step, close, p) == 0.0);
  CHECK(eval_social(step, apart, p) == -1.0);
}

TEST_CASE("social parameters are validated") {
  CHECK_THROWS_AS(SocialFunctional::step(-1.0), InvalidArgument);
  CHECK_THROWS_AS(SocialFunctional::step(1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(SocialFunctional::step(1.0, -1e-9), InvalidArgument);
  CHECK_THROWS_AS(SocialFunctional::linear(-0.1, 0.0), InvalidArgument);
  CHECK_THROWS_AS(SocialFunctional::linear(0.0, -0.1), InvalidArgument);
}
