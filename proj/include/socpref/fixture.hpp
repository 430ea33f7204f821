#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "socpref/analysis.hpp"
#include "socpref/game.hpp"
#include "socpref/social.hpp"
#include "socpref/utility.hpp"

namespace socpref {
namespace fixture {

/// The bundled illustrative example: a 2x2 game in monetary payoffs where
/// every pure profile splits the money unequally, yet the half-half mix
/// equalizes the expected payoffs at (10, 10).
Game illustrative_game();

/// The row player's choices against the opponent fixed at the half-half mix,
/// folded into a 2x1 game whose payoffs are the expected payoffs of the full
/// game. The worked example's utility values live on this game.
Game illustrative_response_game();

/// Game utility on the response game: an expected-utility table with 4 utils
/// for the top row and 14 for the bottom row.
UtilitySpec illustrative_game_utility();

/// Step inequality aversion with penalty 1.
SocialFunctional illustrative_social();

struct FixtureCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  bool passed = false;
};

struct FixtureSection {
  std::string title;
  std::vector<FixtureCheck> checks;
};

struct FixtureReport {
  std::vector<FixtureSection> sections;
  double assert_tolerance = 0.0;

  bool all_passed() const;
  const FixtureCheck* first_failure() const;
};

/// Recomputes the worked example end to end and compares every quantity at
/// the given absolute tolerance. All values are dyadic rationals, so the run
/// passes even at tolerance zero.
FixtureReport run_illustrative_fixture(double assert_tolerance = 1e-12);

/// Throwing flavor: raises FixtureAssertionFailed naming the first failed
/// quantity.
void assert_illustrative_fixture(double assert_tolerance = 1e-12);

/// Writes the example as JSON files (game, response game, game utility,
/// social functional) into the directory, creating it if needed. Returns the
/// file names written.
std::vector<std::string> export_illustrative_fixture(const std::filesystem::path& directory);

}  // namespace fixture
}  // namespace socpref
