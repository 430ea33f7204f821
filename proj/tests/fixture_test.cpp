#include <doctest.h>

#include <filesystem>

#include "socpref/fixture.hpp"
#include "socpref/json_io.hpp"

using namespace socpref;

TEST_CASE("response game folds the opponent into one expected column") {
  const Game response = fixture::illustrative_response_game();
  CHECK(response.num_rows() == 2);
  CHECK(response.num_cols() == 1);
  CHECK(response.alice_payoffs()(0, 0) == 5.0);
  CHECK(response.alice_payoffs()(1, 0) == 15.0);
  CHECK(response.bob_payoffs()(0, 0) == 10.0);
  CHECK(response.bob_payoffs()(1, 0) == 10.0);
}

TEST_CASE("bundled example passes at the default tolerance") {
  const fixture::FixtureReport report = fixture::run_illustrative_fixture();
  CHECK(report.all_passed());
  CHECK(report.first_failure() == nullptr);
  REQUIRE(report.sections.size() == 5);
  CHECK(report.sections[0].checks.size() == 6);
  for (const auto& section : report.sections) {
    CHECK_FALSE(section.checks.empty());
  }
}

TEST_CASE("bundled example is exact in binary floating point") {
  const fixture::FixtureReport report = fixture::run_illustrative_fixture(0.0);
  CHECK(report.all_passed());
  for (const auto& section : report.sections) {
    for (const auto& check : section.checks) {
      CHECK(check.expected == check.actual);
    }
  }
  CHECK_NOTHROW(fixture::assert_illustrative_fixture(0.0));
  CHECK_THROWS_AS(fixture::run_illustrative_fixture(-1.0), InvalidArgument);
}

TEST_CASE("exported fixture files replay the worked example") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "socpref_fixture_export_test";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> names = fixture::export_illustrative_fixture(dir);
  REQUIRE(names.size() == 4);
  for (const std::string& name : names) {
    CHECK(std::filesystem::exists(dir / name));
  }

  const Game response = load_game(dir / "fixture_response_game.json");
  const UtilitySpec game_utility = load_spec(dir / "fixture_game_utility.json");
  const SocialFunctional social = load_social(dir / "fixture_social.json");
  const auto [selfish, report] =
      counterbalance(game_utility, UtilitySpec::social(social), response);
  CHECK(evaluate(selfish, response, uniform_profile(response)) == 9.0);
  CHECK(report.theorem_consistent);

  const Game full = load_game(dir / "fixture_game.json");
  CHECK(full.num_rows() == 2);
  CHECK(full.num_cols() == 2);
  std::filesystem::remove_all(dir);
}
