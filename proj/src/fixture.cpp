#include "socpref/fixture.hpp"

#include <cmath>

#include "socpref/json_io.hpp"

namespace socpref {
namespace fixture {

Game illustrative_game() {
  return Game({"Left", "Right"}, {"Left", "Right"},
              Matrix::from_rows({{0.0, 10.0}, {30.0, 0.0}}),
              Matrix::from_rows({{20.0, 0.0}, {0.0, 20.0}}));
}

Game illustrative_response_game() {
  const Game full = illustrative_game();
  const MixedStrategy half_half = MixedStrategy::uniform(full.num_cols());
  Matrix m1(full.num_rows(), 1);
  Matrix m2(full.num_rows(), 1);
  for (std::size_t i = 0; i < full.num_rows(); ++i) {
    const ExpectedPayoffs payoffs = expected_material_payoff(
        full, Profile{MixedStrategy::pure(full.num_rows(), i), half_half});
    m1(i, 0) = payoffs.alice;
    m2(i, 0) = payoffs.bob;
  }
  return Game(full.row_labels(), {"HalfMix"}, std::move(m1), std::move(m2));
}

UtilitySpec illustrative_game_utility() {
  return UtilitySpec::eu_table(Matrix::from_rows({{4.0}, {14.0}}));
}

SocialFunctional illustrative_social() { return SocialFunctional::step(1.0); }

bool FixtureReport::all_passed() const {
  for (const auto& section : sections) {
    for (const auto& check : section.checks) {
      if (!check.passed) {
        return false;
      }
    }
  }
  return true;
}

const FixtureCheck* FixtureReport::first_failure() const {
  for (const auto& section : sections) {
    for (const auto& check : section.checks) {
      if (!check.passed) {
        return &check;
      }
    }
  }
  return nullptr;
}

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(double tolerance) { report_.assert_tolerance = tolerance; }

  void section(std::string title) {
    report_.sections.push_back(FixtureSection{std::move(title), {}});
  }

  void check(std::string name, double expected, double actual) {
    const bool passed = std::fabs(expected - actual) <= report_.assert_tolerance;
    report_.sections.back().checks.push_back(
        FixtureCheck{std::move(name), expected, actual, passed});
  }

  FixtureReport take() { return std::move(report_); }

 private:
  FixtureReport report_;
};

}  // namespace

FixtureReport run_illustrative_fixture(double assert_tolerance) {
  if (assert_tolerance < 0.0 || std::isnan(assert_tolerance)) {
    throw InvalidArgument("assert tolerance must be non-negative");
  }
  ReportBuilder builder(assert_tolerance);

  const Game game = illustrative_game();
  const MixedStrategy half_row = MixedStrategy::uniform(game.num_rows());
  const MixedStrategy half_col = MixedStrategy::uniform(game.num_cols());
  const Profile top_vs_mix{MixedStrategy::pure(2, 0), half_col};
  const Profile bottom_vs_mix{MixedStrategy::pure(2, 1), half_col};
  const Profile mix_vs_mix{half_row, half_col};

  builder.section("expected material payoffs");
  {
    const ExpectedPayoffs top = expected_material_payoff(game, top_vs_mix);
    const ExpectedPayoffs bottom = expected_material_payoff(game, bottom_vs_mix);
    const ExpectedPayoffs center = expected_material_payoff(game, mix_vs_mix);
    builder.check("E[m1](Left, half-mix)", 5.0, top.alice);
    builder.check("E[m2](Left, half-mix)", 10.0, top.bob);
    builder.check("E[m1](Right, half-mix)", 15.0, bottom.alice);
    builder.check("E[m2](Right, half-mix)", 10.0, bottom.bob);
    builder.check("E[m1](half-mix, half-mix)", 10.0, center.alice);
    builder.check("E[m2](half-mix, half-mix)", 10.0, center.bob);
  }

  const SocialFunctional social = illustrative_social();
  builder.section("step inequality aversion");
  builder.check("s(Left, half-mix)", -1.0, eval_social(social, game, top_vs_mix));
  builder.check("s(Right, half-mix)", -1.0, eval_social(social, game, bottom_vs_mix));
  builder.check("s(half-mix, half-mix)", 0.0, eval_social(social, game, mix_vs_mix));

  // The remaining arithmetic lives on the response game, where the opponent
  // side is folded into the single half-half column.
  const Game response = illustrative_response_game();
  const UtilitySpec game_utility = illustrative_game_utility();
  const Profile left{MixedStrategy::pure(2, 0), MixedStrategy::pure(1, 0)};
  const Profile right{MixedStrategy::pure(2, 1), MixedStrategy::pure(1, 0)};
  const Profile center = uniform_profile(response);

  builder.section("game utility as expected utility");
  builder.check("u_g(Left)", 4.0, evaluate(game_utility, response, left));
  builder.check("u_g(Right)", 14.0, evaluate(game_utility, response, right));
  builder.check("u_g(half-mix)", 9.0, evaluate(game_utility, response, center));

  builder.section("counterbalanced selfish utility");
  auto [selfish, report] =
      counterbalance(game_utility, UtilitySpec::social(social), response);
  builder.check("u_d(Left)", 5.0, evaluate(selfish, response, left));
  builder.check("u_d(Right)", 15.0, evaluate(selfish, response, right));
  builder.check("u_d(half-mix)", 9.0, evaluate(selfish, response, center));

  builder.section("conflict with expected utility");
  const UtilityTable forced = restrict_to_pure(selfish, response);
  builder.check("EU-forced u_d(half-mix)", 10.0, multilinear_extension(forced, center));
  builder.check("selfish EU deviation", 1.0, report.selfish_verdict.max_deviation);
  builder.check("social bilinearity deviation", 1.0, report.social_verdict.max_deviation);

  return builder.take();
}

void assert_illustrative_fixture(double assert_tolerance) {
  const FixtureReport report = run_illustrative_fixture(assert_tolerance);
  if (const FixtureCheck* failure = report.first_failure()) {
    throw FixtureAssertionFailed(failure->name + ": expected " +
                                 std::to_string(failure->expected) + ", got " +
                                 std::to_string(failure->actual));
  }
}

std::vector<std::string> export_illustrative_fixture(const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  const std::vector<std::pair<std::string, nlohmann::json>> files = {
      {"fixture_game.json", game_to_json(illustrative_game())},
      {"fixture_response_game.json", game_to_json(illustrative_response_game())},
      {"fixture_game_utility.json", spec_to_json(illustrative_game_utility())},
      {"fixture_social.json", social_to_json(illustrative_social())},
  };
  std::vector<std::string> names;
  for (const auto& [name, payload] : files) {
    save_json(directory / name, payload);
    names.push_back(name);
  }
  return names;
}

}  // namespace fixture
}  // namespace socpref
