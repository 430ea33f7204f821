// socpref: audits utility decompositions on finite two-player games.
//
// Subcommands:
//   audit          check a game utility against a selfish utility or a
//                  social functional read from JSON files
//   paper-fixture  replay the bundled worked example and verify every value
//   verify-theorem randomized decomposition consistency suite
//   export-fixture write the worked example as JSON files
//
// Exit codes: 0 success and consistent verdicts, 1 input or usage error,
// 2 verdict inconsistency or failed fixture assertion.

#include <CLI11.hpp>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "socpref/analysis.hpp"
#include "socpref/fixture.hpp"
#include "socpref/json_io.hpp"

namespace {

using namespace socpref;

std::string format_deviation(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6e", x);
  return buffer;
}

std::string format_value(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

std::string strategy_label(const MixedStrategy& strategy,
                           const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    if (strategy[i] == 1.0) {
      return labels[i];
    }
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    if (strategy[i] == 0.0) {
      continue;
    }
    if (!first) {
      out << " + ";
    }
    out << format_value(strategy[i]) << "*" << labels[i];
    first = false;
  }
  return out.str();
}

std::string profile_label(const Profile& profile, const Game& game) {
  return "(" + strategy_label(profile.row, game.row_labels()) + ", " +
         strategy_label(profile.col, game.col_labels()) + ")";
}

void print_verdict(std::ostream& out, const std::string& heading,
                   const BilinearityVerdict& verdict, const Game& game) {
  out << heading << ": " << (verdict.passed ? "PASS" : "FAIL") << "  max deviation "
      << format_deviation(verdict.max_deviation) << " (" << to_string(verdict.method) << ", "
      << verdict.probes_used << " probes, tolerance "
      << format_deviation(verdict.config.tolerance) << ")\n";
  if (verdict.witness) {
    out << "  witness: " << profile_label(*verdict.witness, game) << "\n";
  }
}

void print_report_text(std::ostream& out, const Game& game, const DecompositionReport& report) {
  out << "decomposition at structured probes:\n";
  out << "  " << std::left << std::setw(44) << "profile" << std::right << std::setw(12) << "u_g"
      << std::setw(12) << "u_d" << std::setw(12) << "s"
      << "\n";
  for (const ProbeRow& row : report.probe_values) {
    out << "  " << std::left << std::setw(44) << profile_label(row.profile, game) << std::right
        << std::setw(12) << format_value(row.game_utility) << std::setw(12)
        << format_value(row.selfish_utility) << std::setw(12)
        << format_value(row.social_utility) << "\n";
  }
  out << "\n";
  print_verdict(out, "selfish utility expected-utility check (u_d)", report.selfish_verdict,
                game);
  print_verdict(out, "social utility bilinearity check (s)", report.social_verdict, game);
  out << "verdicts agree: " << (report.theorem_consistent ? "yes" : "NO") << "\n";
  if (!report.theorem_consistent) {
    out << "note: disagreement at this tolerance is a numerical artifact of sampled "
           "probing, not a counterexample\n";
  }
}

struct AuditOptions {
  std::string game_path;
  std::string game_utility_path;
  std::string selfish_path;
  std::string social_path;
  double tolerance = 1e-9;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::string format = "text";
};

int run_audit(const AuditOptions& opt) {
  const Game game = load_game(opt.game_path);
  const UtilitySpec game_utility = load_spec(opt.game_utility_path);
  ProbeConfig cfg;
  cfg.tolerance = opt.tolerance;
  cfg.n_random = opt.samples;
  cfg.seed = opt.seed;

  std::optional<UtilitySpec> derived_selfish;
  std::optional<DecompositionReport> report;
  if (!opt.social_path.empty()) {
    const SocialFunctional social = load_social(opt.social_path);
    auto [selfish, social_report] =
        counterbalance(game_utility, UtilitySpec::social(social), game, cfg);
    derived_selfish = std::move(selfish);
    report = std::move(social_report);
  } else {
    const UtilitySpec selfish = load_spec(opt.selfish_path);
    report = verify_theorem(game_utility, selfish, game, cfg);
  }

  if (opt.format == "json") {
    nlohmann::json j = report_to_json(*report);
    j["mode"] = derived_selfish ? "counterbalance" : "verify";
    if (derived_selfish) {
      j["derived_selfish_spec"] = spec_to_json(*derived_selfish);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "audit: " << opt.game_path << " (" << game.num_rows() << "x" << game.num_cols()
              << ")\n";
    std::cout << "mode: "
              << (derived_selfish ? "counterbalance (selfish utility derived as u_g - s)"
                                  : "verify (social utility formed as u_g - u_d)")
              << "\n\n";
    print_report_text(std::cout, game, *report);
  }
  return report->theorem_consistent ? 0 : 2;
}

int run_fixture(const std::string& format, double tolerance) {
  const fixture::FixtureReport report = fixture::run_illustrative_fixture(tolerance);
  if (format == "json") {
    nlohmann::json sections = nlohmann::json::array();
    for (const auto& section : report.sections) {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& check : section.checks) {
        checks.push_back({{"name", check.name},
                          {"expected", check.expected},
                          {"actual", check.actual},
                          {"passed", check.passed}});
      }
      sections.push_back({{"title", section.title}, {"checks", checks}});
    }
    const nlohmann::json j = {{"assert_tolerance", report.assert_tolerance},
                              {"all_passed", report.all_passed()},
                              {"sections", sections}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "worked example audit (tolerance " << format_deviation(report.assert_tolerance)
              << ")\n";
    std::size_t passed = 0;
    std::size_t total = 0;
    for (const auto& section : report.sections) {
      std::cout << "\n" << section.title << "\n";
      for (const auto& check : section.checks) {
        ++total;
        if (check.passed) {
          ++passed;
          std::cout << "  [ok]   " << check.name << " = " << format_value(check.actual) << "\n";
        } else {
          std::cout << "  [FAIL] " << check.name << ": expected "
                    << format_value(check.expected) << ", got " << format_value(check.actual)
                    << "\n";
        }
      }
    }
    std::cout << "\n" << passed << "/" << total << " checks passed\n";
  }
  if (!report.all_passed()) {
    std::cerr << "error: fixture assertion failed: " << report.first_failure()->name << "\n";
    return 2;
  }
  return 0;
}

int run_verify(std::size_t trials, std::size_t max_rows, std::size_t max_cols,
               std::uint64_t seed) {
  const RandomizedTheoremSummary summary =
      run_randomized_theorem_suite(trials, max_rows, max_cols, seed);
  std::cout << "randomized decomposition audit: trials=" << trials << " max_rows=" << max_rows
            << " max_cols=" << max_cols << " seed=" << seed << "\n";
  std::cout << "forward  (EU u_g, EU u_d => s bilinear): " << summary.forward.consistent << "/"
            << summary.forward.trials << " consistent, worst deviation "
            << format_deviation(summary.forward.worst_deviation) << "\n";
  std::cout << "backward (EU u_g, bilinear s => u_d EU): " << summary.backward.consistent << "/"
            << summary.backward.trials << " consistent, worst deviation "
            << format_deviation(summary.backward.worst_deviation) << "\n";
  if (summary.all_consistent()) {
    std::cout << "result: all trials consistent\n";
    return 0;
  }
  std::cout << "result: INCONSISTENT TRIALS FOUND\n";
  return 2;
}

int run_export(const std::string& directory) {
  for (const std::string& name : fixture::export_illustrative_fixture(directory)) {
    std::cout << "wrote " << (std::filesystem::path(directory) / name).string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"social preference decomposition audits for finite two-player games"};
  app.require_subcommand(1);

  AuditOptions audit;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "audit a decomposition read from JSON files");
  audit_cmd->add_option("--game", audit.game_path, "game file (JSON)")->required();
  audit_cmd->add_option("--ug", audit.game_utility_path, "game utility spec file (JSON)")
      ->required();
  CLI::Option* ud_opt =
      audit_cmd->add_option("--ud", audit.selfish_path, "selfish utility spec file (JSON)");
  CLI::Option* social_opt = audit_cmd->add_option(
      "--social", audit.social_path, "social functional file (JSON); derives u_d = u_g - s");
  ud_opt->excludes(social_opt);
  audit_cmd->add_option("--tolerance", audit.tolerance, "absolute deviation tolerance")
      ->check(CLI::PositiveNumber);
  audit_cmd->add_option("--samples", audit.samples, "number of random probes");
  audit_cmd->add_option("--seed", audit.seed, "probe seed");
  audit_cmd->add_option("--format", audit.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  double fixture_tolerance = 1e-12;
  std::string fixture_format = "text";
  CLI::App* fixture_cmd =
      app.add_subcommand("paper-fixture", "replay the bundled worked example");
  fixture_cmd->add_option("--tolerance", fixture_tolerance,
                          "assertion tolerance (0 demands exact equality)")
      ->check(CLI::NonNegativeNumber);
  fixture_cmd->add_option("--format", fixture_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::size_t trials = 100;
  std::size_t max_rows = 5;
  std::size_t max_cols = 5;
  std::uint64_t seed = 42;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-theorem", "randomized decomposition consistency suite");
  verify_cmd->add_option("--trials", trials, "number of random trials")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-m", max_rows, "max row strategies")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", max_cols, "max column strategies")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "master seed");

  std::string export_dir = ".";
  CLI::App* export_cmd =
      app.add_subcommand("export-fixture", "write the worked example as JSON files");
  export_cmd->add_option("--out", export_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (audit_cmd->parsed()) {
      if (audit.selfish_path.empty() == audit.social_path.empty()) {
        std::cerr << "error: audit needs exactly one of --ud or --social\n";
        return 1;
      }
      return run_audit(audit);
    }
    if (fixture_cmd->parsed()) {
      return run_fixture(fixture_format, fixture_tolerance);
    }
    if (verify_cmd->parsed()) {
      return run_verify(trials, max_rows, max_cols, seed);
    }
    if (export_cmd->parsed()) {
      return run_export(export_dir);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
