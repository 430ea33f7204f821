// Integration tests that drive the installed binary end to end. The binary
// path comes from the SOCPREF_CLI environment variable (set by ctest).
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

std::string cli_path() {
  const char* path = std::getenv("SOCPREF_CLI");
  REQUIRE_MESSAGE(path != nullptr, "SOCPREF_CLI must point at the socpref binary");
  return path;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command =
      "\"" + cli_path() + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  std::filesystem::path path;

  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("socpref_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string write(const std::string& name, const std::string& contents) const {
    const std::filesystem::path file = path / name;
    std::ofstream out(file);
    out << contents;
    return file.string();
  }

  static int& counter() {
    static int value = 0;
    return value;
  }
};

}  // namespace

TEST_CASE("paper-fixture passes and reports every check") {
  const CliResult result = run_cli("paper-fixture");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("18/18 checks passed") != std::string::npos);
  CHECK(result.output.find("[FAIL]") == std::string::npos);

  const CliResult exact = run_cli("paper-fixture --tolerance 0");
  CHECK(exact.exit_code == 0);

  const CliResult as_json = run_cli("paper-fixture --format json");
  CHECK(as_json.exit_code == 0);
  const json j = json::parse(as_json.output);
  CHECK(j.at("all_passed") == true);
  CHECK(j.at("sections").size() == 5);
}

TEST_CASE("export-fixture then audit replays the worked example") {
  const TempDir dir;
  const CliResult exported = run_cli("export-fixture --out " + dir.path.string());
  CHECK(exported.exit_code == 0);

  const std::string base = " --game " + (dir.path / "fixture_response_game.json").string() +
                           " --ug " + (dir.path / "fixture_game_utility.json").string() +
                           " --social " + (dir.path / "fixture_social.json").string();

  const CliResult text = run_cli("audit" + base);
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("verdicts agree: yes") != std::string::npos);
  CHECK(text.output.find("FAIL") != std::string::npos);  // both component checks fail

  const CliResult as_json = run_cli("audit" + base + " --format json");
  CHECK(as_json.exit_code == 0);
  const json j = json::parse(as_json.output);
  CHECK(j.at("mode") == "counterbalance");
  CHECK(j.at("theorem_consistent") == true);
  CHECK(j.at("selfish_verdict").at("passed") == false);
  CHECK(j.at("social_verdict").at("passed") == false);
  CHECK(j.contains("derived_selfish_spec"));
  // The half-mix probe carries the counterbalanced value 9.
  bool found_nine = false;
  for (const auto& probe : j.at("probes")) {
    if (probe.at("profile").at("row")[0] == 0.5) {
      CHECK(probe.at("selfish_utility") == 9.0);
      found_nine = true;
    }
  }
  CHECK(found_nine);

  // Emitted JSON re-serializes byte-identically.
  CHECK(json::parse(as_json.output).dump(2) + "\n" == as_json.output);
}

TEST_CASE("audit with an explicit selfish utility") {
  const TempDir dir;
  const std::string game = dir.write("game.json", R"({
    "rows": ["a", "b"], "cols": ["x", "y"],
    "m1": [[1, 2], [3, 4]], "m2": [[4, 3], [2, 1]]
  })");
  const std::string table = dir.write("u.json", R"({
    "type": "eu_table", "values": [[1.5, -2.0], [0.5, 3.0]]
  })");
  const CliResult result = run_cli("audit --game " + game + " --ug " + table + " --ud " + table +
                                   " --format json");
  CHECK(result.exit_code == 0);
  const json j = json::parse(result.output);
  CHECK(j.at("mode") == "verify");
  CHECK(j.at("theorem_consistent") == true);
  CHECK(j.at("selfish_verdict").at("passed") == true);
  CHECK(j.at("selfish_verdict").at("method") == "structural");
}

TEST_CASE("tolerance artifacts are flagged and exit with code 2") {
  const TempDir dir;
  const std::string game = dir.write("game.json", R"({
    "rows": ["a", "b"], "cols": ["x", "y"],
    "m1": [[1, 2], [3, 4]], "m2": [[4, 3], [2, 1]]
  })");
  const std::string game_utility = dir.write("ug.json", R"({
    "type": "eu_table", "values": [[0.1, 0.2], [0.3, 0.7]]
  })");
  // Structurally opaque but pointwise equal to a table: the social side is
  // probed and picks up float noise that a sub-epsilon tolerance rejects,
  // while the selfish side stays exact.
  const std::string selfish = dir.write("ud.json", R"({
    "type": "sum",
    "left": {"type": "eu_table", "values": [[0.45, 0.85], [0.15, 0.55]]},
    "right": {"type": "social", "kind": "zero", "params": {}}
  })");
  const CliResult result = run_cli("audit --game " + game + " --ug " + game_utility + " --ud " +
                                       selfish + " --tolerance 1e-30 --format json");
  CHECK(result.exit_code == 2);
  const json j = json::parse(result.output);
  CHECK(j.at("theorem_consistent") == false);
  CHECK(j.contains("warning"));
  CHECK(j.at("selfish_verdict").at("passed") == true);
  CHECK(j.at("social_verdict").at("passed") == false);
}

TEST_CASE("input errors exit with code 1 and name the file") {
  const TempDir dir;
  const std::string bad_game = dir.write("bad.json", R"({
    "rows": ["a", "b"], "cols": ["x", "y"],
    "m1": [[1, 2], [3, 4]], "m2": [[4, 3, 0], [2, 1, 0]]
  })");
  const std::string table = dir.write("u.json", R"({
    "type": "eu_table", "values": [[1, 2], [3, 4]]
  })");

  const CliResult shape = run_cli(
      "audit --game " + bad_game + " --ug " + table + " --ud " + table, /*merge_stderr=*/true);
  CHECK(shape.exit_code == 1);
  CHECK(shape.output.find("bad.json") != std::string::npos);

  const CliResult missing =
      run_cli("audit --game /nonexistent.json --ug " + table + " --ud " + table, true);
  CHECK(missing.exit_code == 1);

  const std::string game = dir.write("game.json", R"({
    "rows": ["a", "b"], "cols": ["x", "y"],
    "m1": [[1, 2], [3, 4]], "m2": [[4, 3], [2, 1]]
  })");
  const std::string wide = dir.write("wide.json", R"({
    "type": "eu_table", "values": [[1, 2, 0], [3, 4, 0]]
  })");
  const CliResult mismatch =
      run_cli("audit --game " + game + " --ug " + wide + " --ud " + wide, true);
  CHECK(mismatch.exit_code == 1);

  const std::string step = dir.write("step.json", R"({
    "type": "social", "kind": "step", "params": {"penalty": 1.0}
  })");
  const CliResult not_eu =
      run_cli("audit --game " + game + " --ug " + step + " --ud " + table, true);
  CHECK(not_eu.exit_code == 1);
  CHECK(not_eu.output.find("expected-utility") != std::string::npos);

  const CliResult both = run_cli(
      "audit --game " + game + " --ug " + table + " --ud " + table + " --social " + step, true);
  CHECK(both.exit_code == 1);
  const CliResult neither = run_cli("audit --game " + game + " --ug " + table, true);
  CHECK(neither.exit_code == 1);
}

TEST_CASE("usage errors exit with code 1, help with 0") {
  CHECK(run_cli("mystery-subcommand", true).exit_code == 1);
  CHECK(run_cli("", true).exit_code == 1);
  CHECK(run_cli("--help", true).exit_code == 0);
  CHECK(run_cli("audit --game x.json --ug y.json --ud z.json --tolerance -1", true).exit_code ==
        1);
}

TEST_CASE("verify-theorem is deterministic and consistent") {
  const CliResult first = run_cli("verify-theorem --trials 10 --max-m 3 --max-n 3 --seed 7");
  const CliResult second = run_cli("verify-theorem --trials 10 --max-m 3 --max-n 3 --seed 7");
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("10/10 consistent") != std::string::npos);
  CHECK(first.output.find("all trials consistent") != std::string::npos);

  const CliResult degenerate = run_cli("verify-theorem --trials 1 --max-m 1 --max-n 1 --seed 3");
  CHECK(degenerate.exit_code == 0);
}
