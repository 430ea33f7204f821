#include "socpref/json_io.hpp"

#include <fstream>
#include <sstream>

namespace socpref {

using nlohmann::json;

namespace {

const json& require_key(const json& j, const char* key) {
  if (!j.is_object()) {
    throw ParseError("expected an object with key \"" + std::string(key) + "\"");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError("missing key \"" + std::string(key) + "\"");
  }
  return *it;
}

double require_number(const json& j, const char* key) {
  const json& value = require_key(j, key);
  if (!value.is_number()) {
    throw ParseError("key \"" + std::string(key) + "\" must be a number");
  }
  return value.get<double>();
}

std::vector<std::string> parse_labels(const json& j, const char* key) {
  const json& value = require_key(j, key);
  if (!value.is_array()) {
    throw ParseError("key \"" + std::string(key) + "\" must be an array of strings");
  }
  std::vector<std::string> labels;
  for (const auto& entry : value) {
    if (!entry.is_string()) {
      throw ParseError("key \"" + std::string(key) + "\" must contain only strings");
    }
    labels.push_back(entry.get<std::string>());
  }
  return labels;
}

Matrix parse_matrix(const json& j, const char* key) {
  const json& value = require_key(j, key);
  if (!value.is_array()) {
    throw ParseError("key \"" + std::string(key) + "\" must be an array of arrays of numbers");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : value) {
    if (!row.is_array()) {
      throw ParseError("key \"" + std::string(key) + "\" must be an array of arrays of numbers");
    }
    std::vector<double> entries;
    for (const auto& entry : row) {
      if (!entry.is_number()) {
        throw ParseError("key \"" + std::string(key) + "\" must contain only numbers");
      }
      entries.push_back(entry.get<double>());
    }
    rows.push_back(std::move(entries));
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const Error& e) {
    throw ParseError("key \"" + std::string(key) + "\": " + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_rows()) {
    rows.push_back(row);
  }
  return rows;
}

json strategy_to_json(const MixedStrategy& strategy) { return json(strategy.probs()); }

MixedStrategy strategy_from_json(const json& j, const char* key) {
  const json& value = require_key(j, key);
  if (!value.is_array() || value.empty()) {
    throw ParseError("key \"" + std::string(key) + "\" must be a nonempty array of numbers");
  }
  std::vector<double> probs;
  for (const auto& entry : value) {
    if (!entry.is_number()) {
      throw ParseError("key \"" + std::string(key) + "\" must contain only numbers");
    }
    probs.push_back(entry.get<double>());
  }
  return make_mixed(probs);
}

}  // namespace

json game_to_json(const Game& game) {
  json j;
  j["rows"] = game.row_labels();
  j["cols"] = game.col_labels();
  j["m1"] = matrix_to_json(game.alice_payoffs());
  j["m2"] = matrix_to_json(game.bob_payoffs());
  if (game.bob_utils()) {
    j["v"] = matrix_to_json(*game.bob_utils());
  }
  return j;
}

Game game_from_json(const json& j) {
  std::vector<std::string> rows = parse_labels(j, "rows");
  std::vector<std::string> cols = parse_labels(j, "cols");
  Matrix m1 = parse_matrix(j, "m1");
  Matrix m2 = parse_matrix(j, "m2");
  std::optional<Matrix> v;
  if (j.is_object() && j.contains("v")) {
    v = parse_matrix(j, "v");
  }
  return Game(std::move(rows), std::move(cols), std::move(m1), std::move(m2), std::move(v));
}

namespace {

const char* social_kind(const SocialFunctional& functional) {
  struct Visitor {
    const char* operator()(const StepInequalityAversion&) const { return "step"; }
    const char* operator()(const LinearInequalityAversion&) const { return "linear"; }
    const char* operator()(const ZeroSocial&) const { return "zero"; }
  };
  return std::visit(Visitor{}, functional.node());
}

json social_params(const SocialFunctional& functional) {
  struct Visitor {
    json operator()(const StepInequalityAversion& f) const {
      return json{{"penalty", f.penalty}, {"equality_tolerance", f.equality_tolerance}};
    }
    json operator()(const LinearInequalityAversion& f) const {
      return json{{"alpha", f.alpha}, {"beta", f.beta}};
    }
    json operator()(const ZeroSocial&) const { return json::object(); }
  };
  return std::visit(Visitor{}, functional.node());
}

SocialFunctional social_from_kind_params(const std::string& kind, const json& params) {
  if (kind == "step") {
    const double penalty = require_number(params, "penalty");
    const double equality_tolerance = params.contains("equality_tolerance")
                                          ? require_number(params, "equality_tolerance")
                                          : 1e-9;
    return SocialFunctional::step(penalty, equality_tolerance);
  }
  if (kind == "linear") {
    return SocialFunctional::linear(require_number(params, "alpha"),
                                    require_number(params, "beta"));
  }
  if (kind == "zero") {
    return SocialFunctional::zero();
  }
  throw ParseError("unknown social kind \"" + kind + "\"");
}

}  // namespace

json social_to_json(const SocialFunctional& functional) {
  json j = social_params(functional);
  j["kind"] = social_kind(functional);
  return j;
}

SocialFunctional social_from_json(const json& j) {
  const json& kind = require_key(j, "kind");
  if (!kind.is_string()) {
    throw ParseError("key \"kind\" must be a string");
  }
  return social_from_kind_params(kind.get<std::string>(), j);
}

json spec_to_json(const UtilitySpec& spec) {
  struct Visitor {
    json operator()(const UtilitySpec::EuTableNode& n) const {
      return json{{"type", "eu_table"}, {"values", matrix_to_json(n.table.values())}};
    }
    json operator()(const UtilitySpec::SocialNode& n) const {
      return json{{"type", "social"},
                  {"kind", social_kind(n.functional)},
                  {"params", social_params(n.functional)}};
    }
    json operator()(const UtilitySpec::AffineNode& n) const {
      return json{{"type", "affine"},
                  {"base", spec_to_json(*n.base)},
                  {"scale", n.scale},
                  {"shift", n.shift}};
    }
    json operator()(const UtilitySpec::SumNode& n) const {
      return json{
          {"type", "sum"}, {"left", spec_to_json(*n.left)}, {"right", spec_to_json(*n.right)}};
    }
    json operator()(const UtilitySpec::DifferenceNode& n) const {
      return json{{"type", "difference"},
                  {"left", spec_to_json(*n.left)},
                  {"right", spec_to_json(*n.right)}};
    }
  };
  return std::visit(Visitor{}, spec.node());
}

UtilitySpec spec_from_json(const json& j) {
  const json& type = require_key(j, "type");
  if (!type.is_string()) {
    throw ParseError("key \"type\" must be a string");
  }
  const std::string tag = type.get<std::string>();
  if (tag == "eu_table") {
    return UtilitySpec::eu_table(parse_matrix(j, "values"));
  }
  if (tag == "social") {
    const json& kind = require_key(j, "kind");
    if (!kind.is_string()) {
      throw ParseError("key \"kind\" must be a string");
    }
    const json params = j.contains("params") ? j.at("params") : json::object();
    return UtilitySpec::social(social_from_kind_params(kind.get<std::string>(), params));
  }
  if (tag == "affine") {
    return UtilitySpec::affine(spec_from_json(require_key(j, "base")),
                               require_number(j, "scale"), require_number(j, "shift"));
  }
  if (tag == "sum") {
    return UtilitySpec::sum(spec_from_json(require_key(j, "left")),
                            spec_from_json(require_key(j, "right")));
  }
  if (tag == "difference") {
    return UtilitySpec::difference(spec_from_json(require_key(j, "left")),
                                   spec_from_json(require_key(j, "right")));
  }
  throw ParseError("unknown utility spec type \"" + tag + "\"");
}

json profile_to_json(const Profile& profile) {
  return json{{"row", strategy_to_json(profile.row)}, {"col", strategy_to_json(profile.col)}};
}

Profile profile_from_json(const json& j) {
  return Profile{strategy_from_json(j, "row"), strategy_from_json(j, "col")};
}

json verdict_to_json(const BilinearityVerdict& verdict) {
  json j;
  j["passed"] = verdict.passed;
  j["max_deviation"] = verdict.max_deviation;
  j["witness"] = verdict.witness ? profile_to_json(*verdict.witness) : json(nullptr);
  j["method"] = to_string(verdict.method);
  j["probes_used"] = verdict.probes_used;
  j["tolerance"] = verdict.config.tolerance;
  return j;
}

json report_to_json(const DecompositionReport& report) {
  json probes = json::array();
  for (const ProbeRow& row : report.probe_values) {
    probes.push_back(json{{"profile", profile_to_json(row.profile)},
                          {"game_utility", row.game_utility},
                          {"selfish_utility", row.selfish_utility},
                          {"social_utility", row.social_utility}});
  }
  json j;
  j["social_spec"] = spec_to_json(report.social_spec);
  j["selfish_verdict"] = verdict_to_json(report.selfish_verdict);
  j["social_verdict"] = verdict_to_json(report.social_verdict);
  j["theorem_consistent"] = report.theorem_consistent;
  j["probes"] = probes;
  if (!report.theorem_consistent) {
    j["warning"] =
        "verdict disagreement at this tolerance is a numerical artifact of sampled "
        "probing, not a counterexample to the decomposition result";
  }
  return j;
}

namespace {

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string() + ": cannot open file");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": invalid JSON: " + e.what());
  }
}

template <typename Fn>
auto load_with_context(const std::filesystem::path& path, Fn&& parse) {
  const json j = parse_file(path);
  try {
    return parse(j);
  } catch (const Error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

Game load_game(const std::filesystem::path& path) {
  return load_with_context(path, [](const json& j) { return game_from_json(j); });
}

UtilitySpec load_spec(const std::filesystem::path& path) {
  return load_with_context(path, [](const json& j) { return spec_from_json(j); });
}

SocialFunctional load_social(const std::filesystem::path& path) {
  return load_with_context(path, [](const json& j) { return social_from_json(j); });
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError(path.string() + ": cannot open file for writing");
  }
  out << j.dump(2) << "\n";
}

}  // namespace socpref
