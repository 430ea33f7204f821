#pragma once

#include <filesystem>
#include <json.hpp>

#include "socpref/analysis.hpp"
#include "socpref/game.hpp"
#include "socpref/social.hpp"
#include "socpref/utility.hpp"

namespace socpref {

// Game files: {"rows": [...], "cols": [...], "m1": [[...]], "m2": [[...]]}
// with an optional "v" matrix of column-player utils. Matrices are row-major
// arrays of arrays; ragged or mismatched shapes are rejected.
nlohmann::json game_to_json(const Game& game);
Game game_from_json(const nlohmann::json& j);

// Utility spec files are tagged by "type":
//   {"type": "eu_table", "values": [[...]]}
//   {"type": "affine", "base": {...}, "scale": s, "shift": c}
//   {"type": "sum", "left": {...}, "right": {...}}
//   {"type": "difference", "left": {...}, "right": {...}}
//   {"type": "social", "kind": "...", "params": {...}}
nlohmann::json spec_to_json(const UtilitySpec& spec);
UtilitySpec spec_from_json(const nlohmann::json& j);

// Standalone social functional files are flat:
//   {"kind": "step", "penalty": p, "equality_tolerance": t}
//   {"kind": "linear", "alpha": a, "beta": b}
//   {"kind": "zero"}
nlohmann::json social_to_json(const SocialFunctional& functional);
SocialFunctional social_from_json(const nlohmann::json& j);

nlohmann::json profile_to_json(const Profile& profile);
Profile profile_from_json(const nlohmann::json& j);

// Verdicts and reports are emit-only.
nlohmann::json verdict_to_json(const BilinearityVerdict& verdict);
nlohmann::json report_to_json(const DecompositionReport& report);

// File helpers. Parse failures surface as ParseError with the path in the
// message; invariant violations from the constructed objects pass through.
Game load_game(const std::filesystem::path& path);
UtilitySpec load_spec(const std::filesystem::path& path);
SocialFunctional load_social(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace socpref
