#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "socpref/game.hpp"
#include "socpref/social.hpp"
#include "socpref/utility.hpp"

namespace socpref {

/// Probe budget and tolerance for the bilinearity checks.
struct ProbeConfig {
  /// Absolute tolerance on deviations, in utils.
  double tolerance = 1e-9;
  /// Number of seeded random profiles (flat Dirichlet per side).
  std::size_t n_random = 1000;
  std::uint64_t seed = 0;
  /// Also probe all vertices, all edge midpoints paired with every opposing
  /// vertex, and the centroid-centroid profile.
  bool include_structured = true;

  /// Throws InvalidArgument unless tolerance > 0.
  void validate() const;
};

/// Deterministically ordered structured probes: vertices row-major, then
/// row-side edge midpoints against every column vertex, then column-side
/// edge midpoints against every row vertex, then the centroid.
std::vector<Profile> structured_probes(const Game& game);

/// The full probe sequence for a config: structured probes (when enabled)
/// followed by cfg.n_random seeded random profiles.
std::vector<Profile> probe_sequence(const Game& game, const ProbeConfig& cfg);

enum class VerdictMethod {
  /// The spec is bilinear by construction; no probing was needed.
  structural,
  /// Probed: "passed" means no violation found within the budget.
  sampled,
};

const char* to_string(VerdictMethod method);

/// Outcome of a bilinearity / expected-utility check.
struct BilinearityVerdict {
  bool passed = false;
  /// Largest observed |spec value - extension of its pure restriction|.
  double max_deviation = 0.0;
  /// Probe attaining max_deviation; first in probe order on ties. Empty for
  /// structural verdicts, which probe nothing.
  std::optional<Profile> witness;
  std::size_t probes_used = 0;
  VerdictMethod method = VerdictMethod::sampled;
  ProbeConfig config;
};

/// Tests whether the functional agrees with the multilinear extension of its
/// own pure-profile restriction. Trees built purely from EU tables are
/// classified structurally; everything else is probed. Throws
/// DimensionMismatch.
BilinearityVerdict check_bilinear(const UtilitySpec& spec, const Game& game,
                                  const ProbeConfig& cfg = {});

/// Same check under the name used for game/selfish utilities: a functional
/// over profiles is an expected-utility functional exactly when it equals
/// the probability-weighted double sum of its pure-profile values.
BilinearityVerdict check_vnm(const UtilitySpec& spec, const Game& game,
                             const ProbeConfig& cfg = {});

/// One row of the joint account of a decomposition at a probe profile.
struct ProbeRow {
  Profile profile;
  double game_utility = 0.0;
  double selfish_utility = 0.0;
  double social_utility = 0.0;
};

struct DecompositionReport {
  /// The social component the verdicts below refer to.
  UtilitySpec social_spec;
  BilinearityVerdict selfish_verdict;
  BilinearityVerdict social_verdict;
  /// Verdicts must agree: the selfish utility is expected utility exactly
  /// when the social utility is bilinear. A false value is a
  /// numerical-tolerance artifact, not a counterexample; report writers
  /// flag it as such.
  bool theorem_consistent = false;
  /// Values of (game, selfish, social) utility on the structured probe set,
  /// for eyeballing the component-wise subtraction.
  std::vector<ProbeRow> probe_values;
};

/// Derives the selfish utility that makes a given game utility and social
/// utility coexist: selfish = game - social. Requires the game utility to
/// pass check_vnm under cfg; throws GameUtilityNotEU otherwise. Returns the
/// derived spec plus a report with verdicts for it and for the social part.
std::pair<UtilitySpec, DecompositionReport> counterbalance(const UtilitySpec& game_utility,
                                                           const UtilitySpec& social,
                                                           const Game& game,
                                                           const ProbeConfig& cfg = {});

/// Forms social = game - selfish, checks the selfish side for expected
/// utility and the social side for bilinearity, and records whether the two
/// verdicts agree. Requires the game utility to pass check_vnm under cfg;
/// throws GameUtilityNotEU otherwise.
DecompositionReport verify_theorem(const UtilitySpec& game_utility,
                                   const UtilitySpec& selfish_utility, const Game& game,
                                   const ProbeConfig& cfg = {});

/// Positive affine transform scale * spec + shift. Throws NonPositiveScale.
UtilitySpec affine_transform(const UtilitySpec& spec, double scale, double shift);

/// A probe pair whose social-value ordering flips once the two utilities are
/// rescaled by different factors.
struct OrderingFlip {
  Profile first;
  Profile second;
  /// Induced social values before the distortion...
  double social_first = 0.0;
  double social_second = 0.0;
  /// ...and after scaling the selfish utility by distorted_scale instead.
  double distorted_first = 0.0;
  double distorted_second = 0.0;
};

struct AffineInvarianceReport {
  double scale = 1.0;
  double shift = 0.0;
  /// Largest |transformed social - scale * social| over the probes. The
  /// shift cancels in the difference, so this is float noise when the
  /// transform is applied to both utilities.
  double max_scaling_error = 0.0;
  bool scaling_consistent = false;
  /// No probe pair reorders under the common transform.
  bool ordering_preserved = false;
  /// Scale applied to the selfish utility only, for the caveat
  /// demonstration below. Fixed at 2 * scale.
  double distorted_scale = 0.0;
  /// Witness that distinct scales break the ordering, when one exists
  /// within the probe budget.
  std::optional<OrderingFlip> flip;
  std::size_t probes_used = 0;
  ProbeConfig config;
};

/// Checks the two affine-transformation facts: a common positive transform
/// of both utilities rescales social utility by the same factor (orderings
/// preserved), while scaling the two utilities by different factors can
/// reorder profiles. Throws NonPositiveScale.
AffineInvarianceReport check_affine_invariance(const UtilitySpec& game_utility,
                                               const UtilitySpec& selfish_utility,
                                               double scale, double shift, const Game& game,
                                               const ProbeConfig& cfg = {});

struct WitnessResult {
  Profile profile;
  double deviation = 0.0;
};

/// Probes the spec against the extension of its own restriction and returns
/// the most deviating probe. The sequence is structured probes first, then
/// seeded random ones, truncated at `budget` probes in total. Never takes
/// the structural shortcut, so it measures real deviations even for specs
/// check_bilinear would classify structurally. Throws InvalidArgument when
/// budget is zero.
WitnessResult find_witness(const UtilitySpec& spec, const Game& game, std::size_t budget,
                           std::uint64_t seed);

// -- randomized theorem suites ------------------------------------------------

struct TrialSummary {
  std::size_t trials = 0;
  std::size_t consistent = 0;
  /// Worst sampled deviation across all trials and probes.
  double worst_deviation = 0.0;
};

struct RandomizedTheoremSummary {
  /// EU game utility and EU selfish utility: the induced social utility must
  /// be bilinear.
  TrialSummary forward;
  /// EU game utility minus bilinear social utility: the selfish utility must
  /// be expected utility.
  TrialSummary backward;

  bool all_consistent() const {
    return forward.consistent == forward.trials && backward.consistent == backward.trials;
  }
};

/// Runs both randomized suites on games with uniformly drawn shapes up to
/// max_rows x max_cols and table entries uniform in [-10, 10]. Each trial
/// gets its own sub-seed, so the whole run is reproducible from `seed`.
RandomizedTheoremSummary run_randomized_theorem_suite(std::size_t trials, std::size_t max_rows,
                                                      std::size_t max_cols, std::uint64_t seed,
                                                      const ProbeConfig& cfg = {});

}  // namespace socpref
