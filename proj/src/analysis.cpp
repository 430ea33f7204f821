#include "socpref/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "socpref/sampling.hpp"

namespace socpref {

void ProbeConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw InvalidArgument("probe tolerance must be finite and positive");
  }
}

const char* to_string(VerdictMethod method) {
  return method == VerdictMethod::structural ? "structural" : "sampled";
}

std::vector<Profile> structured_probes(const Game& game) {
  const std::size_t m = game.num_rows();
  const std::size_t n = game.num_cols();
  std::vector<Profile> probes;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      probes.push_back(pure_profile(game, i, j));
    }
  }
  for (std::size_t i1 = 0; i1 < m; ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < m; ++i2) {
      MixedStrategy midpoint =
          mix(MixedStrategy::pure(m, i1), MixedStrategy::pure(m, i2), 0.5);
      for (std::size_t j = 0; j < n; ++j) {
        probes.push_back(Profile{midpoint, MixedStrategy::pure(n, j)});
      }
    }
  }
  for (std::size_t j1 = 0; j1 < n; ++j1) {
    for (std::size_t j2 = j1 + 1; j2 < n; ++j2) {
      MixedStrategy midpoint =
          mix(MixedStrategy::pure(n, j1), MixedStrategy::pure(n, j2), 0.5);
      for (std::size_t i = 0; i < m; ++i) {
        probes.push_back(Profile{MixedStrategy::pure(m, i), midpoint});
      }
    }
  }
  probes.push_back(uniform_profile(game));
  return probes;
}

std::vector<Profile> probe_sequence(const Game& game, const ProbeConfig& cfg) {
  std::vector<Profile> probes;
  if (cfg.include_structured) {
    probes = structured_probes(game);
  }
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t k = 0; k < cfg.n_random; ++k) {
    probes.push_back(random_profile(game, rng));
  }
  return probes;
}

namespace {

struct DeviationScan {
  double max_deviation = 0.0;
  std::optional<Profile> witness;
  std::size_t probes_used = 0;
};

// Probes the spec against the multilinear extension of its own pure-profile
// restriction. Strictly-greater comparison keeps the first probe on ties.
DeviationScan scan_deviations(const UtilitySpec& spec, const Game& game,
                              const std::vector<Profile>& probes) {
  const UtilityTable restriction = restrict_to_pure(spec, game);
  DeviationScan scan;
  scan.probes_used = probes.size();
  for (const Profile& probe : probes) {
    const double deviation =
        std::fabs(evaluate(spec, game, probe) - multilinear_extension(restriction, probe));
    if (!scan.witness || deviation > scan.max_deviation) {
      scan.max_deviation = deviation;
      scan.witness = probe;
    }
  }
  return scan;
}

}  // namespace

BilinearityVerdict check_bilinear(const UtilitySpec& spec, const Game& game,
                                  const ProbeConfig& cfg) {
  cfg.validate();
  BilinearityVerdict verdict;
  verdict.config = cfg;
  if (spec.structurally_bilinear()) {
    // Dimension conformance is still part of the contract.
    restrict_to_pure(spec, game);
    verdict.method = VerdictMethod::structural;
    verdict.passed = true;
    verdict.max_deviation = 0.0;
    verdict.probes_used = 0;
    return verdict;
  }
  const DeviationScan scan = scan_deviations(spec, game, probe_sequence(game, cfg));
  verdict.method = VerdictMethod::sampled;
  verdict.max_deviation = scan.max_deviation;
  verdict.witness = scan.witness;
  verdict.probes_used = scan.probes_used;
  verdict.passed = scan.max_deviation <= cfg.tolerance;
  return verdict;
}

BilinearityVerdict check_vnm(const UtilitySpec& spec, const Game& game, const ProbeConfig& cfg) {
  return check_bilinear(spec, game, cfg);
}

WitnessResult find_witness(const UtilitySpec& spec, const Game& game, std::size_t budget,
                           std::uint64_t seed) {
  if (budget == 0) {
    throw InvalidArgument("witness search budget must be at least one probe");
  }
  std::vector<Profile> probes = structured_probes(game);
  if (probes.size() > budget) {
    probes.erase(probes.begin() + static_cast<std::ptrdiff_t>(budget), probes.end());
  } else {
    std::mt19937_64 rng(seed);
    while (probes.size() < budget) {
      probes.push_back(random_profile(game, rng));
    }
  }
  const DeviationScan scan = scan_deviations(spec, game, probes);
  return WitnessResult{*scan.witness, scan.max_deviation};
}

namespace {

std::vector<ProbeRow> tabulate_decomposition(const UtilitySpec& game_utility,
                                             const UtilitySpec& selfish_utility,
                                             const UtilitySpec& social, const Game& game) {
  std::vector<ProbeRow> rows;
  for (const Profile& probe : structured_probes(game)) {
    // Tiny games can repeat a probe (the centroid of a two-strategy side is
    // also an edge midpoint); keep the table duplicate-free.
    const bool seen = std::any_of(rows.begin(), rows.end(),
                                  [&](const ProbeRow& row) { return row.profile == probe; });
    if (seen) {
      continue;
    }
    rows.push_back(ProbeRow{probe, evaluate(game_utility, game, probe),
                            evaluate(selfish_utility, game, probe),
                            evaluate(social, game, probe)});
  }
  return rows;
}

void require_game_utility_eu(const UtilitySpec& game_utility, const Game& game,
                             const ProbeConfig& cfg) {
  const BilinearityVerdict verdict = check_vnm(game_utility, game, cfg);
  if (!verdict.passed) {
    throw GameUtilityNotEU(
        "game utility is not an expected-utility functional: deviation " +
        std::to_string(verdict.max_deviation) + " exceeds tolerance " +
        std::to_string(cfg.tolerance));
  }
}

}  // namespace

std::pair<UtilitySpec, DecompositionReport> counterbalance(const UtilitySpec& game_utility,
                                                           const UtilitySpec& social,
                                                           const Game& game,
                                                           const ProbeConfig& cfg) {
  cfg.validate();
  require_game_utility_eu(game_utility, game, cfg);
  UtilitySpec selfish = UtilitySpec::difference(game_utility, social);
  DecompositionReport report{
      /*social_spec=*/social,
      /*selfish_verdict=*/check_vnm(selfish, game, cfg),
      /*social_verdict=*/check_bilinear(social, game, cfg),
      /*theorem_consistent=*/false,
      /*probe_values=*/tabulate_decomposition(game_utility, selfish, social, game),
  };
  report.theorem_consistent = report.selfish_verdict.passed == report.social_verdict.passed;
  return {std::move(selfish), std::move(report)};
}

DecompositionReport verify_theorem(const UtilitySpec& game_utility,
                                   const UtilitySpec& selfish_utility, const Game& game,
                                   const ProbeConfig& cfg) {
  cfg.validate();
  require_game_utility_eu(game_utility, game, cfg);
  UtilitySpec social = induced_social(game_utility, selfish_utility);
  DecompositionReport report{
      /*social_spec=*/social,
      /*selfish_verdict=*/check_vnm(selfish_utility, game, cfg),
      /*social_verdict=*/check_bilinear(social, game, cfg),
      /*theorem_consistent=*/false,
      /*probe_values=*/tabulate_decomposition(game_utility, selfish_utility, social, game),
  };
  report.theorem_consistent = report.selfish_verdict.passed == report.social_verdict.passed;
  return report;
}

UtilitySpec affine_transform(const UtilitySpec& spec, double scale, double shift) {
  return UtilitySpec::affine(spec, scale, shift);
}

AffineInvarianceReport check_affine_invariance(const UtilitySpec& game_utility,
                                               const UtilitySpec& selfish_utility, double scale,
                                               double shift, const Game& game,
                                               const ProbeConfig& cfg) {
  cfg.validate();
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw NonPositiveScale("affine scale must be positive, got " + std::to_string(scale));
  }

  AffineInvarianceReport report;
  report.scale = scale;
  report.shift = shift;
  report.distorted_scale = 2.0 * scale;
  report.config = cfg;

  const UtilitySpec social = induced_social(game_utility, selfish_utility);
  const UtilitySpec transformed_social = induced_social(
      affine_transform(game_utility, scale, shift), affine_transform(selfish_utility, scale, shift));
  // Same shift, different scale on the selfish side only.
  const UtilitySpec distorted_social =
      induced_social(affine_transform(game_utility, scale, shift),
                     affine_transform(selfish_utility, report.distorted_scale, shift));

  const std::vector<Profile> probes = probe_sequence(game, cfg);
  report.probes_used = probes.size();

  std::vector<double> social_values(probes.size());
  std::vector<double> transformed_values(probes.size());
  std::vector<double> distorted_values(probes.size());
  for (std::size_t k = 0; k < probes.size(); ++k) {
    social_values[k] = evaluate(social, game, probes[k]);
    transformed_values[k] = evaluate(transformed_social, game, probes[k]);
    distorted_values[k] = evaluate(distorted_social, game, probes[k]);
    const double error = std::fabs(transformed_values[k] - scale * social_values[k]);
    if (error > report.max_scaling_error) {
      report.max_scaling_error = error;
    }
  }
  report.scaling_consistent = report.max_scaling_error <= cfg.tolerance;

  // Ordering comparisons use the tolerance as a strictness margin so float
  // noise on near-ties cannot fake a violation.
  const double margin = cfg.tolerance;
  report.ordering_preserved = true;
  for (std::size_t a = 0; a < probes.size() && report.ordering_preserved; ++a) {
    for (std::size_t b = a + 1; b < probes.size(); ++b) {
      const bool ab_flipped = transformed_values[a] > transformed_values[b] + margin &&
                              social_values[a] < social_values[b] - margin;
      const bool ba_flipped = transformed_values[b] > transformed_values[a] + margin &&
                              social_values[b] < social_values[a] - margin;
      if (ab_flipped || ba_flipped) {
        report.ordering_preserved = false;
        break;
      }
    }
  }

  for (std::size_t a = 0; a < probes.size() && !report.flip; ++a) {
    for (std::size_t b = a + 1; b < probes.size(); ++b) {
      const bool ab_flipped = distorted_values[a] > distorted_values[b] + margin &&
                              social_values[a] < social_values[b] - margin;
      const bool ba_flipped = distorted_values[b] > distorted_values[a] + margin &&
                              social_values[b] < social_values[a] - margin;
      if (ab_flipped || ba_flipped) {
        const std::size_t first = ab_flipped ? a : b;
        const std::size_t second = ab_flipped ? b : a;
        report.flip = OrderingFlip{probes[first],          probes[second],
                                   social_values[first],   social_values[second],
                                   distorted_values[first], distorted_values[second]};
        break;
      }
    }
  }
  return report;
}

namespace {

Game random_game(std::size_t max_rows, std::size_t max_cols, std::mt19937_64& rng) {
  const std::size_t m = 1 + static_cast<std::size_t>(rng() % max_rows);
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_cols);
  std::vector<std::string> row_labels(m);
  std::vector<std::string> col_labels(n);
  for (std::size_t i = 0; i < m; ++i) row_labels[i] = "r" + std::to_string(i);
  for (std::size_t j = 0; j < n; ++j) col_labels[j] = "c" + std::to_string(j);
  Matrix m1(m, n);
  Matrix m2(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m1(i, j) = uniform_in(rng, -10.0, 10.0);
      m2(i, j) = uniform_in(rng, -10.0, 10.0);
    }
  }
  return Game(std::move(row_labels), std::move(col_labels), std::move(m1), std::move(m2));
}

Matrix random_table(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix t(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      t(i, j) = uniform_in(rng, -10.0, 10.0);
    }
  }
  return t;
}

}  // namespace

RandomizedTheoremSummary run_randomized_theorem_suite(std::size_t trials, std::size_t max_rows,
                                                      std::size_t max_cols, std::uint64_t seed,
                                                      const ProbeConfig& cfg) {
  cfg.validate();
  if (trials == 0 || max_rows == 0 || max_cols == 0) {
    throw InvalidArgument("trial count and game dimensions must be at least one");
  }
  RandomizedTheoremSummary summary;
  summary.forward.trials = trials;
  summary.backward.trials = trials;
  SeedSequence seeds(seed);

  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seeds.next());
    const Game game = random_game(max_rows, max_cols, rng);
    const std::size_t budget = structured_probes(game).size() + cfg.n_random;

    // EU game utility and EU selfish utility force a bilinear social utility.
    {
      const UtilitySpec game_u = UtilitySpec::eu_table(
          random_table(game.num_rows(), game.num_cols(), rng));
      const UtilitySpec selfish_u = UtilitySpec::eu_table(
          random_table(game.num_rows(), game.num_cols(), rng));
      const UtilitySpec social = induced_social(game_u, selfish_u);
      const BilinearityVerdict verdict = check_bilinear(social, game, cfg);
      // The verdict is structural here; measure the actual float noise too.
      const WitnessResult measured = find_witness(social, game, budget, seeds.next());
      if (measured.deviation > summary.forward.worst_deviation) {
        summary.forward.worst_deviation = measured.deviation;
      }
      if (verdict.passed && measured.deviation <= cfg.tolerance) {
        ++summary.forward.consistent;
      }
    }

    // EU game utility minus a bilinear social utility leaves an EU selfish
    // utility.
    {
      const UtilitySpec game_u = UtilitySpec::eu_table(
          random_table(game.num_rows(), game.num_cols(), rng));
      const UtilitySpec social = UtilitySpec::eu_table(
          random_table(game.num_rows(), game.num_cols(), rng));
      const UtilitySpec selfish = UtilitySpec::difference(game_u, social);
      const BilinearityVerdict verdict = check_vnm(selfish, game, cfg);
      const WitnessResult measured = find_witness(selfish, game, budget, seeds.next());
      if (measured.deviation > summary.backward.worst_deviation) {
        summary.backward.worst_deviation = measured.deviation;
      }
      if (verdict.passed && measured.deviation <= cfg.tolerance) {
        ++summary.backward.consistent;
      }
    }
  }
  return summary;
}

}  // namespace socpref
