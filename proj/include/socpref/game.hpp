#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "socpref/errors.hpp"

namespace socpref {

/// Dense row-major matrix of doubles. Small by design: games in this library
/// have a handful of strategies per side.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  /// Builds from nested rows. Throws DimensionMismatch on ragged input and
  /// EmptyVector when there are no rows or no columns.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  /// Bounds-checked read access.
  double at(std::size_t i, std::size_t j) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::vector<std::vector<double>> to_rows() const;
  bool all_finite() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// A point on a probability simplex. Entries are non-negative and sum to one
/// within 1e-12; construction normalizes the given weights.
class MixedStrategy {
 public:
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  /// Unit mass on a single strategy.
  static MixedStrategy pure(std::size_t size, std::size_t index);
  /// Equal mass on every strategy.
  static MixedStrategy uniform(std::size_t size);

  bool operator==(const MixedStrategy&) const = default;

  friend MixedStrategy make_mixed(std::span<const double> weights);

 private:
  explicit MixedStrategy(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

/// Normalizes non-negative weights into a MixedStrategy.
/// Throws EmptyVector, NegativeWeight or ZeroMass.
MixedStrategy make_mixed(std::span<const double> weights);
MixedStrategy make_mixed(std::initializer_list<double> weights);

/// Convex combination lambda * a + (1 - lambda) * b, lambda in [0, 1].
MixedStrategy mix(const MixedStrategy& a, const MixedStrategy& b, double lambda);

/// A pair of mixed strategies, one per side. Length conformance with a game
/// is checked wherever the profile is evaluated.
struct Profile {
  MixedStrategy row;
  MixedStrategy col;

  bool operator==(const Profile&) const = default;
};

/// A finite two-player game in mixed extension: strategy labels for the row
/// player (Alice) and the column player (Bob), material payoff matrices for
/// both, and optionally Bob's util matrix. The same data read without Bob's
/// utils is the matched single-player decision problem against chance, which
/// is why no separate type exists for it.
class Game {
 public:
  Game(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
       Matrix alice_payoffs, Matrix bob_payoffs,
       std::optional<Matrix> bob_utils = std::nullopt);

  std::size_t num_rows() const { return alice_payoffs_.rows(); }
  std::size_t num_cols() const { return alice_payoffs_.cols(); }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  const Matrix& alice_payoffs() const { return alice_payoffs_; }
  const Matrix& bob_payoffs() const { return bob_payoffs_; }

  /// Bob's util matrix. Stored and serialized verbatim; no operation in this
  /// library consumes it.
  const std::optional<Matrix>& bob_utils() const { return bob_utils_; }

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  Matrix alice_payoffs_;
  Matrix bob_payoffs_;
  std::optional<Matrix> bob_utils_;
};

/// Profile with unit mass on row i and column j. Throws IndexOutOfRange.
Profile pure_profile(const Game& game, std::size_t i, std::size_t j);

/// Uniform mixing on both sides (the centroid-centroid profile).
Profile uniform_profile(const Game& game);

struct ExpectedPayoffs {
  double alice = 0.0;
  double bob = 0.0;
};

/// Expected material payoffs of both players at a profile; bilinear in the
/// two strategies. Throws DimensionMismatch.
ExpectedPayoffs expected_material_payoff(const Game& game, const Profile& profile);

}  // namespace socpref
