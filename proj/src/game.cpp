#include "socpref/game.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace socpref {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw EmptyVector("matrix needs at least one row and one column");
  }
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw DimensionMismatch("ragged matrix: row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(m.cols_));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

double Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw IndexOutOfRange("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range for " + std::to_string(rows_) + "x" +
                          std::to_string(cols_));
  }
  return (*this)(i, j);
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out[i][j] = (*this)(i, j);
    }
  }
  return out;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

MixedStrategy make_mixed(std::span<const double> weights) {
  if (weights.empty()) {
    throw EmptyVector("mixed strategy needs at least one weight");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0 || std::isnan(w)) {
      throw NegativeWeight("mixed strategy weights must be non-negative");
    }
    sum += w;
  }
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw ZeroMass("mixed strategy weights must have positive finite mass");
  }
  std::vector<double> probs(weights.begin(), weights.end());
  for (double& p : probs) {
    p /= sum;
  }
  return MixedStrategy(std::move(probs));
}

MixedStrategy make_mixed(std::initializer_list<double> weights) {
  return make_mixed(std::span<const double>(weights.begin(), weights.size()));
}

MixedStrategy MixedStrategy::pure(std::size_t size, std::size_t index) {
  if (index >= size) {
    throw IndexOutOfRange("pure strategy index " + std::to_string(index) +
                          " out of range for size " + std::to_string(size));
  }
  std::vector<double> probs(size, 0.0);
  probs[index] = 1.0;
  return make_mixed(probs);
}

MixedStrategy MixedStrategy::uniform(std::size_t size) {
  if (size == 0) {
    throw EmptyVector("mixed strategy needs at least one entry");
  }
  return make_mixed(std::vector<double>(size, 1.0));
}

MixedStrategy mix(const MixedStrategy& a, const MixedStrategy& b, double lambda) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("cannot mix strategies of sizes " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  }
  if (lambda < 0.0 || lambda > 1.0 || std::isnan(lambda)) {
    throw InvalidArgument("mixing weight must lie in [0, 1]");
  }
  std::vector<double> probs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    probs[i] = lambda * a[i] + (1.0 - lambda) * b[i];
  }
  return make_mixed(probs);
}

namespace {

void require_distinct_nonempty(const std::vector<std::string>& labels, const char* side) {
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw InvalidLabel(std::string(side) + " labels must be nonempty");
    }
    if (!seen.insert(label).second) {
      throw InvalidLabel(std::string(side) + " label \"" + label + "\" appears twice");
    }
  }
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionMismatch(std::string(name) + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                            "x" + std::to_string(cols));
  }
}

}  // namespace

Game::Game(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
           Matrix alice_payoffs, Matrix bob_payoffs, std::optional<Matrix> bob_utils)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      alice_payoffs_(std::move(alice_payoffs)),
      bob_payoffs_(std::move(bob_payoffs)),
      bob_utils_(std::move(bob_utils)) {
  if (row_labels_.empty() || col_labels_.empty()) {
    throw EmptyVector("game needs at least one strategy per side");
  }
  require_shape(alice_payoffs_, row_labels_.size(), col_labels_.size(), "m1");
  require_shape(bob_payoffs_, row_labels_.size(), col_labels_.size(), "m2");
  if (bob_utils_) {
    require_shape(*bob_utils_, row_labels_.size(), col_labels_.size(), "v");
  }
  if (!alice_payoffs_.all_finite() || !bob_payoffs_.all_finite() ||
      (bob_utils_ && !bob_utils_->all_finite())) {
    throw NonFiniteValue("payoff matrices must contain only finite values");
  }
  require_distinct_nonempty(row_labels_, "row");
  require_distinct_nonempty(col_labels_, "column");
}

Profile pure_profile(const Game& game, std::size_t i, std::size_t j) {
  if (i >= game.num_rows() || j >= game.num_cols()) {
    throw IndexOutOfRange("pure profile (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range for " + std::to_string(game.num_rows()) + "x" +
                          std::to_string(game.num_cols()) + " game");
  }
  return Profile{MixedStrategy::pure(game.num_rows(), i), MixedStrategy::pure(game.num_cols(), j)};
}

Profile uniform_profile(const Game& game) {
  return Profile{MixedStrategy::uniform(game.num_rows()), MixedStrategy::uniform(game.num_cols())};
}

ExpectedPayoffs expected_material_payoff(const Game& game, const Profile& profile) {
  if (profile.row.size() != game.num_rows() || profile.col.size() != game.num_cols()) {
    throw DimensionMismatch("profile is " + std::to_string(profile.row.size()) + "x" +
                            std::to_string(profile.col.size()) + ", game is " +
                            std::to_string(game.num_rows()) + "x" +
                            std::to_string(game.num_cols()));
  }
  ExpectedPayoffs out;
  for (std::size_t i = 0; i < game.num_rows(); ++i) {
    double alice_row = 0.0;
    double bob_row = 0.0;
    for (std::size_t j = 0; j < game.num_cols(); ++j) {
      alice_row += profile.col[j] * game.alice_payoffs()(i, j);
      bob_row += profile.col[j] * game.bob_payoffs()(i, j);
    }
    out.alice += profile.row[i] * alice_row;
    out.bob += profile.row[i] * bob_row;
  }
  return out;
}

}  // namespace socpref
