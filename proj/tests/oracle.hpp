// Test-only reference computations, written independently of the library's
// evaluation paths: plain column-major double sums with no row factoring.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "socpref/game.hpp"
#include "socpref/utility.hpp"

namespace oracle {

// Direct sum of row[i] * col[j] * values[i][j], accumulated column-major.
// The library factors the sum by rows, so the two paths share no code and
// associate the additions differently.
inline double double_sum(const std::vector<std::vector<double>>& values,
                         const std::vector<double>& row, const std::vector<double>& col) {
  double total = 0.0;
  for (std::size_t j = 0; j < col.size(); ++j) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      total += row[i] * col[j] * values[i][j];
    }
  }
  return total;
}

inline double double_sum(const socpref::Matrix& values, const socpref::Profile& p) {
  return double_sum(values.to_rows(), p.row.probs(), p.col.probs());
}

struct PayoffPair {
  double alice;
  double bob;
};

inline PayoffPair expected_payoffs(const socpref::Game& game, const socpref::Profile& p) {
  return PayoffPair{double_sum(game.alice_payoffs(), p), double_sum(game.bob_payoffs(), p)};
}

// Step inequality aversion applied by hand to reference payoffs.
inline double step_social(const socpref::Game& game, const socpref::Profile& p, double penalty,
                          double equality_tolerance) {
  const PayoffPair m = expected_payoffs(game, p);
  return std::fabs(m.alice - m.bob) > equality_tolerance ? -penalty : 0.0;
}

}  // namespace oracle
