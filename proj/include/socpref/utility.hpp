#pragma once

#include <memory>
#include <variant>

#include "socpref/game.hpp"
#include "socpref/social.hpp"

namespace socpref {

/// Utils assigned to every pure strategy profile of a game.
class UtilityTable {
 public:
  explicit UtilityTable(Matrix values);

  const Matrix& values() const { return values_; }
  std::size_t rows() const { return values_.rows(); }
  std::size_t cols() const { return values_.cols(); }

  bool operator==(const UtilityTable&) const = default;

 private:
  Matrix values_;
};

/// Probability-weighted double sum of the table over the profile:
/// sum_i sum_j row[i] * col[j] * table[i][j]. Throws DimensionMismatch.
double multilinear_extension(const UtilityTable& table, const Profile& profile);

/// An evaluable utility functional over mixed-strategy profiles, represented
/// as an immutable expression tree. Leaves are either expected-utility tables
/// (bilinear by construction) or social functionals (arbitrary); interior
/// nodes compose by positive affine maps, sums and differences. Copies are
/// cheap and share nodes.
class UtilitySpec {
 public:
  struct EuTableNode {
    UtilityTable table;
  };
  struct SocialNode {
    SocialFunctional functional;
  };
  struct AffineNode {
    std::shared_ptr<const UtilitySpec> base;
    double scale;
    double shift;
  };
  struct SumNode {
    std::shared_ptr<const UtilitySpec> left;
    std::shared_ptr<const UtilitySpec> right;
  };
  struct DifferenceNode {
    std::shared_ptr<const UtilitySpec> left;
    std::shared_ptr<const UtilitySpec> right;
  };
  using Node = std::variant<EuTableNode, SocialNode, AffineNode, SumNode, DifferenceNode>;

  static UtilitySpec eu_table(UtilityTable table);
  static UtilitySpec eu_table(Matrix values);
  static UtilitySpec social(SocialFunctional functional);
  /// Throws NonPositiveScale unless scale > 0.
  static UtilitySpec affine(UtilitySpec base, double scale, double shift);
  static UtilitySpec sum(UtilitySpec left, UtilitySpec right);
  static UtilitySpec difference(UtilitySpec left, UtilitySpec right);

  /// True when every leaf is an expected-utility table, so the whole tree is
  /// bilinear by construction. An affine shift preserves bilinearity here
  /// because probabilities sum to one.
  bool structurally_bilinear() const;

  const Node& node() const { return *node_; }

 private:
  explicit UtilitySpec(Node node);
  std::shared_ptr<const Node> node_;
};

/// Value of the functional at a profile, in utils. Throws DimensionMismatch.
double evaluate(const UtilitySpec& spec, const Game& game, const Profile& profile);

/// Materializes the functional's values at all pure profiles.
UtilityTable restrict_to_pure(const UtilitySpec& spec, const Game& game);

/// Social utility induced by a game utility and a selfish utility: their
/// pointwise difference.
UtilitySpec induced_social(const UtilitySpec& game_utility, const UtilitySpec& selfish_utility);

}  // namespace socpref
