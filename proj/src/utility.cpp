#include "socpref/utility.hpp"

#include <cmath>

namespace socpref {

UtilityTable::UtilityTable(Matrix values) : values_(std::move(values)) {
  if (values_.rows() == 0 || values_.cols() == 0) {
    throw EmptyVector("utility table needs at least one row and one column");
  }
  if (!values_.all_finite()) {
    throw NonFiniteValue("utility table must contain only finite values");
  }
}

double multilinear_extension(const UtilityTable& table, const Profile& profile) {
  if (profile.row.size() != table.rows() || profile.col.size() != table.cols()) {
    throw DimensionMismatch("profile is " + std::to_string(profile.row.size()) + "x" +
                            std::to_string(profile.col.size()) + ", table is " +
                            std::to_string(table.rows()) + "x" + std::to_string(table.cols()));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < table.cols(); ++j) {
      row_sum += profile.col[j] * table.values()(i, j);
    }
    total += profile.row[i] * row_sum;
  }
  return total;
}

UtilitySpec::UtilitySpec(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

UtilitySpec UtilitySpec::eu_table(UtilityTable table) {
  return UtilitySpec(EuTableNode{std::move(table)});
}

UtilitySpec UtilitySpec::eu_table(Matrix values) {
  return eu_table(UtilityTable(std::move(values)));
}

UtilitySpec UtilitySpec::social(SocialFunctional functional) {
  return UtilitySpec(SocialNode{std::move(functional)});
}

UtilitySpec UtilitySpec::affine(UtilitySpec base, double scale, double shift) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw NonPositiveScale("affine scale must be positive, got " + std::to_string(scale));
  }
  if (!std::isfinite(shift)) {
    throw NonFiniteValue("affine shift must be finite");
  }
  return UtilitySpec(AffineNode{std::make_shared<const UtilitySpec>(std::move(base)), scale, shift});
}

UtilitySpec UtilitySpec::sum(UtilitySpec left, UtilitySpec right) {
  return UtilitySpec(SumNode{std::make_shared<const UtilitySpec>(std::move(left)),
                             std::make_shared<const UtilitySpec>(std::move(right))});
}

UtilitySpec UtilitySpec::difference(UtilitySpec left, UtilitySpec right) {
  return UtilitySpec(DifferenceNode{std::make_shared<const UtilitySpec>(std::move(left)),
                                    std::make_shared<const UtilitySpec>(std::move(right))});
}

bool UtilitySpec::structurally_bilinear() const {
  struct Visitor {
    bool operator()(const EuTableNode&) const { return true; }
    bool operator()(const SocialNode&) const { return false; }
    bool operator()(const AffineNode& n) const { return n.base->structurally_bilinear(); }
    bool operator()(const SumNode& n) const {
      return n.left->structurally_bilinear() && n.right->structurally_bilinear();
    }
    bool operator()(const DifferenceNode& n) const {
      return n.left->structurally_bilinear() && n.right->structurally_bilinear();
    }
  };
  return std::visit(Visitor{}, *node_);
}

double evaluate(const UtilitySpec& spec, const Game& game, const Profile& profile) {
  struct Visitor {
    const Game& game;
    const Profile& profile;

    double operator()(const UtilitySpec::EuTableNode& n) const {
      if (n.table.rows() != game.num_rows() || n.table.cols() != game.num_cols()) {
        throw DimensionMismatch("utility table is " + std::to_string(n.table.rows()) + "x" +
                                std::to_string(n.table.cols()) + ", game is " +
                                std::to_string(game.num_rows()) + "x" +
                                std::to_string(game.num_cols()));
      }
      return multilinear_extension(n.table, profile);
    }
    double operator()(const UtilitySpec::SocialNode& n) const {
      return eval_social(n.functional, game, profile);
    }
    double operator()(const UtilitySpec::AffineNode& n) const {
      return n.scale * evaluate(*n.base, game, profile) + n.shift;
    }
    double operator()(const UtilitySpec::SumNode& n) const {
      return evaluate(*n.left, game, profile) + evaluate(*n.right, game, profile);
    }
    double operator()(const UtilitySpec::DifferenceNode& n) const {
      return evaluate(*n.left, game, profile) - evaluate(*n.right, game, profile);
    }
  };
  return std::visit(Visitor{game, profile}, spec.node());
}

UtilityTable restrict_to_pure(const UtilitySpec& spec, const Game& game) {
  Matrix values(game.num_rows(), game.num_cols());
  for (std::size_t i = 0; i < game.num_rows(); ++i) {
    for (std::size_t j = 0; j < game.num_cols(); ++j) {
      values(i, j) = evaluate(spec, game, pure_profile(game, i, j));
    }
  }
  return UtilityTable(std::move(values));
}

UtilitySpec induced_social(const UtilitySpec& game_utility, const UtilitySpec& selfish_utility) {
  return UtilitySpec::difference(game_utility, selfish_utility);
}

}  // namespace socpref
