#pragma once

#include <variant>

#include "socpref/game.hpp"

namespace socpref {

/// Flat disutility `penalty` whenever the two expected material payoffs
/// differ by more than `equality_tolerance`, zero otherwise. The tolerance is
/// a stored parameter so the discontinuous comparison stays deterministic
/// under floating point.
struct StepInequalityAversion {
  double penalty = 1.0;
  double equality_tolerance = 1e-9;
};

/// Piecewise-linear inequality aversion over expected material payoffs:
/// alpha weighs disadvantageous inequality, beta advantageous inequality.
struct LinearInequalityAversion {
  double alpha = 0.0;
  double beta = 0.0;
};

struct ZeroSocial {};

/// A concrete social-preference functional. Evaluates on the pair of
/// expected material payoffs, so its value at a mixed profile generally
/// differs from the mix of its values at pure profiles.
class SocialFunctional {
 public:
  using Node = std::variant<StepInequalityAversion, LinearInequalityAversion, ZeroSocial>;

  static SocialFunctional step(double penalty, double equality_tolerance = 1e-9);
  static SocialFunctional linear(double alpha, double beta);
  static SocialFunctional zero();

  const Node& node() const { return node_; }

 private:
  explicit SocialFunctional(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Social utility (negative for disutility) at a profile.
/// Throws DimensionMismatch.
double eval_social(const SocialFunctional& functional, const Game& game,
                   const Profile& profile);

}  // namespace socpref
