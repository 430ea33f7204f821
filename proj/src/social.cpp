#include "socpref/social.hpp"

#include <cmath>

namespace socpref {

SocialFunctional SocialFunctional::step(double penalty, double equality_tolerance) {
  if (penalty < 0.0 || !std::isfinite(penalty)) {
    throw InvalidArgument("step penalty must be finite and non-negative");
  }
  if (!(equality_tolerance > 0.0) || !std::isfinite(equality_tolerance)) {
    throw InvalidArgument("equality tolerance must be finite and positive");
  }
  return SocialFunctional(StepInequalityAversion{penalty, equality_tolerance});
}

SocialFunctional SocialFunctional::linear(double alpha, double beta) {
  if (alpha < 0.0 || beta < 0.0 || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidArgument("inequality weights must be finite and non-negative");
  }
  return SocialFunctional(LinearInequalityAversion{alpha, beta});
}

SocialFunctional SocialFunctional::zero() { return SocialFunctional(ZeroSocial{}); }

double eval_social(const SocialFunctional& functional, const Game& game,
                   const Profile& profile) {
  const ExpectedPayoffs payoffs = expected_material_payoff(game, profile);
  struct Visitor {
    const ExpectedPayoffs& payoffs;

    double operator()(const StepInequalityAversion& f) const {
      return std::fabs(payoffs.alice - payoffs.bob) > f.equality_tolerance ? -f.penalty : 0.0;
    }
    double operator()(const LinearInequalityAversion& f) const {
      return -f.alpha * std::max(payoffs.bob - payoffs.alice, 0.0) -
             f.beta * std::max(payoffs.alice - payoffs.bob, 0.0);
    }
    double operator()(const ZeroSocial&) const { return 0.0; }
  };
  return std::visit(Visitor{payoffs}, functional.node());
}

}  // namespace socpref
