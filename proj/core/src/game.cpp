#include "trustgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trustgame {

FusionWeight::FusionWeight(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    throw std::invalid_argument("FusionWeight: value must lie in [0, 1]");
  }
}

const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::kTrustComputer: return "TrustComputer";
    case RegionLabel::kMixed: return "Mixed";
    case RegionLabel::kTrustSelf: return "TrustSelf";
  }
  return "?";
}

void GameParams::validate() const {
  const auto k = y_hat.size();
  if (k < 1) throw PreconditionViolated("GameParams: dimension must be >= 1");
  if (mu.size() != k || zeta.size() != k || y_attack.size() != k) {
    throw PreconditionViolated("GameParams: vectors must share one dimension");
  }
  if (!y_hat.allFinite() || !mu.allFinite() || !zeta.allFinite() ||
      !y_attack.allFinite()) {
    throw PreconditionViolated("GameParams: entries must be finite");
  }
  if (!std::isfinite(var_y) || var_y < 0.0 || !std::isfinite(var_y_hat) ||
      var_y_hat < 0.0) {
    throw PreconditionViolated(
        "GameParams: variance offsets must be finite and non-negative");
  }
}

Vec fuse(FusionWeight alpha, const Vec& y_hat, const Vec& y_bar) {
  const double a = alpha.value();
  return a * y_hat + (1.0 - a) * y_bar;
}

double cost_defender(FusionWeight alpha, const Vec& y_bar,
                     const GameParams& p) {
  const double a = alpha.value();
  // Expected squared error of the fused value around the true mean.
  return (a * (p.y_hat - y_bar) + y_bar - p.mu).squaredNorm() + p.var_y;
}

double cost_attacker(FusionWeight alpha, const Vec& y_bar,
                     const GameParams& p) {
  const double a = alpha.value();
  return ((1.0 - a) * y_bar + a * p.zeta - p.y_attack).squaredNorm() +
         a * a * p.var_y_hat;
}

FusionWeight best_response_sensor(const Vec& y_bar, const GameParams& p) {
  // The defender cost is a convex parabola in alpha; the branch tests are
  // its one-sided derivatives at the interval ends.  Branch order is part
  // of the contract: adopt-the-report wins ties, then keep-own-estimate.
  const Vec to_hat = p.y_hat - y_bar;
  if ((y_bar - p.mu).dot(to_hat) >= 0.0) return FusionWeight(0.0);
  if ((p.y_hat - p.mu).dot(y_bar - p.y_hat) >= 0.0) return FusionWeight(1.0);
  const double a =
      (y_bar - p.mu).dot(y_bar - p.y_hat) / (y_bar - p.y_hat).squaredNorm();
  return FusionWeight(std::clamp(a, 0.0, 1.0));
}

RegionLabel classify_region(const Vec& y_bar, const GameParams& p) {
  const Vec to_hat = p.y_hat - y_bar;
  if ((y_bar - p.mu).dot(to_hat) >= 0.0) return RegionLabel::kTrustComputer;
  if ((p.y_hat - p.mu).dot(y_bar - p.y_hat) >= 0.0) return RegionLabel::kTrustSelf;
  return RegionLabel::kMixed;
}

Vec best_response_attacker(FusionWeight alpha, const GameParams& p,
                           double tau_one) {
  const double a = alpha.value();
  if (a >= 1.0 - tau_one) {
    throw AlphaSaturated("best_response_attacker: weight saturated at one");
  }
  return (p.y_attack - a * p.zeta) / (1.0 - a);
}

}  // namespace trustgame
