#pragma once

#include "trustgame/geometry.hpp"

namespace trustgame {

/// Weights at least this close to one count as saturated: the attacker's
/// best response grows without bound there.
inline constexpr double kDefaultTauOne = 1e-9;

/// The sensor's fusion weight: the fused value is
/// alpha * (own estimate) + (1 - alpha) * (reported value).
/// alpha = 1 ignores the report entirely, alpha = 0 adopts it entirely.
class FusionWeight {
 public:
  FusionWeight() = default;

  /// Throws std::invalid_argument outside [0, 1] or on non-finite input.
  explicit FusionWeight(double value);

  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Which branch of the sensor's best response a report lands on.
enum class RegionLabel {
  kTrustComputer,  // alpha* = 0: adopt the report
  kMixed,          // alpha* strictly between 0 and 1
  kTrustSelf,      // alpha* = 1: keep the own estimate
};

const char* to_string(RegionLabel label);

/// Immutable data of one game instance.
///
/// All vectors share one dimension k >= 1 and must be finite.  The two
/// variance constants are additive cost offsets; they never move a best
/// response, only the attained cost values.
struct GameParams {
  Vec y_hat;     ///< sensor's own estimate of the quantity
  Vec mu;        ///< mean of the true quantity
  Vec zeta;      ///< mean of the sensor estimate under the attacker's model
  Vec y_attack;  ///< value the attacker wants the sensor to adopt
  double var_y = 0.0;      ///< defender cost offset, E||y||^2 - ||mu||^2
  double var_y_hat = 0.0;  ///< attacker cost offset, E||yhat||^2 - ||zeta||^2

  int dim() const { return static_cast<int>(y_hat.size()); }

  /// Throws PreconditionViolated on mismatched dimensions, empty vectors,
  /// non-finite entries, or negative variance offsets.
  void validate() const;
};

/// Fused value alpha * y_hat + (1 - alpha) * y_bar.
Vec fuse(FusionWeight alpha, const Vec& y_hat, const Vec& y_bar);

/// Expected defender loss for weight alpha against report y_bar:
/// squared distance of the fused value from the true mean, plus the
/// variance offset.
double cost_defender(FusionWeight alpha, const Vec& y_bar, const GameParams& p);

/// Expected attacker loss for report y_bar against weight alpha: squared
/// distance of the expected fused value from the attack target, plus
/// alpha^2 times the variance offset.
double cost_attacker(FusionWeight alpha, const Vec& y_bar, const GameParams& p);

/// Exact minimizer of cost_defender over alpha in [0, 1].
///
/// Tie-breaks are fixed: the boundary test for alpha = 0 runs first, then
/// the test for alpha = 1, then the interior formula (clamped).  The result
/// is continuous in y_bar, including across region boundaries and at
/// y_bar == y_hat (which lands in the alpha = 0 branch).
FusionWeight best_response_sensor(const Vec& y_bar, const GameParams& p);

/// Region of the report space the sensor's best response falls in, using
/// the same branch order as best_response_sensor.
RegionLabel classify_region(const Vec& y_bar, const GameParams& p);

/// Exact minimizer of cost_attacker over reports for a fixed weight:
/// (y_attack - alpha * zeta) / (1 - alpha).
///
/// Throws AlphaSaturated when alpha >= 1 - tau_one: the minimizer diverges
/// as the sensor stops listening.
Vec best_response_attacker(FusionWeight alpha, const GameParams& p,
                           double tau_one = kDefaultTauOne);

}  // namespace trustgame
