#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trustgame/game.hpp"

namespace trustgame {

/// Stopping rules for iterated best response.
struct IbrConfig {
  int max_iter = 100;
  /// Cauchy tolerance on successive fusion weights.
  double alpha_tol = 1e-9;
  /// Saturation threshold: a weight >= 1 - tau_one ends the run.
  double tau_one = kDefaultTauOne;
  /// Distance of the report from zeta past which the run counts as blown up.
  double divergence_norm = 1e12;
  /// Extra stability gate on the report sequence: convergence is declared
  /// only if the report also settled, ||y_i - y_{i-1}|| within this relative
  /// tolerance of (1 + ||y_i||).  Guards against weight stalls near
  /// saturation where the report still moves by O(1) per step.
  double report_rel_tol = 1e-6;
};

enum class IbrOutcomeKind {
  kConvergedZero,         // weights settled at exactly zero
  kConvergedMixed,        // weights settled at an interior value
  kExitAlphaOne,          // sensor saturated after at least one exchange
  kTrivialInit,           // sensor saturated immediately on the initial report
  kDiverged,              // report left the divergence ball
  kMaxIterNoConvergence,  // budget exhausted without a verdict
};

const char* to_string(IbrOutcomeKind kind);

/// True for the two settled outcomes.
bool is_converged(IbrOutcomeKind kind);

struct IbrOutcome {
  IbrOutcomeKind kind;
  /// Present only for the settled outcomes.
  std::optional<double> alpha_star;
  std::optional<Vec> y_bar_star;
};

/// One exchange: the sensor's weight for this iteration and the attacker's
/// reply to it.  The reply is absent when the run ended at saturation
/// before the attacker moved.
struct IbrStep {
  double alpha;
  std::optional<Vec> y_bar;
};

struct IbrTrace {
  Vec initial_y_bar;
  std::vector<IbrStep> steps;  // never empty
  IbrOutcome outcome;
};

/// Alternating best-response play from an initial report.
///
/// Iteration i: the sensor best-responds to the previous report; if the
/// weight saturates the run ends (kTrivialInit on the very first iteration,
/// kExitAlphaOne later, step recorded without a reply).  Otherwise the
/// attacker best-responds to that weight.  From the second iteration on,
/// successive weights within alpha_tol of each other, with the report also
/// settled, end the run as kConvergedZero (weight exactly zero) or
/// kConvergedMixed.  A report farther than divergence_norm from zeta ends
/// it as kDiverged.  Exhausting max_iter gives kMaxIterNoConvergence.
IbrTrace ibr_run(const GameParams& p, const Vec& y_bar_0,
                 const IbrConfig& cfg = {});

/// True when the sensor's reply to y_bar_0 stays below saturation, so a run
/// from there would not end as kTrivialInit.
bool is_nontrivial_init(const GameParams& p, const Vec& y_bar_0,
                        double tau_one = kDefaultTauOne);

/// Deterministic sample of non-trivial initial reports, drawn uniformly
/// from the ball of the given radius around mu, rejecting trivial draws.
/// Throws SamplingExhausted after 1000 consecutive rejections for any
/// single point.
std::vector<Vec> sample_initial_conditions(const GameParams& p, int count,
                                           double radius, std::uint64_t seed);

}  // namespace trustgame
