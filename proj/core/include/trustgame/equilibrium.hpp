#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trustgame/game.hpp"

namespace trustgame {

enum class EquilibriumKind {
  kZeroAlpha,  // sensor adopts the report, attacker reports y_attack
  kMixed,      // interior fusion weight
};

struct Equilibrium {
  EquilibriumKind kind;
  double alpha_star = 0.0;  // 0 for kZeroAlpha, in (0, 1) for kMixed
  Vec y_bar_star;
  /// Ray coordinate r with y_bar = zeta + r (y_attack - zeta); mixed only.
  std::optional<double> ray_coordinate;
};

/// Existence of the fully trusting equilibrium (alpha = 0, report equal to
/// y_attack): holds iff (y_attack - mu)'(y_hat - mu) >= ||y_attack - mu||^2.
bool zero_equilibrium_exists(const GameParams& p);

/// Full diagnostics of the interior fixed-point solve.  Interior equilibria
/// lie on the ray through y_attack from zeta; the ray coordinate r solves
/// a r^2 + b r + c = 0 with coefficients built from z_hat = y_hat - zeta,
/// z_a = y_attack - zeta and delta = zeta - mu.  Every real root is kept as
/// a candidate together with the reason it was accepted or dropped.
struct MixedEquilibriumAnalysis {
  double a = 0.0, b = 0.0, c = 0.0;
  /// Set when the quadratic coefficient vanished and the equation was
  /// solved as linear (or had no root at all).
  bool linear = false;
  /// b^2 - 4ac; present only on the genuine quadratic path.
  std::optional<double> discriminant;

  struct Candidate {
    double r = 0.0;
    Vec y_bar;
    double alpha = 0.0;  // sensor best response at y_bar
    bool accepted = false;
    std::string reject_reason;  // empty when accepted
  };
  std::vector<Candidate> candidates;

  /// Candidates that survived validation: interior weight and attacker
  /// fixed point.
  std::vector<Equilibrium> equilibria;
};

/// Solves and validates the interior fixed-point equation.
///
/// A candidate root is accepted when the sensor's best response at its
/// report is strictly interior (inside (tau_one, 1 - tau_one)) and the
/// attacker's best response to that weight reproduces the report to within
/// 1e-8 relative tolerance.  Throws DegenerateGame when y_hat equals zeta,
/// which collapses the equation.
MixedEquilibriumAnalysis analyze_mixed_equilibria(
    const GameParams& p, double tau_one = kDefaultTauOne);

/// Validated interior equilibria only.
std::vector<Equilibrium> mixed_equilibria(const GameParams& p,
                                          double tau_one = kDefaultTauOne);

/// Numerical check that a candidate is a Nash point: the sensor must not
/// improve on a uniform weight grid, and the attacker must not improve on
/// seeded random report perturbations of norm up to 1 + ||y_bar_star||.
/// Improvements smaller than tol are ignored.
bool verify_nash(const Equilibrium& candidate, const GameParams& p,
                 int alpha_grid = 1001, int perturbations = 200,
                 std::uint64_t seed = 0, double tol = 1e-8);

}  // namespace trustgame
