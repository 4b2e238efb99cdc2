#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trustgame/game.hpp"

namespace trustgame {

/// Projection of the true mean onto the affine hull of
/// {y_hat, zeta, y_attack}.  The analytic convergence tests are stated in
/// terms of this in-hull surrogate of mu; when the hull spans the whole
/// space it is mu itself.
Vec projected_mean(const GameParams& p);

/// Joint evaluation of the analytic convergence tests for one instance.
///
/// Each test carries a signed slack; the boolean is the sign test at slack
/// zero, and consumers that want a tolerance band re-apply the sign test to
/// the slack themselves.  Conventions:
///   zero_case   holds iff zero_slack  >= 0
///   weak_case   holds iff weak_slack  <  0   (strict)
///   mixed_case  holds iff mixed_slack >= 0
///   suf1        holds iff suf1_slack  <= 0
///   suf2        holds iff suf2_slack  >= 0
struct PredicateReport {
  // Necessary side: convergence from some initial report requires
  // zero_case or (weak_case and mixed_case).
  bool zero_case = false;
  bool weak_case = false;
  bool mixed_case = false;
  /// y_attack coincides with y_hat: the boundary line for mixed_case is
  /// undefined.  mixed_slack is NaN and mixed_case false; the composite is
  /// unaffected because weak_case is false there too.
  bool mixed_case_indeterminate = false;
  bool weak_necessary = false;  // zero_case || (weak_case && mixed_case)

  // Sufficient side: suf1 && suf2 guarantees convergence from every
  // non-trivial initial report.
  bool suf1 = false;
  bool suf2 = false;
  bool strong_sufficient = false;

  /// mu, y_hat, y_attack numerically collinear (reported because the
  /// equal-means reduced forms are derived under that layout).
  bool collinear = false;

  double zero_slack = 0.0;
  double weak_slack = 0.0;
  double mixed_slack = 0.0;
  double suf1_slack = 0.0;
  double suf2_slack = 0.0;
};

/// General-means evaluation (mu and zeta may differ).  All geometry runs
/// against the projected mean.
PredicateReport evaluate_predicates(const GameParams& p);

/// Reduced forms valid when zeta == mu; throws ParamsMismatch otherwise.
/// The booleans agree with evaluate_predicates on the composite flags; the
/// raw suf2 slack may differ (the reduced form drops one of the two
/// projection bounds) but only on instances where suf1 already fails.
PredicateReport evaluate_predicates_equal_means(const GameParams& p);

/// Relative attacker-model mismatch budget.
struct MismatchBudget {
  MismatchBudget() = default;
  /// Throws std::invalid_argument outside [0, 1].
  explicit MismatchBudget(double epsilon);
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_ = 0.0;
};

/// Whole-space mismatch bound:
/// ||zeta - mu|| <= (eps / (1 + eps)) ||y_hat - mu||.
bool mismatch_within_budget(const GameParams& p, const MismatchBudget& budget);

/// In-hull mismatch bound: ||zeta - muhat|| <= eps ||y_hat - muhat|| + slack
/// with muhat = projected_mean(p).  Requires mismatch_within_budget (throws
/// PreconditionViolated otherwise); the whole-space bound implies the
/// in-hull bound, so with slack 0 this returns true on valid inputs and the
/// slack parameter exists for probing the margin.
bool projected_mismatch_within_budget(const GameParams& p,
                                      const MismatchBudget& budget,
                                      double slack = 0.0);

/// Sampled set of candidate attacker-model means: the center plus draws
/// from the ball (or circle) of the given radius around it.
struct ZetaSet {
  Vec center;
  double radius = 0.0;
  int sample_count = 100;
  std::uint64_t seed = 0;
  bool on_circle = false;

  /// Deterministic materialization; radius 0 gives just the center.
  std::vector<Vec> samples() const;
};

/// Region predicate in the attack-target space obtained by quantifying a
/// per-zeta analytic test over a fixed sample of zeta values.
class ZetaRegionPredicate {
 public:
  enum class Mode {
    /// Union over samples of the necessary-condition region: a point is in
    /// iff the necessary test holds for at least one sampled zeta.  Points
    /// outside cannot converge for any zeta in the sample.
    kUnionNecessary,
    /// Intersection over samples of the sufficient-condition region: a
    /// point is in iff the sufficient test holds for every sampled zeta.
    /// Points inside converge no matter which sampled zeta is real.
    kIntersectionSufficient,
  };

  /// base supplies y_hat, mu and cost offsets; its zeta and y_attack are
  /// ignored and replaced per query.
  ZetaRegionPredicate(Mode mode, GameParams base, std::vector<Vec> zeta_samples);

  bool contains(const Vec& y_attack) const;

  Mode mode() const { return mode_; }
  const std::vector<Vec>& zeta_samples() const { return zeta_samples_; }

 private:
  Mode mode_;
  GameParams base_;
  std::vector<Vec> zeta_samples_;
};

ZetaRegionPredicate necessary_region_union(const GameParams& base,
                                           const ZetaSet& zeta_set);
ZetaRegionPredicate sufficient_region_intersection(const GameParams& base,
                                                   const ZetaSet& zeta_set);

/// Predicates for a ladder of radii sharing one draw stream: the sample for
/// a radius contains every smaller radius's sample (same unit draws,
/// rescaled) plus the center.  This makes the union predicates grow and the
/// intersection predicates shrink monotonically in the radius by
/// construction.  Radii must be non-negative and ascending; the result is
/// index-aligned with them.
std::vector<ZetaRegionPredicate> nested_region_predicates(
    ZetaRegionPredicate::Mode mode, const GameParams& base, const Vec& center,
    const std::vector<double>& radii, int sample_count, std::uint64_t seed,
    bool on_circle = false);

}  // namespace trustgame
