#include "trustgame/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "trustgame/rng.hpp"

namespace trustgame {

Vec projected_mean(const GameParams& p) {
  return project_onto_affine_hull(p.mu, {p.y_hat, p.zeta, p.y_attack});
}

namespace {

bool collinear_with(const Vec& mu, const Vec& y_hat, const Vec& y_attack) {
  const Vec v1 = y_hat - mu;
  const Vec v2 = y_attack - mu;
  const double scale = std::max(v1.norm(), v2.norm());
  if (scale == 0.0) return true;
  if (is_degenerate(v1, scale)) return true;  // y_hat == mu: at most a line
  const Vec resid = v2 - (v2.dot(v1) / v1.squaredNorm()) * v1;
  return resid.norm() <= kDegeneracyRel * scale;
}

// Shared scaffold: fills the report from the anchor geometry, where
// mu_eff plays the role of the (projected) mean.
PredicateReport build_report(const GameParams& p, const Vec& mu_eff,
                             bool general_form) {
  PredicateReport rep;
  const Vec& y_hat = p.y_hat;
  const Vec& y_attack = p.y_attack;
  const Vec to_hat = y_hat - mu_eff;

  rep.zero_slack = (y_attack - mu_eff).dot(y_hat - y_attack);
  rep.zero_case = rep.zero_slack >= 0.0;

  rep.weak_slack = to_hat.dot(y_attack - y_hat);
  rep.weak_case = rep.weak_slack < 0.0;

  const Vec line_dir = y_hat - y_attack;
  const bool line_degenerate =
      is_degenerate(line_dir, std::max(y_hat.norm(), y_attack.norm())) ||
      line_dir.norm() == 0.0;

  // Distance the attack target may sit from its model mean before the
  // interior escape route opens.  The binding bound depends on which side
  // of the boundary line (through y_hat and y_attack) the model mean puts
  // zeta; an on-line verdict takes the larger bound.
  const double attack_reach = (y_attack - p.zeta).norm();
  if (line_degenerate) {
    rep.mixed_case_indeterminate = true;
    rep.mixed_slack = std::numeric_limits<double>::quiet_NaN();
    rep.mixed_case = false;
  } else {
    const double along_line = std::abs(to_hat.dot(line_dir)) / line_dir.norm();
    const double full = to_hat.norm();
    double bound;
    if (general_form) {
      const double side = signed_normal_offset(
          p.zeta, HalfPlaneSpec{y_hat, y_attack, mu_eff});
      const double side_tol =
          kDegeneracyRel * std::max({(p.zeta - y_hat).norm(),
                                     (mu_eff - y_hat).norm(),
                                     line_dir.norm()});
      if (side > side_tol) {
        bound = along_line;
      } else if (side < -side_tol) {
        bound = full;
      } else {
        bound = std::max(along_line, full);
      }
    } else {
      bound = along_line;
    }
    rep.mixed_slack = bound - attack_reach;
    rep.mixed_case = rep.mixed_slack >= 0.0;
  }

  rep.weak_necessary = rep.zero_case || (rep.weak_case && rep.mixed_case);

  const Vec z_attack = y_attack - p.zeta;
  rep.suf1_slack = z_attack.dot(to_hat);
  rep.suf1 = rep.suf1_slack <= 0.0;

  const bool attack_at_model_mean =
      is_degenerate(z_attack, std::max(y_attack.norm(), p.zeta.norm())) ||
      z_attack.norm() == 0.0;
  if (attack_at_model_mean) {
    rep.suf2_slack = 0.0;  // trivially met: nothing to reach for
  } else {
    const double along_attack =
        std::abs(to_hat.dot(z_attack)) / z_attack.norm();
    if (general_form) {
      // A degenerate boundary line contributes a zero bound, which keeps
      // the guarantee conservative.
      const double along_line =
          line_degenerate ? 0.0
                          : std::abs(to_hat.dot(line_dir)) / line_dir.norm();
      rep.suf2_slack = std::min(along_attack, along_line) - attack_reach;
    } else {
      rep.suf2_slack = along_attack - attack_reach;
    }
  }
  rep.suf2 = rep.suf2_slack >= 0.0;
  rep.strong_sufficient = rep.suf1 && rep.suf2;

  rep.collinear = collinear_with(p.mu, y_hat, y_attack);
  return rep;
}

}  // namespace

PredicateReport evaluate_predicates(const GameParams& p) {
  p.validate();
  return build_report(p, projected_mean(p), /*general_form=*/true);
}

PredicateReport evaluate_predicates_equal_means(const GameParams& p) {
  p.validate();
  const double scale = std::max(p.zeta.norm(), p.mu.norm());
  if ((p.zeta - p.mu).norm() > kDegeneracyRel * scale) {
    throw ParamsMismatch(
        "evaluate_predicates_equal_means: zeta must equal mu");
  }
  // With zeta equal to mu the mean is its own in-hull projection, so the
  // reduced forms run against mu directly; snap zeta to mu so a tolerated
  // sub-threshold offset cannot leak into the slacks.
  GameParams q = p;
  q.zeta = p.mu;
  return build_report(q, q.mu, /*general_form=*/false);
}

MismatchBudget::MismatchBudget(double epsilon) : epsilon_(epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0 || epsilon > 1.0) {
    throw std::invalid_argument("MismatchBudget: epsilon must lie in [0, 1]");
  }
}

bool mismatch_within_budget(const GameParams& p, const MismatchBudget& budget) {
  p.validate();
  const double eps = budget.epsilon();
  return (p.zeta - p.mu).norm() <=
         eps / (1.0 + eps) * (p.y_hat - p.mu).norm();
}

bool projected_mismatch_within_budget(const GameParams& p,
                                      const MismatchBudget& budget,
                                      double slack) {
  if (!mismatch_within_budget(p, budget)) {
    throw PreconditionViolated(
        "projected_mismatch_within_budget: whole-space bound does not hold");
  }
  const Vec mu_hat = projected_mean(p);
  return (p.zeta - mu_hat).norm() <=
         budget.epsilon() * (p.y_hat - mu_hat).norm() + slack;
}

std::vector<Vec> ZetaSet::samples() const {
  if (center.size() < 1 || !center.allFinite() || !(radius >= 0.0) ||
      sample_count < 0) {
    throw PreconditionViolated("ZetaSet: bad parameters");
  }
  std::vector<Vec> out;
  out.push_back(center);
  if (radius == 0.0) return out;
  Rng rng(seed);
  const Vec origin = Vec::Zero(center.size());
  out.reserve(static_cast<std::size_t>(sample_count) + 1);
  for (int i = 0; i < sample_count; ++i) {
    out.push_back(center + radius * rng.ball(origin, 1.0, on_circle));
  }
  return out;
}

ZetaRegionPredicate::ZetaRegionPredicate(Mode mode, GameParams base,
                                         std::vector<Vec> zeta_samples)
    : mode_(mode), base_(std::move(base)), zeta_samples_(std::move(zeta_samples)) {
  if (zeta_samples_.empty()) {
    throw PreconditionViolated("ZetaRegionPredicate: empty sample set");
  }
  for (const Vec& z : zeta_samples_) {
    if (z.size() != base_.y_hat.size() || !z.allFinite()) {
      throw PreconditionViolated("ZetaRegionPredicate: bad zeta sample");
    }
  }
}

bool ZetaRegionPredicate::contains(const Vec& y_attack) const {
  if (y_attack.size() != base_.y_hat.size() || !y_attack.allFinite()) {
    throw PreconditionViolated("ZetaRegionPredicate: bad query point");
  }
  GameParams p = base_;
  p.y_attack = y_attack;
  for (const Vec& z : zeta_samples_) {
    p.zeta = z;
    const PredicateReport rep = evaluate_predicates(p);
    if (mode_ == Mode::kUnionNecessary) {
      if (rep.weak_necessary) return true;
    } else {
      if (!rep.strong_sufficient) return false;
    }
  }
  return mode_ == Mode::kIntersectionSufficient;
}

ZetaRegionPredicate necessary_region_union(const GameParams& base,
                                           const ZetaSet& zeta_set) {
  return ZetaRegionPredicate(ZetaRegionPredicate::Mode::kUnionNecessary, base,
                             zeta_set.samples());
}

ZetaRegionPredicate sufficient_region_intersection(const GameParams& base,
                                                   const ZetaSet& zeta_set) {
  return ZetaRegionPredicate(ZetaRegionPredicate::Mode::kIntersectionSufficient,
                             base, zeta_set.samples());
}

std::vector<ZetaRegionPredicate> nested_region_predicates(
    ZetaRegionPredicate::Mode mode, const GameParams& base, const Vec& center,
    const std::vector<double>& radii, int sample_count, std::uint64_t seed,
    bool on_circle) {
  if (radii.empty() || sample_count < 0) {
    throw PreconditionViolated("nested_region_predicates: bad arguments");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0) || (i > 0 && radii[i] < radii[i - 1])) {
      throw PreconditionViolated(
          "nested_region_predicates: radii must be ascending and >= 0");
    }
  }

  // One shared draw stream; each radius adds its own scaled block on top of
  // all previous blocks, so the sample sets are nested by construction.
  Rng rng(seed);
  const Vec origin = Vec::Zero(center.size());
  std::vector<Vec> cumulative;
  cumulative.push_back(center);
  std::vector<ZetaRegionPredicate> out;
  out.reserve(radii.size());
  for (double r : radii) {
    for (int s = 0; s < sample_count; ++s) {
      const Vec u = rng.ball(origin, 1.0, on_circle);
      if (r > 0.0) cumulative.push_back(center + r * u);
    }
    out.emplace_back(mode, base, cumulative);
  }
  return out;
}

}  // namespace trustgame
