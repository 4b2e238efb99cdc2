#include "trustgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "trustgame/rng.hpp"

namespace trustgame {

bool zero_equilibrium_exists(const GameParams& p) {
  // At (alpha = 0, y_bar = y_attack) the attacker is at its unconstrained
  // optimum; the sensor stays at zero iff its adopt-the-report branch test
  // holds there.
  const Vec za = p.y_attack - p.mu;
  return za.dot(p.y_hat - p.mu) >= za.squaredNorm();
}

namespace {

// Numerically stable real roots of a r^2 + b r + c = 0, assuming a genuine
// quadratic with non-negative discriminant.
std::vector<double> quadratic_roots(double a, double b, double c,
                                    double disc) {
  const double root = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0.0 ? root : -root));
  std::vector<double> out;
  out.push_back(q / a);
  if (q != 0.0) {
    const double r2 = c / q;
    if (std::abs(r2 - out[0]) > 1e-12 * (1.0 + std::abs(out[0]))) {
      out.push_back(r2);
    }
  }
  return out;
}

}  // namespace

MixedEquilibriumAnalysis analyze_mixed_equilibria(const GameParams& p,
                                                  double tau_one) {
  p.validate();
  const Vec z_hat = p.y_hat - p.zeta;
  const Vec z_a = p.y_attack - p.zeta;
  const Vec delta = p.zeta - p.mu;
  if (is_degenerate(z_hat, std::max(p.y_hat.norm(), p.zeta.norm()))) {
    throw DegenerateGame(
        "analyze_mixed_equilibria: y_hat coincides with zeta");
  }

  MixedEquilibriumAnalysis out;
  out.a = z_a.dot(z_hat + z_a + delta);
  out.b = -z_hat.dot(z_hat + 2.0 * z_a + delta);
  out.c = z_hat.squaredNorm();

  std::vector<double> roots;
  const double coeff_scale =
      std::max({std::abs(out.b), std::abs(out.c), 1e-300});
  if (std::abs(out.a) <= kDegeneracyRel * coeff_scale) {
    out.linear = true;
    if (std::abs(out.b) > kDegeneracyRel * std::abs(out.c)) {
      roots.push_back(-out.c / out.b);
    }
  } else {
    const double disc = out.b * out.b - 4.0 * out.a * out.c;
    out.discriminant = disc;
    if (disc >= 0.0) roots = quadratic_roots(out.a, out.b, out.c, disc);
  }

  for (double r : roots) {
    MixedEquilibriumAnalysis::Candidate cand;
    cand.r = r;
    cand.y_bar = p.zeta + r * z_a;
    cand.alpha = best_response_sensor(cand.y_bar, p).value();
    if (cand.alpha <= tau_one) {
      cand.reject_reason = "sensor response at the adopt boundary";
    } else if (cand.alpha >= 1.0 - tau_one) {
      cand.reject_reason = "sensor response saturated at one";
    } else {
      const Vec reply =
          best_response_attacker(FusionWeight(cand.alpha), p, tau_one);
      if ((reply - cand.y_bar).norm() > 1e-8 * (1.0 + cand.y_bar.norm())) {
        cand.reject_reason = "report is not an attacker fixed point";
      }
    }
    cand.accepted = cand.reject_reason.empty();
    if (cand.accepted) {
      out.equilibria.push_back(
          {EquilibriumKind::kMixed, cand.alpha, cand.y_bar, r});
    }
    out.candidates.push_back(std::move(cand));
  }
  return out;
}

std::vector<Equilibrium> mixed_equilibria(const GameParams& p,
                                          double tau_one) {
  return analyze_mixed_equilibria(p, tau_one).equilibria;
}

bool verify_nash(const Equilibrium& candidate, const GameParams& p,
                 int alpha_grid, int perturbations, std::uint64_t seed,
                 double tol) {
  p.validate();
  const FusionWeight alpha(candidate.alpha_star);
  const Vec& y_bar = candidate.y_bar_star;

  const double base_d = cost_defender(alpha, y_bar, p);
  for (int i = 0; i < alpha_grid; ++i) {
    const double a = static_cast<double>(i) / (alpha_grid - 1);
    if (cost_defender(FusionWeight(a), y_bar, p) < base_d - tol) return false;
  }

  const double base_a = cost_attacker(alpha, y_bar, p);
  Rng rng(seed);
  const double radius = 1.0 + y_bar.norm();
  const Vec origin = Vec::Zero(y_bar.size());
  for (int i = 0; i < perturbations; ++i) {
    const Vec trial = y_bar + rng.ball(origin, radius);
    if (cost_attacker(alpha, trial, p) < base_a - tol) return false;
  }
  return true;
}

}  // namespace trustgame
