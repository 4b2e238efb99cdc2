#include "trustgame/ibr.hpp"

#include <cmath>

#include "trustgame/rng.hpp"

namespace trustgame {

const char* to_string(IbrOutcomeKind kind) {
  switch (kind) {
    case IbrOutcomeKind::kConvergedZero: return "ConvergedZero";
    case IbrOutcomeKind::kConvergedMixed: return "ConvergedMixed";
    case IbrOutcomeKind::kExitAlphaOne: return "ExitAlphaOne";
    case IbrOutcomeKind::kTrivialInit: return "TrivialInit";
    case IbrOutcomeKind::kDiverged: return "Diverged";
    case IbrOutcomeKind::kMaxIterNoConvergence: return "MaxIterNoConvergence";
  }
  return "?";
}

bool is_converged(IbrOutcomeKind kind) {
  return kind == IbrOutcomeKind::kConvergedZero ||
         kind == IbrOutcomeKind::kConvergedMixed;
}

namespace {

void check_ibr_inputs(const GameParams& p, const Vec& y_bar_0,
                      const IbrConfig& cfg) {
  p.validate();
  if (y_bar_0.size() != p.y_hat.size() || !y_bar_0.allFinite()) {
    throw PreconditionViolated("ibr_run: bad initial report");
  }
  if (cfg.max_iter < 1 || !(cfg.alpha_tol > 0.0) || !(cfg.tau_one > 0.0) ||
      !(cfg.divergence_norm > 0.0) || !(cfg.report_rel_tol >= 0.0)) {
    throw PreconditionViolated("ibr_run: bad stopping rules");
  }
}

}  // namespace

IbrTrace ibr_run(const GameParams& p, const Vec& y_bar_0,
                 const IbrConfig& cfg) {
  check_ibr_inputs(p, y_bar_0, cfg);

  IbrTrace trace;
  trace.initial_y_bar = y_bar_0;
  Vec y_prev = y_bar_0;
  double a_prev = 0.0;
  bool have_prev = false;

  for (int i = 1; i <= cfg.max_iter; ++i) {
    const double a = best_response_sensor(y_prev, p).value();
    if (a >= 1.0 - cfg.tau_one) {
      trace.steps.push_back({a, std::nullopt});
      trace.outcome = {i == 1 ? IbrOutcomeKind::kTrivialInit
                              : IbrOutcomeKind::kExitAlphaOne,
                       std::nullopt, std::nullopt};
      return trace;
    }
    const Vec y = best_response_attacker(FusionWeight(a), p, cfg.tau_one);
    trace.steps.push_back({a, y});

    if (have_prev && std::abs(a - a_prev) < cfg.alpha_tol &&
        (y - y_prev).norm() <= cfg.report_rel_tol * (1.0 + y.norm())) {
      trace.outcome = {a == 0.0 ? IbrOutcomeKind::kConvergedZero
                                : IbrOutcomeKind::kConvergedMixed,
                       a, y};
      return trace;
    }
    if ((y - p.zeta).norm() > cfg.divergence_norm) {
      trace.outcome = {IbrOutcomeKind::kDiverged, std::nullopt, std::nullopt};
      return trace;
    }
    a_prev = a;
    have_prev = true;
    y_prev = y;
  }
  trace.outcome = {IbrOutcomeKind::kMaxIterNoConvergence, std::nullopt,
                   std::nullopt};
  return trace;
}

bool is_nontrivial_init(const GameParams& p, const Vec& y_bar_0,
                        double tau_one) {
  return best_response_sensor(y_bar_0, p).value() < 1.0 - tau_one;
}

std::vector<Vec> sample_initial_conditions(const GameParams& p, int count,
                                           double radius, std::uint64_t seed) {
  p.validate();
  if (count < 0 || !(radius >= 0.0)) {
    throw PreconditionViolated("sample_initial_conditions: bad arguments");
  }
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    int attempts = 0;
    for (;;) {
      if (++attempts > 1000) {
        throw SamplingExhausted(
            "sample_initial_conditions: no non-trivial draw in 1000 attempts");
      }
      Vec candidate = rng.ball(p.mu, radius);
      if (is_nontrivial_init(p, candidate)) {
        out.push_back(std::move(candidate));
        break;
      }
    }
  }
  return out;
}

}  // namespace trustgame
