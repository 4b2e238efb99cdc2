#include "trustgame/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "trustgame/rng.hpp"

namespace trustgame {

const char* to_string(SweepMode mode) {
  return mode == SweepMode::kWeak ? "weak" : "strong";
}

const char* to_string(Consistency c) {
  switch (c) {
    case Consistency::kOk: return "OK";
    case Consistency::kNecessaryViolated: return "NecessaryViolated";
    case Consistency::kSufficientViolated: return "SufficientViolated";
  }
  return "?";
}

double SweepConfig::init_radius_or_default() const {
  return init_radius ? *init_radius : 2.0 * (base.y_hat - base.mu).norm();
}

void SweepConfig::validate() const {
  try {
    base.validate();
  } catch (const PreconditionViolated& e) {
    throw ConfigError(e.what());
  }
  for (const GridAxis* ax : {&grid.x, &grid.y}) {
    if (!std::isfinite(ax->min) || !std::isfinite(ax->max) ||
        !std::isfinite(ax->step) || !(ax->step > 0.0) || ax->max < ax->min) {
      throw ConfigError("config: grid axis needs min <= max and step > 0");
    }
  }
  if (y_attack_base && y_attack_base->size() != base.dim()) {
    throw ConfigError("config: y_attack_base dimension mismatch");
  }
  if (init_count < 1) throw ConfigError("config: init_count must be >= 1");
  if (init_radius && !(*init_radius >= 0.0)) {
    throw ConfigError("config: init_radius must be >= 0");
  }
  if (ibr.max_iter < 1 || !(ibr.alpha_tol > 0.0) || !(ibr.tau_one > 0.0) ||
      !(ibr.divergence_norm > 0.0) || !(ibr.report_rel_tol >= 0.0)) {
    throw ConfigError("config: bad stopping rules");
  }
  if (!(consistency_slack >= 0.0)) {
    throw ConfigError("config: consistency_slack must be >= 0");
  }
  if (threads < 0) throw ConfigError("config: threads must be >= 0");
  if (zeta_center && zeta_center->size() != base.dim()) {
    throw ConfigError("config: zeta_center dimension mismatch");
  }
  for (std::size_t i = 0; i < zeta_radii.size(); ++i) {
    if (!(zeta_radii[i] >= 0.0) ||
        (i > 0 && zeta_radii[i] < zeta_radii[i - 1])) {
      throw ConfigError("config: zeta_radii must be ascending and >= 0");
    }
  }
  if (zeta_samples < 0) throw ConfigError("config: zeta_samples must be >= 0");
  if (epsilon && !(*epsilon >= 0.0 && *epsilon <= 1.0)) {
    throw ConfigError("config: epsilon must lie in [0, 1]");
  }
  if (y_bar0 && (y_bar0->size() != base.dim() || !y_bar0->allFinite())) {
    throw ConfigError("config: y_bar0 dimension mismatch");
  }
}

std::vector<double> axis_points(const GridAxis& axis) {
  if (!(axis.step > 0.0) || axis.max < axis.min) {
    throw ConfigError("axis_points: need min <= max and step > 0");
  }
  const int n =
      static_cast<int>(std::lround((axis.max - axis.min) / axis.step)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 1)));
  if (n <= 1) {
    out.push_back(axis.min);
    return out;
  }
  // Endpoint-exact interpolation so landmark coordinates hit clean values.
  for (int i = 0; i < n; ++i) {
    out.push_back((axis.min * (n - 1 - i) + axis.max * i) / (n - 1));
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

Vec grid_attack_point(const SweepConfig& cfg, double x, double y) {
  Vec ya = cfg.y_attack_base ? *cfg.y_attack_base
                             : Vec(Vec::Zero(cfg.base.dim()));
  ya[0] = x;
  ya[1] = y;
  return ya;
}

RegionVerdict evaluate_point(const SweepConfig& cfg,
                             const std::vector<double>& xs,
                             const std::vector<double>& ys,
                             std::size_t index) {
  const std::size_t nx = xs.size();
  const double x = xs[index % nx];
  const double y = ys[index / nx];

  GameParams p = cfg.base;
  p.y_attack = grid_attack_point(cfg, x, y);

  RegionVerdict v;
  v.yA_1 = x;
  v.yA_2 = y;
  v.report = evaluate_predicates(p);

  int n_zero = 0, n_mixed = 0, n_exit = 0, n_div = 0, n_max = 0;
  int n_runs = 0;
  std::vector<double> settled;
  try {
    const auto inits = sample_initial_conditions(
        p, cfg.init_count, cfg.init_radius_or_default(),
        derive_seed(cfg.seed, index));
    n_runs = static_cast<int>(inits.size());
    for (const Vec& y0 : inits) {
      const IbrTrace trace = ibr_run(p, y0, cfg.ibr);
      switch (trace.outcome.kind) {
        case IbrOutcomeKind::kConvergedZero:
          ++n_zero;
          settled.push_back(*trace.outcome.alpha_star);
          break;
        case IbrOutcomeKind::kConvergedMixed:
          ++n_mixed;
          settled.push_back(*trace.outcome.alpha_star);
          break;
        case IbrOutcomeKind::kExitAlphaOne:
        case IbrOutcomeKind::kTrivialInit:
          ++n_exit;
          break;
        case IbrOutcomeKind::kDiverged:
          ++n_div;
          break;
        case IbrOutcomeKind::kMaxIterNoConvergence:
          ++n_max;
          break;
      }
    }
  } catch (const SamplingExhausted&) {
    v.note = "sampling-exhausted";
  }

  if (n_runs > 0) {
    const double n = n_runs;
    v.frac_conv_zero = n_zero / n;
    v.frac_conv_mixed = n_mixed / n;
    v.frac_exit_one = n_exit / n;
    v.frac_diverged = n_div / n;
    v.frac_max_iter = n_max / n;
    v.converged_fraction = (n_zero + n_mixed) / n;
    const bool any_settled = n_zero + n_mixed > 0;
    const bool none_failed = n_zero + n_mixed + n_max == n_runs;
    v.empirical_converges =
        cfg.mode == SweepMode::kWeak ? any_settled : none_failed;
    if (any_settled) {
      const bool unanimous =
          std::all_of(settled.begin(), settled.end(), [&](double a) {
            return std::abs(a - settled.front()) <= 1e-6;
          });
      if (unanimous) v.alpha_star = settled.front();
    }
  }

  // Consistency audit, one direction per mode, with a slack band so a
  // knife-edge analytic verdict is never flagged.  NaN slacks compare
  // false, which is the safe (no-flag) side.
  const double s = cfg.consistency_slack;
  const PredicateReport& r = v.report;
  if (cfg.mode == SweepMode::kWeak) {
    const bool necessary_relaxed =
        r.zero_slack >= -s || (r.weak_slack < s && r.mixed_slack >= -s);
    if (v.empirical_converges && !necessary_relaxed) {
      v.consistency = Consistency::kNecessaryViolated;
    }
  } else {
    const bool sufficient_robust = r.suf1_slack <= -s && r.suf2_slack >= s;
    if (n_runs > 0 && !v.empirical_converges && sufficient_robust) {
      v.consistency = Consistency::kSufficientViolated;
    }
  }
  return v;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.base.dim() < 2) {
    throw ConfigError("sweep: grid sweeps need dimension >= 2");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> xs = axis_points(cfg.grid.x);
  const std::vector<double> ys = axis_points(cfg.grid.y);
  const std::size_t total = xs.size() * ys.size();

  SweepResult result;
  result.mode = cfg.mode;
  result.rows.resize(total);

  int workers = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp<int>(workers, 1, static_cast<int>(total));

  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) {
      result.rows[i] = evaluate_point(cfg, xs, ys, i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= total) return;
        try {
          result.rows[i] = evaluate_point(cfg, xs, ys, i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (const RegionVerdict& v : result.rows) {
    switch (v.consistency) {
      case Consistency::kOk: ++result.count_ok; break;
      case Consistency::kNecessaryViolated:
        ++result.count_necessary_violated;
        break;
      case Consistency::kSufficientViolated:
        ++result.count_sufficient_violated;
        break;
    }
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  os << "yA_1,yA_2,empirical,converged_fraction,alpha_star,"
        "zero_case,weak_case,mixed_case,weak_necessary,suf1,suf2,"
        "strong_sufficient,consistency,zero_slack,weak_slack,mixed_slack,"
        "suf1_slack,suf2_slack,frac_conv_zero,frac_conv_mixed,frac_exit_one,"
        "frac_diverged,frac_max_iter,note\n";
  for (const RegionVerdict& v : result.rows) {
    const PredicateReport& r = v.report;
    os << format_double(v.yA_1) << ',' << format_double(v.yA_2) << ','
       << (v.empirical_converges ? "Converges" : "Diverges") << ','
       << format_double(v.converged_fraction) << ','
       << (v.alpha_star ? format_double(*v.alpha_star) : std::string()) << ','
       << int(r.zero_case) << ',' << int(r.weak_case) << ','
       << int(r.mixed_case) << ',' << int(r.weak_necessary) << ','
       << int(r.suf1) << ',' << int(r.suf2) << ','
       << int(r.strong_sufficient) << ',' << to_string(v.consistency) << ','
       << format_double(r.zero_slack) << ',' << format_double(r.weak_slack)
       << ',' << format_double(r.mixed_slack) << ','
       << format_double(r.suf1_slack) << ',' << format_double(r.suf2_slack)
       << ',' << format_double(v.frac_conv_zero) << ','
       << format_double(v.frac_conv_mixed) << ','
       << format_double(v.frac_exit_one) << ','
       << format_double(v.frac_diverged) << ','
       << format_double(v.frac_max_iter) << ',' << v.note << '\n';
  }
  os << "# mode=" << to_string(result.mode) << " rows=" << result.rows.size()
     << " OK=" << result.count_ok
     << " NecessaryViolated=" << result.count_necessary_violated
     << " SufficientViolated=" << result.count_sufficient_violated << '\n';
}

RegionsResult run_regions(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.base.dim() < 2) {
    throw ConfigError("regions: grid sweeps need dimension >= 2");
  }
  if (cfg.zeta_radii.empty()) {
    throw ConfigError("regions: zeta_radii is required");
  }
  const Vec center = cfg.zeta_center ? *cfg.zeta_center : cfg.base.mu;
  const std::uint64_t zseed = cfg.zeta_seed ? *cfg.zeta_seed : cfg.seed;

  const auto unions = nested_region_predicates(
      ZetaRegionPredicate::Mode::kUnionNecessary, cfg.base, center,
      cfg.zeta_radii, cfg.zeta_samples, zseed, cfg.zeta_on_circle);
  const auto intersections = nested_region_predicates(
      ZetaRegionPredicate::Mode::kIntersectionSufficient, cfg.base, center,
      cfg.zeta_radii, cfg.zeta_samples, zseed, cfg.zeta_on_circle);

  const std::vector<double> xs = axis_points(cfg.grid.x);
  const std::vector<double> ys = axis_points(cfg.grid.y);

  RegionsResult out;
  out.rows.reserve(cfg.zeta_radii.size() * xs.size() * ys.size());
  for (std::size_t ri = 0; ri < cfg.zeta_radii.size(); ++ri) {
    for (double y : ys) {
      for (double x : xs) {
        const Vec ya = grid_attack_point(cfg, x, y);
        out.rows.push_back({cfg.zeta_radii[ri], x, y,
                            unions[ri].contains(ya),
                            intersections[ri].contains(ya)});
      }
    }
    std::string note = "radius=" + format_double(cfg.zeta_radii[ri]) +
                       " samples=" +
                       std::to_string(unions[ri].zeta_samples().size());
    if (cfg.epsilon) {
      // How many sampled means overrun the mismatch budget; a stated
      // uncertainty set larger than the budget makes the union overlay
      // advisory rather than exact.
      const MismatchBudget budget(*cfg.epsilon);
      GameParams probe = cfg.base;
      int violations = 0;
      for (const Vec& z : unions[ri].zeta_samples()) {
        probe.zeta = z;
        if (!mismatch_within_budget(probe, budget)) ++violations;
      }
      note += " budget_violations=" + std::to_string(violations);
    }
    out.notes.push_back(std::move(note));
  }
  return out;
}

void write_regions_csv(std::ostream& os, const RegionsResult& result) {
  os << "radius,yA_1,yA_2,in_union,in_intersection\n";
  for (const RegionsRow& row : result.rows) {
    os << format_double(row.radius) << ',' << format_double(row.yA_1) << ','
       << format_double(row.yA_2) << ',' << int(row.in_union) << ','
       << int(row.in_intersection) << '\n';
  }
  for (const std::string& note : result.notes) os << "# " << note << '\n';
}

}  // namespace trustgame
