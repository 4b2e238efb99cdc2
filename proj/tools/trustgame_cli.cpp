// Command line driver: single-run traces, grid sweeps, region overlays and
// equilibrium reports, all fed from one JSON config.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trustgame/trustgame.hpp"

namespace {

namespace tg = trustgame;

constexpr int kExitOk = 0;
constexpr int kExitTrivialInit = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitConfig = 64;
constexpr int kExitDegenerate = 65;
constexpr int kExitInternal = 70;

struct CommonFlags {
  std::string config_path;
  std::string out_path = "-";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<int> max_iter;
  std::optional<double> alpha_tol;
  std::optional<int> threads;
};

void apply_overrides(tg::SweepConfig& cfg, const CommonFlags& flags) {
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.mode) {
    if (*flags.mode == "weak") {
      cfg.mode = tg::SweepMode::kWeak;
    } else if (*flags.mode == "strong") {
      cfg.mode = tg::SweepMode::kStrong;
    } else {
      throw tg::ConfigError("--mode must be weak or strong");
    }
  }
  if (flags.max_iter) cfg.ibr.max_iter = *flags.max_iter;
  if (flags.alpha_tol) cfg.ibr.alpha_tol = *flags.alpha_tol;
  if (flags.threads) cfg.threads = *flags.threads;
  cfg.validate();
}

std::string vec_str(const tg::Vec& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += tg::format_double(v[i]);
  }
  return out + "]";
}

// Writes to the chosen sink; "-" means stdout.
int with_output(const std::string& out_path,
                const std::function<void(std::ostream&)>& writer) {
  if (out_path == "-") {
    writer(std::cout);
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitConfig;
  }
  writer(file);
  return kExitOk;
}

int cmd_run(const CommonFlags& flags, const std::vector<double>& y0_flag) {
  tg::SweepConfig cfg = tg::load_config(flags.config_path);
  apply_overrides(cfg, flags);

  tg::Vec y0;
  if (!y0_flag.empty()) {
    y0 = Eigen::Map<const tg::Vec>(y0_flag.data(),
                                   static_cast<Eigen::Index>(y0_flag.size()));
  } else if (cfg.y_bar0) {
    y0 = *cfg.y_bar0;
  } else {
    throw tg::ConfigError("run: provide --y0 or a y_bar0 config entry");
  }
  if (y0.size() != cfg.base.dim()) {
    throw tg::ConfigError("run: initial report dimension mismatch");
  }

  const tg::IbrTrace trace = tg::ibr_run(cfg.base, y0, cfg.ibr);

  std::printf("%4s  %-13s  %-24s  %s\n", "iter", "region", "alpha", "y_bar");
  tg::Vec prev = trace.initial_y_bar;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const tg::IbrStep& step = trace.steps[i];
    std::printf("%4zu  %-13s  %-24s  %s\n", i + 1,
                tg::to_string(tg::classify_region(prev, cfg.base)),
                tg::format_double(step.alpha).c_str(),
                step.y_bar ? vec_str(*step.y_bar).c_str() : "-");
    if (step.y_bar) prev = *step.y_bar;
  }
  std::printf("outcome: %s", tg::to_string(trace.outcome.kind));
  if (trace.outcome.alpha_star) {
    std::printf("  alpha*=%s  y_bar*=%s",
                tg::format_double(*trace.outcome.alpha_star).c_str(),
                vec_str(*trace.outcome.y_bar_star).c_str());
  }
  std::printf("  iterations=%zu\n", trace.steps.size());

  switch (trace.outcome.kind) {
    case tg::IbrOutcomeKind::kConvergedZero:
    case tg::IbrOutcomeKind::kConvergedMixed:
      return kExitOk;
    case tg::IbrOutcomeKind::kTrivialInit:
      return kExitTrivialInit;
    default:
      return kExitNoConvergence;
  }
}

int cmd_sweep(const CommonFlags& flags) {
  tg::SweepConfig cfg = tg::load_config(flags.config_path);
  apply_overrides(cfg, flags);
  const tg::SweepResult result = tg::run_sweep(cfg);
  const int rc = with_output(flags.out_path, [&](std::ostream& os) {
    tg::write_sweep_csv(os, result);
  });
  std::cerr << "sweep: " << result.rows.size() << " rows in "
            << tg::format_double(result.elapsed_seconds) << "s (OK="
            << result.count_ok
            << " NecessaryViolated=" << result.count_necessary_violated
            << " SufficientViolated=" << result.count_sufficient_violated
            << ")\n";
  return rc;
}

int cmd_regions(const CommonFlags& flags) {
  tg::SweepConfig cfg = tg::load_config(flags.config_path);
  apply_overrides(cfg, flags);
  const tg::RegionsResult result = tg::run_regions(cfg);
  return with_output(flags.out_path, [&](std::ostream& os) {
    tg::write_regions_csv(os, result);
  });
}

int cmd_equilibria(const CommonFlags& flags, bool as_json) {
  tg::SweepConfig cfg = tg::load_config(flags.config_path);
  apply_overrides(cfg, flags);
  const tg::GameParams& p = cfg.base;

  const bool zero_exists = tg::zero_equilibrium_exists(p);
  const double zero_slack =
      (p.y_attack - p.mu).dot(p.y_hat - p.mu) -
      (p.y_attack - p.mu).squaredNorm();
  const tg::MixedEquilibriumAnalysis analysis =
      tg::analyze_mixed_equilibria(p, cfg.ibr.tau_one);

  std::vector<tg::Equilibrium> all = analysis.equilibria;
  if (zero_exists) {
    all.push_back({tg::EquilibriumKind::kZeroAlpha, 0.0, p.y_attack,
                   std::nullopt});
  }
  std::vector<bool> nash;
  nash.reserve(all.size());
  for (const tg::Equilibrium& eq : all) {
    nash.push_back(tg::verify_nash(eq, p, 1001, 200, cfg.seed));
  }

  if (as_json) {
    nlohmann::json doc;
    doc["zero_equilibrium"] = {{"exists", zero_exists},
                               {"slack", zero_slack}};
    doc["interior"] = {{"a", analysis.a},
                       {"b", analysis.b},
                       {"c", analysis.c},
                       {"linear", analysis.linear}};
    if (analysis.discriminant) {
      doc["interior"]["discriminant"] = *analysis.discriminant;
    }
    doc["candidates"] = nlohmann::json::array();
    for (const auto& cand : analysis.candidates) {
      nlohmann::json jc = {{"r", cand.r},
                           {"alpha", cand.alpha},
                           {"accepted", cand.accepted}};
      jc["y_bar"] = std::vector<double>(cand.y_bar.data(),
                                        cand.y_bar.data() + cand.y_bar.size());
      if (!cand.accepted) jc["reason"] = cand.reject_reason;
      doc["candidates"].push_back(jc);
    }
    doc["equilibria"] = nlohmann::json::array();
    for (std::size_t i = 0; i < all.size(); ++i) {
      const tg::Equilibrium& eq = all[i];
      nlohmann::json je = {
          {"kind", eq.kind == tg::EquilibriumKind::kZeroAlpha ? "zero" : "mixed"},
          {"alpha", eq.alpha_star},
          {"nash_verified", static_cast<bool>(nash[i])}};
      je["y_bar"] = std::vector<double>(
          eq.y_bar_star.data(), eq.y_bar_star.data() + eq.y_bar_star.size());
      if (eq.ray_coordinate) je["r"] = *eq.ray_coordinate;
      doc["equilibria"].push_back(je);
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }

  std::printf("zero equilibrium: %s (slack=%s)\n",
              zero_exists ? "exists" : "none",
              tg::format_double(zero_slack).c_str());
  std::printf("interior equation: a=%s b=%s c=%s%s\n",
              tg::format_double(analysis.a).c_str(),
              tg::format_double(analysis.b).c_str(),
              tg::format_double(analysis.c).c_str(),
              analysis.linear ? " (solved as linear)" : "");
  if (analysis.discriminant) {
    std::printf("discriminant: %s\n",
                tg::format_double(*analysis.discriminant).c_str());
  }
  for (const auto& cand : analysis.candidates) {
    std::printf("candidate: r=%s alpha=%s y_bar=%s %s%s\n",
                tg::format_double(cand.r).c_str(),
                tg::format_double(cand.alpha).c_str(),
                vec_str(cand.y_bar).c_str(),
                cand.accepted ? "accepted" : "rejected: ",
                cand.accepted ? "" : cand.reject_reason.c_str());
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    const tg::Equilibrium& eq = all[i];
    std::printf("equilibrium: kind=%s alpha*=%s y_bar*=%s nash=%s\n",
                eq.kind == tg::EquilibriumKind::kZeroAlpha ? "zero" : "mixed",
                tg::format_double(eq.alpha_star).c_str(),
                vec_str(eq.y_bar_star).c_str(),
                nash[i] ? "verified" : "FAILED");
  }
  if (all.empty()) std::printf("equilibria: none\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trusted-computation game engine"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::vector<double> y0_flag;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub, bool with_out) {
    sub->add_option("--config", flags.config_path, "JSON config file")
        ->required();
    if (with_out) {
      sub->add_option("--out", flags.out_path, "output file, - for stdout");
    }
    sub->add_option("--seed", [&flags](const CLI::results_t& r) {
      flags.seed = std::stoull(r[0]);
      return true;
    }, "override config seed");
    sub->add_option("--mode", [&flags](const CLI::results_t& r) {
      flags.mode = r[0];
      return true;
    }, "weak or strong");
    sub->add_option("--max-iter", [&flags](const CLI::results_t& r) {
      flags.max_iter = std::stoi(r[0]);
      return true;
    }, "override iteration budget");
    sub->add_option("--alpha-tol", [&flags](const CLI::results_t& r) {
      flags.alpha_tol = std::stod(r[0]);
      return true;
    }, "override weight tolerance");
    sub->add_option("--threads", [&flags](const CLI::results_t& r) {
      flags.threads = std::stoi(r[0]);
      return true;
    }, "worker threads, 0 = hardware");
  };

  CLI::App* run = app.add_subcommand("run", "trace one best-response run");
  add_common(run, false);
  run->add_option("--y0", y0_flag, "initial report coordinates");

  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep to CSV");
  add_common(sweep, true);

  CLI::App* regions =
      app.add_subcommand("regions", "region overlays per uncertainty radius");
  add_common(regions, true);

  CLI::App* equilibria =
      app.add_subcommand("equilibria", "equilibrium existence report");
  add_common(equilibria, false);
  equilibria->add_flag("--json", as_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(flags, y0_flag);
    if (sweep->parsed()) return cmd_sweep(flags);
    if (regions->parsed()) return cmd_regions(flags);
    if (equilibria->parsed()) return cmd_equilibria(flags, as_json);
  } catch (const tg::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tg::DegenerateGame& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
