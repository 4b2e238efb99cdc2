#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trustgame/convergence.hpp"
#include "trustgame/ibr.hpp"

namespace trustgame {

/// How the empirical Converges/Diverges verdict is formed from a point's
/// batch of runs.
enum class SweepMode {
  /// Converges iff at least one run settled (kConvergedZero or
  /// kConvergedMixed).  Pairs with the necessary-side analytics.
  kWeak,
  /// Converges iff no run certified a failure: every run ended in
  /// {kConvergedZero, kConvergedMixed, kMaxIterNoConvergence}.  Pairs with
  /// the sufficient-side analytics, which promise convergence from every
  /// non-trivial start but say nothing about the speed.
  kStrong,
};

const char* to_string(SweepMode mode);

struct GridAxis {
  double min = -1.0;
  double max = 1.0;
  double step = 0.05;
};

/// Rectangular grid over the first two attack-target coordinates.
struct GridSpec {
  GridAxis x;  // yA_1
  GridAxis y;  // yA_2
};

struct SweepConfig {
  /// y_hat, mu, zeta and cost offsets of every instance; y_attack is
  /// replaced per grid point.  Dimension must be at least 2.
  GameParams base;
  GridSpec grid;
  /// Attack-target coordinates beyond the first two when dim > 2.
  std::optional<Vec> y_attack_base;

  int init_count = 20;
  /// Radius of the initial-report ball; default 2 ||y_hat - mu||.
  std::optional<double> init_radius;
  std::uint64_t seed = 0;
  IbrConfig ibr;
  SweepMode mode = SweepMode::kWeak;

  /// Slack band for the consistency audit: analytic sign tests are
  /// re-evaluated at +/- this tolerance before a contradiction is flagged.
  double consistency_slack = 1e-6;

  /// Worker threads; 0 means hardware concurrency.
  int threads = 0;

  // Optional zeta-region block (used by the region sweep).
  std::optional<Vec> zeta_center;  // defaults to mu
  std::vector<double> zeta_radii;
  int zeta_samples = 100;
  std::optional<std::uint64_t> zeta_seed;  // defaults to seed
  bool zeta_on_circle = false;
  /// Mismatch budget for the per-radius diagnostics.
  std::optional<double> epsilon;

  /// Initial report for single runs.
  std::optional<Vec> y_bar0;

  double init_radius_or_default() const;
  void validate() const;  // throws ConfigError
};

/// Verdict of the empirical-vs-analytic comparison at one grid point.
enum class Consistency {
  kOk,
  /// Empirically convergent but the necessary condition fails beyond the
  /// slack band.
  kNecessaryViolated,
  /// Empirically divergent but the sufficient condition holds beyond the
  /// slack band.
  kSufficientViolated,
};

const char* to_string(Consistency c);

struct RegionVerdict {
  double yA_1 = 0.0, yA_2 = 0.0;
  bool empirical_converges = false;
  /// Fraction of runs that settled (strict convergence only).
  double converged_fraction = 0.0;
  /// Settled weight when all settled runs agree on it within 1e-6.
  std::optional<double> alpha_star;
  PredicateReport report;
  Consistency consistency = Consistency::kOk;
  double frac_conv_zero = 0.0, frac_conv_mixed = 0.0, frac_exit_one = 0.0,
         frac_diverged = 0.0, frac_max_iter = 0.0;
  std::string note;
};

struct SweepResult {
  SweepMode mode = SweepMode::kWeak;
  /// Grid order: yA_2 outer, yA_1 inner.
  std::vector<RegionVerdict> rows;
  int count_ok = 0;
  int count_necessary_violated = 0;
  int count_sufficient_violated = 0;
  double elapsed_seconds = 0.0;
};

/// Grid sweep: per point, a deterministic batch of IBR runs plus the
/// analytic tests, reduced to a RegionVerdict.  Deterministic for a given
/// config regardless of thread count (each point gets its own derived
/// seed).
SweepResult run_sweep(const SweepConfig& cfg);

/// Fixed-format CSV with a commented summary footer.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

struct RegionsRow {
  double radius = 0.0;
  double yA_1 = 0.0, yA_2 = 0.0;
  bool in_union = false;
  bool in_intersection = false;
};

struct RegionsResult {
  std::vector<RegionsRow> rows;  // radius-major, then grid order
  std::vector<std::string> notes;
};

/// Region sweep over a radius ladder of zeta uncertainty: for each radius
/// and grid point, membership in the sampled union (necessary) and
/// intersection (sufficient) regions.
RegionsResult run_regions(const SweepConfig& cfg);

void write_regions_csv(std::ostream& os, const RegionsResult& result);

/// Loads and validates a JSON config file.  Throws ConfigError.
SweepConfig load_config(const std::string& path);

/// Same from an in-memory JSON document.
SweepConfig parse_config(const std::string& json_text);

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double v);

/// Grid points of one axis: min + i * step, i = 0 .. round((max-min)/step).
std::vector<double> axis_points(const GridAxis& axis);

}  // namespace trustgame
