#pragma once

#include <cstdint>
#include <random>

#include "trustgame/geometry.hpp"

namespace trustgame {

/// Deterministic random stream with portable output.
///
/// The engine is std::mt19937_64, whose word sequence is pinned by the
/// standard.  Floating-point draws are derived here from raw words (53-bit
/// uniforms, polar-method normals) instead of std::*_distribution, whose
/// algorithms are implementation-defined; this keeps byte-identical results
/// across toolchains for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw from [0, 1) with 53 random mantissa bits.
  double uniform01();

  /// Standard normal draw (Marsaglia polar method).
  double normal();

  /// Vector of independent standard normal draws.
  Vec normal_vec(int dim);

  /// Uniform draw from the closed ball around center, or from its surface
  /// when on_sphere is set (the circle when dim == 2).
  Vec ball(const Vec& center, double radius, bool on_sphere = false);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Mixes a master seed and a stream index into a statistically independent
/// child seed (splitmix64-style finalizer).  Used so that parallel workers
/// can seed per-unit streams without sharing state.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace trustgame
