#include "trustgame/rng.hpp"

#include <cmath>

namespace trustgame {

double Rng::uniform01() {
  // Top 53 bits scaled by 2^-53: uniform on [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  have_spare_ = true;
  return u * m;
}

Vec Rng::normal_vec(int dim) {
  Vec out(dim);
  for (int i = 0; i < dim; ++i) out[i] = normal();
  return out;
}

Vec Rng::ball(const Vec& center, double radius, bool on_sphere) {
  const int k = static_cast<int>(center.size());
  Vec dir(k);
  double norm = 0.0;
  do {
    dir = normal_vec(k);
    norm = dir.norm();
  } while (norm == 0.0);
  dir /= norm;
  const double r =
      on_sphere ? radius : radius * std::pow(uniform01(), 1.0 / k);
  return center + r * dir;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace trustgame
