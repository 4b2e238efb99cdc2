#include <cmath>
#include <set>

#include "test_util.hpp"

using namespace trustgame;
using tgt::vec;

TEST_CASE("same seed gives the same stream") {
  Rng a(123), b(123);
  for (int i = 0; i < 200; ++i) CHECK(a.uniform01() == b.uniform01());
  Rng c(123), d(123);
  for (int i = 0; i < 50; ++i) CHECK(c.normal() == d.normal());
  Rng e(123), f(123);
  CHECK(tgt::max_abs_diff(e.normal_vec(7), f.normal_vec(7)) == 0.0);
}

TEST_CASE("different seeds give different streams") {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += a.uniform01() == b.uniform01();
  CHECK(same < 5);
}

TEST_CASE("uniform01 stays in [0, 1)") {
  Rng rng(99);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal moments are plausible") {
  Rng rng(2024);
  const int n = 20000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::abs(mean) < 0.05);
  CHECK(var == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("ball draws respect the radius") {
  Rng rng(5);
  const Vec center = vec({1.0, -2.0, 0.5});
  for (int i = 0; i < 1000; ++i) {
    const Vec x = rng.ball(center, 0.7);
    CHECK((x - center).norm() <= 0.7 + 1e-12);
  }
  for (int i = 0; i < 1000; ++i) {
    const Vec x = rng.ball(center, 0.7, /*on_sphere=*/true);
    CHECK((x - center).norm() == doctest::Approx(0.7).epsilon(1e-12));
  }
}

TEST_CASE("ball with radius zero is the center") {
  Rng rng(5);
  const Vec center = vec({0.25, 0.5});
  CHECK(tgt::max_abs_diff(rng.ball(center, 0.0), center) == 0.0);
}

TEST_CASE("ball covers the interior, sphere does not") {
  Rng rng(11);
  const Vec center = Vec::Zero(2);
  int inner = 0;
  for (int i = 0; i < 500; ++i) {
    inner += rng.ball(center, 1.0).norm() < 0.5;
  }
  // P(r < 0.5) = 0.25 in 2-D; allow a wide band.
  CHECK(inner > 60);
  CHECK(inner < 200);
}

TEST_CASE("derive_seed spreads indices") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    seen.insert(derive_seed(42, i));
  }
  CHECK(seen.size() == 2000);
  CHECK(derive_seed(42, 0) != 42);
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}
