#include <cmath>
#include <stdexcept>

#include "test_util.hpp"

using namespace trustgame;
using tgt::make_params;
using tgt::vec;

namespace {

GameParams mismatch_game(double x, double y) {
  return make_params(tgt::vec({0.8, 0.0}), tgt::vec({0.0, 0.0}),
                     tgt::vec({0.3, -0.2}), tgt::vec({x, y}));
}

GameParams equal_means_scalar(double y_attack) {
  return make_params(tgt::vec({1.0}), tgt::vec({0.0}), tgt::vec({0.0}),
                     tgt::vec({y_attack}));
}

}  // namespace

TEST_CASE("projected mean: full-span anchors give the mean itself") {
  const GameParams p = mismatch_game(0.25, -0.2);
  CHECK(tgt::max_abs_diff(projected_mean(p), p.mu) <= 1e-12);
}

TEST_CASE("projected mean: collinear anchors project onto their line") {
  const GameParams p = make_params(vec({1.0, 0.0}), vec({0.3, 0.7}),
                                   vec({0.0, 0.0}), vec({0.4, 0.0}));
  const Vec m = projected_mean(p);
  CHECK(m[0] == doctest::Approx(0.3));
  CHECK(m[1] == doctest::Approx(0.0));
}

TEST_CASE("projected mean: reference cross-check and contraction") {
  Rng rng(808);
  for (int it = 0; it < 400; ++it) {
    const int k = 2 + static_cast<int>(rng.uniform01() * 3.999);
    const GameParams p = tgt::random_params(rng, k);
    const Vec m = projected_mean(p);
    const Vec want = tgt::affine_projection_reference(
        p.mu, {p.y_hat, p.zeta, p.y_attack});
    CHECK(tgt::max_abs_diff(m, want) <= 1e-9);
    // Projecting cannot move mu past zeta, and the offsets obey Pythagoras
    // because zeta lies in the hull.
    CHECK((p.mu - m).norm() <= (p.mu - p.zeta).norm() + 1e-12);
    const double lhs = (p.zeta - p.mu).squaredNorm();
    const double rhs = (p.zeta - m).squaredNorm() + (p.mu - m).squaredNorm();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("analytic tests: frozen instance inside the convergence region") {
  const PredicateReport r = evaluate_predicates(mismatch_game(0.25, -0.2));
  CHECK(r.zero_slack == doctest::Approx(0.0975).epsilon(1e-9));
  CHECK(r.weak_slack == doctest::Approx(-0.44).epsilon(1e-9));
  CHECK(r.mixed_slack == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(r.suf1_slack == doctest::Approx(-0.04).epsilon(1e-9));
  CHECK(r.suf2_slack == doctest::Approx(0.7018347388).epsilon(1e-8));
  CHECK(r.zero_case);
  CHECK(r.weak_case);
  CHECK(r.mixed_case);
  CHECK(r.weak_necessary);
  CHECK(r.suf1);
  CHECK(r.suf2);
  CHECK(r.strong_sufficient);
  CHECK_FALSE(r.collinear);
  CHECK_FALSE(r.mixed_case_indeterminate);
}

TEST_CASE("analytic tests: frozen instance outside the convergence region") {
  const PredicateReport r = evaluate_predicates(mismatch_game(-0.5, 0.5));
  CHECK(r.zero_slack == doctest::Approx(-0.9).epsilon(1e-9));
  CHECK(r.weak_slack == doctest::Approx(-1.04).epsilon(1e-9));
  CHECK(r.mixed_slack == doctest::Approx(-0.3163380963).epsilon(1e-8));
  CHECK(r.suf1_slack == doctest::Approx(-0.64).epsilon(1e-9));
  CHECK(r.suf2_slack == doctest::Approx(-0.4609532255).epsilon(1e-8));
  CHECK_FALSE(r.zero_case);
  CHECK(r.weak_case);
  CHECK_FALSE(r.mixed_case);
  CHECK_FALSE(r.weak_necessary);
  CHECK(r.suf1);
  CHECK_FALSE(r.suf2);
  CHECK_FALSE(r.strong_sufficient);
}

TEST_CASE("analytic tests: frozen far-field instance") {
  const PredicateReport r = evaluate_predicates(mismatch_game(-1.0, 0.0));
  CHECK(r.zero_slack == doctest::Approx(-1.8).epsilon(1e-9));
  CHECK(r.weak_slack == doctest::Approx(-1.44).epsilon(1e-9));
  CHECK(r.mixed_slack == doctest::Approx(-0.5152946438).epsilon(1e-8));
  CHECK(r.suf1_slack == doctest::Approx(-1.04).epsilon(1e-9));
  CHECK(r.suf2_slack == doctest::Approx(-0.5245972857).epsilon(1e-8));
  CHECK_FALSE(r.weak_necessary);
  CHECK_FALSE(r.strong_sufficient);
}

TEST_CASE("analytic tests: target on the estimate is indeterminate") {
  const PredicateReport r = evaluate_predicates(mismatch_game(0.8, 0.0));
  CHECK(r.mixed_case_indeterminate);
  CHECK(std::isnan(r.mixed_slack));
  CHECK_FALSE(r.mixed_case);
  // zero_slack is exactly zero there, so the composite still holds.
  CHECK(r.zero_slack == doctest::Approx(0.0));
  CHECK(r.weak_necessary == r.zero_case);
}

TEST_CASE("equal-means forms: frozen scalar instances") {
  {
    const PredicateReport r =
        evaluate_predicates_equal_means(equal_means_scalar(-0.2));
    CHECK(r.zero_slack == doctest::Approx(-0.24).epsilon(1e-12));
    CHECK(r.weak_slack == doctest::Approx(-1.2).epsilon(1e-12));
    CHECK(r.mixed_slack == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(r.suf1_slack == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(r.suf2_slack == doctest::Approx(0.8).epsilon(1e-12));
    CHECK_FALSE(r.zero_case);
    CHECK(r.weak_case);
    CHECK(r.mixed_case);
    CHECK(r.weak_necessary);
    CHECK(r.strong_sufficient);
    CHECK(r.collinear);
  }
  {
    const PredicateReport r =
        evaluate_predicates_equal_means(equal_means_scalar(-2.0));
    CHECK(r.zero_slack == doctest::Approx(-6.0).epsilon(1e-12));
    CHECK(r.weak_slack == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(r.mixed_slack == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.suf1_slack == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(r.suf2_slack == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_FALSE(r.weak_necessary);
    CHECK_FALSE(r.strong_sufficient);
  }
  {
    const PredicateReport r =
        evaluate_predicates_equal_means(equal_means_scalar(0.5));
    CHECK(r.zero_slack == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.zero_case);
    CHECK(r.weak_necessary);
    CHECK(r.suf1_slack == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(r.suf1);
    CHECK(r.suf2_slack == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(r.strong_sufficient);
  }
  {
    // Target on the model mean: the reach test is trivially met.
    const PredicateReport r =
        evaluate_predicates_equal_means(equal_means_scalar(0.0));
    CHECK(r.suf2_slack == 0.0);
    CHECK(r.suf2);
    CHECK(r.zero_case);
    CHECK(r.suf1);
    CHECK(r.strong_sufficient);
  }
}

TEST_CASE("equal-means forms require equal means") {
  CHECK_THROWS_AS(evaluate_predicates_equal_means(mismatch_game(0.2, 0.2)),
                  ParamsMismatch);
}

TEST_CASE("general and reduced forms agree when means coincide") {
  Rng rng(424242);
  for (int it = 0; it < 500; ++it) {
    const int k = 2 + static_cast<int>(rng.uniform01() * 1.999);
    GameParams p = tgt::random_params(rng, k);
    p.zeta = p.mu;
    const PredicateReport g = evaluate_predicates(p);
    const PredicateReport r = evaluate_predicates_equal_means(p);
    CHECK(g.zero_case == r.zero_case);
    CHECK(g.weak_case == r.weak_case);
    CHECK(g.mixed_case == r.mixed_case);
    CHECK(g.weak_necessary == r.weak_necessary);
    CHECK(g.suf1 == r.suf1);
    CHECK(g.strong_sufficient == r.strong_sufficient);
    CHECK(g.zero_slack == doctest::Approx(r.zero_slack).epsilon(1e-9));
    CHECK(g.weak_slack == doctest::Approx(r.weak_slack).epsilon(1e-9));
    if (!g.mixed_case_indeterminate) {
      CHECK(g.mixed_slack == doctest::Approx(r.mixed_slack).epsilon(1e-9));
    }
    if (r.suf1) {
      CHECK(g.suf2 == r.suf2);
      CHECK(g.suf2_slack == doctest::Approx(r.suf2_slack).epsilon(1e-9));
    }
  }
}

TEST_CASE("mismatch budget validation and whole-space bound") {
  CHECK_THROWS_AS(MismatchBudget(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(MismatchBudget(1.1), std::invalid_argument);
  CHECK_THROWS_AS(MismatchBudget(std::nan("")), std::invalid_argument);
  CHECK(MismatchBudget(0.0).epsilon() == 0.0);
  CHECK(MismatchBudget(1.0).epsilon() == 1.0);

  // eps/(1+eps) * ||y_hat - mu|| = 0.2 exactly: boundary included.
  const GameParams p = make_params(vec({1.0, 0.0}), vec({0.0, 0.0}),
                                   vec({0.2, 0.0}), vec({0.5, 0.3}));
  CHECK(mismatch_within_budget(p, MismatchBudget(0.25)));
  GameParams q = p;
  q.zeta = vec({0.2000001, 0.0});
  CHECK_FALSE(mismatch_within_budget(q, MismatchBudget(0.25)));
}

TEST_CASE("in-hull mismatch bound follows from the whole-space bound") {
  const GameParams p = make_params(vec({1.0, 0.0}), vec({0.0, 0.0}),
                                   vec({0.2, 0.0}), vec({0.5, 0.3}));
  CHECK(projected_mismatch_within_budget(p, MismatchBudget(0.25)));
  CHECK(projected_mismatch_within_budget(p, MismatchBudget(0.25), 1e-9));

  GameParams far = p;
  far.zeta = vec({0.9, 0.0});
  CHECK_THROWS_AS(projected_mismatch_within_budget(far, MismatchBudget(0.25)),
                  PreconditionViolated);
}

TEST_CASE("zeta sample sets are deterministic and shaped by their radius") {
  ZetaSet zs;
  zs.center = vec({0.1, -0.1});
  zs.radius = 0.0;
  zs.sample_count = 50;
  zs.seed = 9;
  const auto center_only = zs.samples();
  REQUIRE(center_only.size() == 1);
  CHECK(tgt::max_abs_diff(center_only[0], zs.center) == 0.0);

  zs.radius = 0.3;
  const auto ball_draws = zs.samples();
  REQUIRE(ball_draws.size() == 51);
  for (const Vec& z : ball_draws) {
    CHECK((z - zs.center).norm() <= 0.3 + 1e-12);
  }
  const auto again = zs.samples();
  for (std::size_t i = 0; i < ball_draws.size(); ++i) {
    CHECK(tgt::max_abs_diff(ball_draws[i], again[i]) == 0.0);
  }

  zs.on_circle = true;
  const auto circle_draws = zs.samples();
  for (std::size_t i = 1; i < circle_draws.size(); ++i) {
    CHECK((circle_draws[i] - zs.center).norm() ==
          doctest::Approx(0.3).epsilon(1e-12));
  }
}

TEST_CASE("region predicates quantify the per-zeta tests") {
  GameParams base = make_params(vec({1.0, 0.0}), vec({0.0, 0.0}),
                                vec({0.0, 0.0}), vec({0.0, 0.0}));
  ZetaSet zs;
  zs.center = vec({0.0, 0.0});
  zs.radius = 0.25;
  zs.sample_count = 40;
  zs.seed = 31;

  const ZetaRegionPredicate uni = necessary_region_union(base, zs);
  const ZetaRegionPredicate inter = sufficient_region_intersection(base, zs);
  CHECK(uni.mode() == ZetaRegionPredicate::Mode::kUnionNecessary);
  CHECK(inter.mode() == ZetaRegionPredicate::Mode::kIntersectionSufficient);
  REQUIRE(uni.zeta_samples().size() == 41);

  Rng rng(77);
  for (int it = 0; it < 60; ++it) {
    const Vec y_attack = tgt::uniform_vec(rng, 2, -1.5, 1.5);
    bool any = false, all = true;
    GameParams p = base;
    p.y_attack = y_attack;
    for (const Vec& z : uni.zeta_samples()) {
      p.zeta = z;
      const PredicateReport rep = evaluate_predicates(p);
      any = any || rep.weak_necessary;
      all = all && rep.strong_sufficient;
    }
    CHECK(uni.contains(y_attack) == any);
    CHECK(inter.contains(y_attack) == all);
  }

  // The intersection region is contained in the union region: each
  // per-zeta sufficient region sits inside its necessary region.
  for (int it = 0; it < 40; ++it) {
    const Vec y_attack = tgt::uniform_vec(rng, 2, -1.0, 1.0);
    if (inter.contains(y_attack)) CHECK(uni.contains(y_attack));
  }
}

TEST_CASE("region predicate input validation") {
  GameParams base = make_params(vec({1.0, 0.0}), vec({0.0, 0.0}),
                                vec({0.0, 0.0}), vec({0.0, 0.0}));
  CHECK_THROWS_AS(
      ZetaRegionPredicate(ZetaRegionPredicate::Mode::kUnionNecessary, base,
                          {}),
      PreconditionViolated);
  CHECK_THROWS_AS(
      ZetaRegionPredicate(ZetaRegionPredicate::Mode::kUnionNecessary, base,
                          {vec({1.0})}),
      PreconditionViolated);
  const ZetaRegionPredicate ok(ZetaRegionPredicate::Mode::kUnionNecessary,
                               base, {vec({0.0, 0.0})});
  CHECK_THROWS_AS(ok.contains(vec({1.0})), PreconditionViolated);
}

TEST_CASE("nested ladders share their draws and stay monotone") {
  GameParams base = make_params(vec({1.0, 0.0}), vec({0.0, 0.0}),
                                vec({0.0, 0.0}), vec({0.0, 0.0}));
  const Vec center = vec({0.0, 0.0});
  const std::vector<double> radii{0.0, 0.2, 0.4};

  const auto ladder = nested_region_predicates(
      ZetaRegionPredicate::Mode::kUnionNecessary, base, center, radii, 30, 5);
  REQUIRE(ladder.size() == 3);
  CHECK(ladder[0].zeta_samples().size() == 1);
  CHECK(ladder[1].zeta_samples().size() == 31);
  CHECK(ladder[2].zeta_samples().size() == 61);

  // Smaller-radius samples reappear untouched inside larger ones.
  for (std::size_t i = 0; i < ladder[1].zeta_samples().size(); ++i) {
    CHECK(tgt::max_abs_diff(ladder[2].zeta_samples()[i],
                            ladder[1].zeta_samples()[i]) == 0.0);
  }

  Rng rng(3);
  for (int it = 0; it < 50; ++it) {
    const Vec y_attack = tgt::uniform_vec(rng, 2, -1.5, 1.5);
    bool prev = ladder[0].contains(y_attack);
    for (std::size_t i = 1; i < ladder.size(); ++i) {
      const bool cur = ladder[i].contains(y_attack);
      CHECK(cur >= prev);  // union regions only grow with the radius
      prev = cur;
    }
  }

  CHECK_THROWS_AS(
      nested_region_predicates(ZetaRegionPredicate::Mode::kUnionNecessary,
                               base, center, {0.4, 0.2}, 10, 5),
      PreconditionViolated);
  CHECK_THROWS_AS(
      nested_region_predicates(ZetaRegionPredicate::Mode::kUnionNecessary,
                               base, center, {}, 10, 5),
      PreconditionViolated);
}
