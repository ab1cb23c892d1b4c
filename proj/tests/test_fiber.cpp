#include "support.hpp"

#include <doctest.h>

using namespace simplex_lab;

namespace {

ComplexEdges perturb(const ComplexEdges& s, double size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-size, size);
  auto out = s;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += Complex(u(rng), u(rng));
  return out;
}

bool contains_within(const std::vector<ComplexEdges>& set, const ComplexEdges& x, double tol) {
  return std::any_of(set.begin(), set.end(), [&](const auto& e) { return max_distance(e, x) < tol; });
}

}  // namespace

TEST_SUITE("fiber_tracker") {

TEST_CASE("config validation") {
  TrackerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.step_min = 1.0;
  CHECK_THROWS_AS(cfg.validate(), PreconditionError);
  cfg = TrackerConfig{};
  cfg.newton_tol = 0;
  CHECK_THROWS_AS(cfg.validate(), PreconditionError);
  CHECK(std::abs(std::abs(TrackerConfig{}.resolved_gamma()) - 1.0) < 1e-15);
}

TEST_CASE("newton fixed point and recovery") {
  const TrackerConfig cfg;
  const auto y0 = equiareal_point(4);
  const auto ones = SquaredEdgeVector<Complex>::constant(4, Complex(1));
  const auto fixed = newton_correct(ones, y0, cfg);
  CHECK(fixed.status == NewtonStatus::Converged);
  CHECK(max_distance(fixed.point, ones) < 1e-12);

  const auto back = newton_correct(perturb(ones, 1e-4, 1), y0, cfg);
  CHECK(back.status == NewtonStatus::Converged);
  CHECK(max_distance(back.point, ones) < 1e-10);

  const auto xg = make_point(4, parse_label(4, "cycle:0-1-3-2-4")).as_complex();
  const auto back_g = newton_correct(perturb(xg, 1e-4, 2), y0, cfg);
  CHECK(back_g.status == NewtonStatus::Converged);
  CHECK(max_distance(back_g.point, xg) < 1e-10);
}

TEST_CASE("area residual") {
  const auto ones = SquaredEdgeVector<Complex>::constant(4, Complex(1));
  CHECK(area_residual(ones, equiareal_point(4)) < 1e-15);
  CHECK(area_residual(-ones, equiareal_point(4)) < 1e-15);
}

TEST_CASE("zero-length homotopy returns the catalog") {
  TrackerConfig cfg;
  const auto r = track_fiber(equiareal_point(4), cfg);
  REQUIRE(r.endpoints.size() == 64);
  CHECK(r.path_failures == 0);
  for (const auto& p : build_catalog(4)) CHECK(contains_within(r.endpoints, p.as_complex(), 1e-10));
}

TEST_CASE("real simplex target recovers plus and minus s") {
  TrackerConfig cfg;
  cfg.seed = 3;
  const auto s_true = random_real_simplex(4, 5, 0.05);
  const auto r = track_fiber(area_map(s_true), cfg);
  CHECK(r.endpoints.size() == 64);
  for (double res : r.residuals) CHECK(res < 1e-8);
  CHECK(contains_within(r.endpoints, s_true, 1e-6));
  CHECK(contains_within(r.endpoints, -s_true, 1e-6));
}

TEST_CASE("perturbed targets: negation pairs, classes, determinism") {
  TrackerConfig cfg;
  cfg.seed = 9;
  const auto target = perturbed_equiareal_target(4, 1e-2, 17);
  const auto r = track_fiber(target, cfg);
  CHECK(r.endpoints.size() == 64);
  CHECK(r.path_failures == 0);
  CHECK(r.negation_pair_count == 32);
  CHECK(r.class_count <= 32);
  for (std::size_t i = 0; i < r.negation.size(); ++i) {
    REQUIRE(r.negation[i].has_value());
    const auto j = *r.negation[i];
    CHECK(j != i);
    CHECK(r.negation[j] == i);
    CHECK(max_distance(r.endpoints[j], -r.endpoints[i]) < cfg.dedupe_tol);
  }
  const auto again = track_fiber(target, cfg);
  REQUIRE(again.endpoints.size() == r.endpoints.size());
  for (std::size_t i = 0; i < r.endpoints.size(); ++i) CHECK(r.endpoints[i] == again.endpoints[i]);
  CHECK(again.class_count == r.class_count);
}

TEST_CASE("tracker preconditions") {
  CHECK_THROWS_AS(track_fiber(equiareal_point(5), TrackerConfig{}), PreconditionError);
}

TEST_CASE("probe buckets") {
  TrackerConfig cfg;
  const auto s_true = random_real_simplex(5, 21);
  CHECK(probe_from(s_true, s_true, cfg) == ProbeBucket::Plus);
  CHECK(probe_from(perturb(-s_true, 1e-3, 4), s_true, cfg) == ProbeBucket::Minus);
  const auto report = local_uniqueness_probe(s_true, 40, cfg);
  CHECK(report.trials == 40);
  CHECK(report.converged + report.not_converged == 40);
  CHECK(report.plus + report.minus == report.converged);
  CHECK(report.ok());
  CHECK_THROWS_AS(local_uniqueness_probe(random_real_simplex(4, 1), 5, cfg), PreconditionError);
}

TEST_CASE("random simplices are real and nondegenerate") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto s = random_real_simplex(5, seed);
    for (const auto& x : s.entries()) {
      CHECK(x.imag() == 0.0);
      CHECK(x.real() > 0.0);
    }
    CHECK(cm_volume_squared(s).value.real() > 0.0);
  }
}

}  // TEST_SUITE
