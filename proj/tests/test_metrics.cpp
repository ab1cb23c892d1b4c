#include "support.hpp"

#include <doctest.h>

using namespace simplex_lab;
using namespace test_support;

TEST_SUITE("simplex_metrics") {

TEST_CASE("small exact examples") {
  CHECK(cm_volume_squared(SquaredEdgeVector<Rational>(1, {Rational(4)})).value == Rational(4));
  CHECK(gram_volume_squared(SquaredEdgeVector<Rational>(1, {Rational(4)})).value == Rational(4));
  const auto tri = SquaredEdgeVector<Rational>::constant(2, Rational(1));
  CHECK(gram_volume_squared(tri).value == Rational(3, 16));
  CHECK(area_map(tri).entries() == std::vector<Rational>{Rational(3, 16)});
  CHECK(cm_volume_squared(tri).value == Rational(3, 16));
  const auto ones = SquaredEdgeVector<Rational>::constant(4, Rational(1));
  CHECK(cm_volume_squared(ones).value == Rational(5, 9216));
  CHECK(gram_volume_squared(ones).value == Rational(5, 9216));
  CHECK(Rational(5, 9216) == Rational(5) / (Rational(2).pow(10) * Rational(9)));
  CHECK(all_equal(area_map(ones), Rational(3, 16)));
  CHECK(area_map(ones).size() == 10);
  CHECK(cayley_menger_denominator(4) == Rational(16 * 576));
}

TEST_CASE("heron formula") {
  CHECK(heron_area_squared(Rational(1), Rational(1), Rational(1)) == Rational(3, 16));
  CHECK(heron_area_squared(Rational(0), Rational(5), Rational(5)) == Rational(0));
  CHECK(heron_area_squared(Rational(3), Rational(1), Rational(1)) == Rational(3, 16));
  // 3-4-5 right triangle: area 6
  CHECK(heron_area_squared(Rational(9), Rational(16), Rational(25)) == Rational(36));
}

TEST_CASE("volume matches coordinate determinant oracle") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = random_points(rng, n);
      const auto s = edges_of(p);
      const Rational oracle = coordinate_volume_squared(p);
      CHECK(cm_volume_squared(s).value == oracle);
      CHECK(gram_volume_squared(s).value == oracle);
    }
}

TEST_CASE("areas match coordinate oracle") {
  std::mt19937_64 rng(22);
  for (int n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = random_points(rng, n);
      const auto areas = area_map(edges_of(p));
      for (const auto& [i, j, k] : triples(n)) CHECK(areas.at(i, j, k) == coordinate_area_squared(p, i, j, k));
    }
}

TEST_CASE("cayley-menger equals gram on arbitrary rational vectors") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const auto s = random_edges(rng, n);
      CHECK(cm_volume_squared(s).value == gram_volume_squared(s).value);
    }
}

TEST_CASE("sign, scaling and relabeling invariants") {
  std::mt19937_64 rng(24);
  for (int n = 2; n <= 5; ++n) {
    const auto s = random_edges(rng, n);
    CHECK(area_map(-s).entries() == area_map(s).entries());
    // W is homogeneous of degree n in s
    const Rational lambda(3, 2);
    CHECK(cm_volume_squared(scale_edges(s, lambda)).value == lambda.pow(n) * cm_volume_squared(s).value);
    // W(-s) = (-1)^n W(s)
    CHECK(cm_volume_squared(-s).value == Rational(n % 2 ? -1 : 1) * cm_volume_squared(s).value);
    std::vector<int> perm(static_cast<std::size_t>(n) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto t = permute_vertices(s, perm);
    CHECK(cm_volume_squared(t).value == cm_volume_squared(s).value);
    for (const auto& [i, j, k] : triples(n))
      CHECK(area_map(t).at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)],
                           perm[static_cast<std::size_t>(k)]) == area_map(s).at(i, j, k));
  }
}

TEST_CASE("restriction") {
  std::mt19937_64 rng(25);
  const auto p = random_points(rng, 4);
  const auto s = edges_of(p);
  const auto r = restrict_to(s, {0, 2, 4});
  CHECK(r.n() == 2);
  CHECK(cm_volume_squared(r).value == coordinate_area_squared(p, 0, 2, 4));
}

TEST_CASE("complex and exact rings agree") {
  const auto ones = SquaredEdgeVector<Complex>::constant(4, Complex(1));
  CHECK(std::abs(cm_volume_squared(ones).value - 5.0 / 9216.0) < 1e-15);
  const auto q = SquaredEdgeVector<QuadExt>::constant(4, QuadExt::embed(Rational(1), -15));
  CHECK(cm_volume_squared(q).value == QuadExt::embed(Rational(5, 9216), -15));
}

TEST_CASE("dimension preconditions") {
  CHECK_THROWS_AS(SquaredEdgeVector<Rational>(0, {}), PreconditionError);
  CHECK_THROWS_AS(SquaredEdgeVector<Rational>(3, {Rational(1)}), PreconditionError);
}

}  // TEST_SUITE
