#include "support.hpp"

#include <doctest.h>

using namespace simplex_lab;

TEST_SUITE("linearization") {

TEST_CASE("hand-computed entries") {
  const auto ones = SquaredEdgeVector<Rational>::constant(4, Rational(1));
  const auto d = jacobian(ones);
  CHECK(d.rows() == 10);
  CHECK(d.cols() == 10);
  CHECK(d(triple_index(4, 0, 1, 2), pair_index(4, 0, 1)) == Rational(1, 8));
  CHECK(d(triple_index(4, 0, 1, 2), pair_index(4, 3, 4)) == Rational(0));
  const auto x = pairing_point(PartialPairing(4, {{0, 1}}), 1);
  CHECK(jacobian(x)(triple_index(4, 0, 1, 2), pair_index(4, 0, 1)) == Rational(-1, 8));
}

TEST_CASE("zero pattern off the incidence") {
  std::mt19937_64 rng(31);
  const auto s = test_support::random_edges(rng, 5);
  const auto d = jacobian(s);
  for (std::size_t r = 0; r < d.rows(); ++r) {
    const auto t = triple_at(5, r);
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const auto p = pair_at(5, c);
      const bool inside = std::count(t.begin(), t.end(), p[0]) && std::count(t.begin(), t.end(), p[1]);
      if (!inside) CHECK(d(r, c).is_zero());
    }
  }
}

TEST_CASE("exact derivative of a quadratic map") {
  // S is quadratic, so (S(s + h e) - S(s - h e)) / (2h) equals the derivative exactly.
  std::mt19937_64 rng(32);
  const auto s = test_support::random_edges(rng, 4);
  const auto d = jacobian(s);
  const Rational h(1, 3);
  for (std::size_t c = 0; c < d.cols(); ++c) {
    auto up = s, down = s;
    up[c] += h;
    down[c] -= h;
    const auto su = area_map(up), sd = area_map(down);
    for (std::size_t r = 0; r < d.rows(); ++r) CHECK((su[r] - sd[r]) / (Rational(2) * h) == d(r, c));
  }
}

TEST_CASE("finite differences over complex numbers") {
  const auto x = make_point(4, parse_label(4, "cycle:0-1-2-3-4")).as_complex();
  const auto d = jacobian(x);
  const double h = 1e-5;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    auto up = x, down = x;
    up[c] += h;
    down[c] -= h;
    const auto su = area_map(up), sd = area_map(down);
    for (std::size_t r = 0; r < d.rows(); ++r) CHECK(std::abs((su[r] - sd[r]) / (2 * h) - d(r, c)) < 1e-6);
  }
}

TEST_CASE("ranks at catalog points") {
  CHECK(rank_exact(jacobian(SquaredEdgeVector<Rational>::constant(4, Rational(1)))) == 10);
  CHECK(rank_exact(jacobian(cycle_point(FiveCycle({0, 2, 4, 1, 3})))) == 10);
  for (int n : {4, 5})
    for (const auto& rc : catalog_jacobian_ranks(n)) CHECK_MESSAGE(rc.rank == rc.expected, rc.point);
}

TEST_CASE("image comparison") {
  const auto a = jacobian(pairing_point(PartialPairing(5, {{0, 1}}), 1));
  const auto b = jacobian(pairing_point(PartialPairing(5, {{0, 1}}), -1));
  const auto c = jacobian(pairing_point(PartialPairing(5, {{2, 3}}), 1));
  CHECK(images_equal(a, a));
  CHECK(images_equal(a, b));
  CHECK_FALSE(images_equal(a, c));
  Matrix<Rational> deficient(20, 15, Rational(0));
  CHECK_THROWS_WITH_AS(images_equal(deficient, a), doctest::Contains("first"), PreconditionError);
  CHECK_THROWS_WITH_AS(images_equal(a, deficient), doctest::Contains("second"), PreconditionError);
  CHECK_THROWS_AS(images_equal(a, Matrix<Rational>(20, 14, Rational(0))), PreconditionError);
}

TEST_CASE("small sweep") {
  std::vector<PairingLabel> labels;
  for (const auto& w : {PartialPairing(5, {}), PartialPairing(5, {{0, 1}}), PartialPairing(5, {{0, 1}, {2, 3}})})
    for (int sigma : {1, -1}) labels.push_back({w, sigma});
  const auto sweep = sweep_pairing_images(5, labels);
  CHECK(sweep.mismatches.empty());
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) CHECK(sweep.equal[i][j] == (i / 2 == j / 2));
}

TEST_CASE("sampled labels") {
  const auto a = sample_pairing_labels(6, 5, 1);
  CHECK(a.size() == 10);
  CHECK(a[0].pairing == a[1].pairing);
  CHECK(a[0].sigma == -a[1].sigma);
  const auto b = sample_pairing_labels(6, 5, 1);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(label_string(a[k]) == label_string(b[k]));
  CHECK_THROWS_AS(sample_pairing_labels(4, 27, 1), PreconditionError);
  const auto sweep = sweep_pairing_images(6, sample_pairing_labels(6, 4, 2));
  CHECK(sweep.mismatches.empty());
}

}  // TEST_SUITE
