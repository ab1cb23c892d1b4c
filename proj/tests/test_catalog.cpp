#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace simplex_lab;
using test_support::all_equal;

namespace {

std::size_t factorial(std::size_t k) { return k < 2 ? 1 : k * factorial(k - 1); }

/// sum_k (n+1)! / (k! 2^k (n+1-2k)!), the number of partial matchings of n+1 vertices.
std::size_t matchings_closed_form(int n) {
  const std::size_t v = static_cast<std::size_t>(n) + 1;
  std::size_t total = 0;
  for (std::size_t k = 0; 2 * k <= v; ++k) total += factorial(v) / (factorial(k) * (1u << k) * factorial(v - 2 * k));
  return total;
}

template <class Edges>
bool fiber_member(const Edges& s) {
  const auto areas = area_map(s);
  for (const auto& a : areas.entries())
    if (!(a == RingTraits<std::decay_t<decltype(a)>>::embed(Rational(3, 16), a))) return false;
  return true;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("partial pairing counts") {
  CHECK(partial_pairing_count(1) == 2);
  CHECK(enumerate_partial_pairings(1).size() == 2);
  CHECK(enumerate_partial_pairings(4).size() == 26);
  CHECK(enumerate_partial_pairings(5).size() == 76);
  CHECK(matchings_closed_form(5) == 1 + 15 + 45 + 15);
  for (int n = 1; n <= 8; ++n) {
    CHECK(partial_pairing_count(n) == matchings_closed_form(n));
    CHECK(enumerate_partial_pairings(n).size() == matchings_closed_form(n));
  }
}

TEST_CASE("pairings are disjoint and distinct") {
  const auto all = enumerate_partial_pairings(5);
  std::set<std::string> names;
  for (const auto& p : all) names.insert(p.to_string());
  CHECK(names.size() == all.size());
  CHECK_THROWS_AS(PartialPairing(4, {{0, 1}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(PartialPairing(4, {{0, 5}}), PreconditionError);
}

TEST_CASE("five-cycles") {
  const auto cycles = enumerate_five_cycles();
  CHECK(cycles.size() == 12);
  std::set<std::set<std::pair<int, int>>> edge_sets;
  for (const auto& g : cycles) {
    std::set<std::pair<int, int>> e;
    for (const auto& [i, j] : g.edges()) e.insert({std::min(i, j), std::max(i, j)});
    CHECK(e.size() == 5);
    edge_sets.insert(e);
  }
  CHECK(edge_sets.size() == 12);
  // reversal and rotation give the same cycle
  CHECK(FiveCycle({0, 1, 2, 3, 4}).to_string() == FiveCycle({2, 1, 0, 4, 3}).to_string());
}

TEST_CASE("catalog sizes") {
  CHECK(build_catalog(4).size() == 64);
  CHECK(build_catalog(5).size() == 152);
  CHECK(build_catalog(6).size() == 464);
  std::size_t cycles = 0;
  for (const auto& p : build_catalog(4)) cycles += p.is_cycle();
  CHECK(cycles == 12);
  CHECK_THROWS_AS(build_catalog(3), PreconditionError);
}

TEST_CASE("catalog points lie in the equiareal fiber") {
  CHECK(all_equal(area_map(pairing_point(PartialPairing(4, {}), 1)), Rational(3, 16)));
  for (const auto& g : enumerate_five_cycles()) CHECK(fiber_member(cycle_point(g)));
  const PartialPairing omega(6, {{0, 1}, {2, 3}, {4, 5}});
  const auto x = pairing_point(omega, -1);
  CHECK(area_map(x).size() == 35);
  CHECK(all_equal(area_map(x), Rational(3, 16)));
  for (int n : {4, 5}) CHECK(verify_fiber(n).fiber_ok);
}

TEST_CASE("pairing point coordinates") {
  const auto x = pairing_point(PartialPairing(4, {{0, 1}}), -1);
  CHECK(x.at(0, 1) == Rational(-3));
  CHECK(x.at(2, 3) == Rational(-1));
  CHECK(heron_area_squared(Rational(3), Rational(1), Rational(1)) == Rational(3, 16));
}

TEST_CASE("cycle point coordinates solve the quadratic") {
  const auto x = cycle_point(FiveCycle({0, 1, 2, 3, 4}));
  const QuadExt on = x.at(0, 1), off = x.at(0, 2);
  CHECK(on == -off);
  CHECK(on * on == QuadExt::embed(Rational(-3, 5), -15));
}

TEST_CASE("volume table") {
  const auto table = volume_table(4);
  REQUIRE(table.size() == 64);
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto label = parse_label(4, table[k].point);
    Rational expected;
    if (std::holds_alternative<FiveCycle>(label)) {
      expected = Rational(5, 1024);
    } else {
      const auto size = std::get<PairingLabel>(label).pairing.size();
      expected = size == 0 ? Rational(5, 9216) : (size == 1 ? Rational(-1, 3072) : Rational(-3, 1024));
    }
    CHECK(table[k].volume == QuadExt::embed(expected, -15));
  }
  CHECK(Rational(-1, 3072) == -Rational(1) / (Rational(2).pow(10) * Rational(3)));
  CHECK(Rational(-3, 1024) == -Rational(3) / Rational(2).pow(10));
  CHECK(Rational(5, 1024) == Rational(5) / Rational(2).pow(10));
}

TEST_CASE("labels round-trip") {
  for (const auto& p : build_catalog(5)) CHECK(label_string(parse_label(5, p.name())) == p.name());
  CHECK(label_string(parse_label(4, "pairing::-1")) == "pairing::-1");
  CHECK(label_string(parse_label(4, "cycle:0-1-2-3-4")) == "cycle:0-1-2-3-4");
  CHECK_THROWS_AS(parse_label(4, "pairing:0-1:+2"), ParseError);
  CHECK_THROWS_AS(parse_label(4, "cycle:0-1-2-3"), ParseError);
  CHECK_THROWS_AS(parse_label(4, "triangle:0-1-2"), ParseError);
  CHECK_THROWS_AS(parse_label(4, "pairing:0-7:+1"), ParseError);
  CHECK_THROWS_AS(parse_label(5, "cycle:0-1-2-3-5"), ParseError);
}

TEST_CASE("tetrahedron classification") {
  const auto regular = SquaredEdgeVector<Rational>::constant(3, Rational(1));
  const auto cases = classify_equiareal_tetrahedron(regular);
  CHECK(std::find(cases.begin(), cases.end(), TetrahedronCase::OppositeEdgesEqual) != cases.end());

  const auto x = pairing_point(PartialPairing(4, {{0, 1}, {2, 3}}), 1);
  const auto both = classify_equiareal_tetrahedron(restrict_to(x, {0, 1, 2, 3}));
  CHECK(std::find(both.begin(), both.end(), TetrahedronCase::OppositeEdgesEqual) != both.end());

  for (const auto& g : enumerate_five_cycles()) {
    const auto s = cycle_point(g);
    for (int drop = 0; drop <= 4; ++drop) {
      std::vector<int> keep;
      for (int v = 0; v <= 4; ++v)
        if (v != drop) keep.push_back(v);
      CHECK_FALSE(classify_equiareal_tetrahedron(restrict_to(s, keep)).empty());
    }
  }

  const auto checks = classify_catalog_tetrahedra(4);
  CHECK(checks.size() == 64 * 5);
  for (const auto& c : checks) CHECK_MESSAGE(!c.cases.empty(), c.point << " " << c.error);

  CHECK_THROWS_AS(classify_equiareal_tetrahedron(SquaredEdgeVector<Rational>::constant(3, Rational(2))),
                  PreconditionError);
  CHECK_THROWS_AS(classify_equiareal_tetrahedron(SquaredEdgeVector<Rational>::constant(4, Rational(1))),
                  PreconditionError);
}

}  // TEST_SUITE
