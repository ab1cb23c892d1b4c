#pragma once

#include "simplex_lab/indexing.hpp"
#include "simplex_lab/metrics.hpp"

#include <string>
#include <variant>
#include <vector>

namespace simplex_lab {

/// A set of pairwise-disjoint vertex pairs on {0..n}, stored sorted.
class PartialPairing {
public:
  PartialPairing(int n, std::vector<Pair> pairs);

  int n() const { return n_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(int i, int j) const;

  /// "0-1,2-3"; empty string for the empty pairing.
  std::string to_string() const;

  friend bool operator==(const PartialPairing&, const PartialPairing&) = default;
  friend auto operator<=>(const PartialPairing& x, const PartialPairing& y) { return x.pairs_ <=> y.pairs_; }

private:
  int n_;
  std::vector<Pair> pairs_;
};

/// A Hamiltonian cycle on {0,1,2,3,4}, stored as its vertex order starting
/// at 0 with order[1] < order[4] to fix the direction.
class FiveCycle {
public:
  explicit FiveCycle(std::array<int, 5> order);

  const std::array<int, 5>& order() const { return order_; }
  std::array<Pair, 5> edges() const;
  bool contains(int i, int j) const;
  /// "0-1-2-3-4"
  std::string to_string() const;

  friend bool operator==(const FiveCycle&, const FiveCycle&) = default;

private:
  std::array<int, 5> order_;
};

/// Closed-form count of partial pairings on n+1 points.
std::size_t partial_pairing_count(int n);

/// Every partial pairing on {0..n}, in lexicographic order of pair lists.
std::vector<PartialPairing> enumerate_partial_pairings(int n);

/// The 12 five-cycles on {0..4}.
std::vector<FiveCycle> enumerate_five_cycles();

struct PairingLabel {
  PartialPairing pairing;
  int sigma;  // +1 or -1
};
using CatalogLabel = std::variant<PairingLabel, FiveCycle>;

/// "pairing:0-1,2-3:+1" or "cycle:0-1-2-3-4".
std::string label_string(const CatalogLabel& label);
/// Inverse of label_string; throws ParseError.
CatalogLabel parse_label(int n, const std::string& text);

using RationalEdges = SquaredEdgeVector<Rational>;
using QuadExtEdges = SquaredEdgeVector<QuadExt>;

/// A known preimage of the equiareal point. Pairing points are rational;
/// cycle points live in Q(sqrt(-15)).
struct CatalogPoint {
  CatalogLabel label;
  std::variant<RationalEdges, QuadExtEdges> coordinates;

  std::string name() const { return label_string(label); }
  bool is_cycle() const { return std::holds_alternative<FiveCycle>(label); }
  /// Coordinates lifted into Q(sqrt(-15)).
  QuadExtEdges as_quadext() const;
  /// Coordinates as complex doubles.
  SquaredEdgeVector<Complex> as_complex() const;
};

/// s_ij = sigma off the pairing, 3 sigma on it.
RationalEdges pairing_point(const PartialPairing& omega, int sigma);
/// s_ij = +sqrt(-3/5) on the cycle, -sqrt(-3/5) off it.
QuadExtEdges cycle_point(const FiveCycle& gamma);
CatalogPoint make_point(int n, const CatalogLabel& label);

/// All 2 r_n pairing points (plus the 12 cycle points when n = 4).
/// Throws PreconditionError for n < 4.
std::vector<CatalogPoint> build_catalog(int n);

/// The equiareal value 3/16.
inline Rational equiareal_value() { return Rational(3, 16); }

struct FiberFailure {
  std::string point;
  Triple triple;
  std::string value;
};

struct FiberReport {
  int n = 0;
  std::size_t count = 0;
  bool fiber_ok = false;
  std::vector<FiberFailure> failures;
};

/// Exact check that every catalog point maps to y0 (all S_ijk = 3/16).
FiberReport verify_fiber(int n);
FiberReport verify_points(int n, const std::vector<CatalogPoint>& points);

struct VolumeEntry {
  std::string point;
  QuadExt volume;  // always rational at catalog points, kept in Q(sqrt(-15))
};

/// Exact W at every n = 4 catalog point, in catalog order.
std::vector<VolumeEntry> volume_table(int n);

enum class TetrahedronCase {
  OppositeEdgesEqual,  // s12=s03, s13=s02, s23=s01
  Cyclic123,           // (i,j,k) = (1,2,3)
  Cyclic231,           // (i,j,k) = (2,3,1)
  Cyclic312,           // (i,j,k) = (3,1,2)
};

std::string to_string(TetrahedronCase c);

/// Which structural cases an equiareal tetrahedron (all S = 3/16) falls in.
/// The cyclic case for (i,j,k) means s_ij = s_0k, s_ik = s_0j and
/// s_jk + s_0i - 2 s_0j - 2 s_0k = 0. Returns every case that holds, in
/// enum order. Throws PreconditionError if the areas are not all 3/16 and
/// ContradictionError if no case holds.
template <ExactScalar T>
std::vector<TetrahedronCase> classify_equiareal_tetrahedron(const SquaredEdgeVector<T>& s) {
  if (s.n() != 3) throw PreconditionError("classify_equiareal_tetrahedron: need n = 3");
  const T target = RingTraits<T>::embed(equiareal_value(), s[0]);
  const auto areas = area_map(s);
  for (const auto& area : areas.entries())
    if (!(area == target)) throw PreconditionError("classify_equiareal_tetrahedron: areas are not all 3/16");

  std::vector<TetrahedronCase> out;
  if (s.at(1, 2) == s.at(0, 3) && s.at(1, 3) == s.at(0, 2) && s.at(2, 3) == s.at(0, 1))
    out.push_back(TetrahedronCase::OppositeEdgesEqual);
  const std::array<std::array<int, 3>, 3> cycles{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
  const std::array<TetrahedronCase, 3> tags{TetrahedronCase::Cyclic123, TetrahedronCase::Cyclic231,
                                            TetrahedronCase::Cyclic312};
  const T two = RingTraits<T>::embed(Rational(2), s[0]);
  for (std::size_t c = 0; c < 3; ++c) {
    const auto [i, j, k] = cycles[c];
    const T relation = s.at(j, k) + s.at(0, i) - two * s.at(0, j) - two * s.at(0, k);
    if (s.at(i, j) == s.at(0, k) && s.at(i, k) == s.at(0, j) && RingTraits<T>::is_zero(relation))
      out.push_back(tags[c]);
  }
  if (out.empty()) throw ContradictionError("equiareal tetrahedron satisfies no structural case");
  return out;
}

struct TetrahedronCheck {
  std::string point;
  std::array<int, 4> vertices;
  std::vector<TetrahedronCase> cases;  // empty on failure
  std::string error;
};

/// Classifies every 4-vertex restriction of every catalog point.
std::vector<TetrahedronCheck> classify_catalog_tetrahedra(int n);

}  // namespace simplex_lab
