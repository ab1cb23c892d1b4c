#pragma once

#include "simplex_lab/laurent.hpp"
#include "simplex_lab/metrics.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace simplex_lab {

using LaurentEdges = SquaredEdgeVector<LaurentPoly>;
using LaurentAreas = SquaredAreaVector<LaurentPoly>;

enum class CurveFamily { Odd, N5, N4 };

std::string to_string(CurveFamily f);

/// Squared edge lengths along a one-parameter curve t -> s(t).
struct EdgeCurve {
  CurveFamily family;
  int q = 0;  // odd family only
  std::optional<std::array<Rational, 3>> parameters;  // (a, b, c) for N5/N4
  LaurentEdges edges;

  int n() const { return edges.n(); }
};

/// n = 2q-1: s_ij = 0 inside each half {0..q-1}, {q..2q-1}; t across the
/// halves except s_{r,q+r} = t+1 for r = 1..q-1. Requires q >= 3.
EdgeCurve odd_curve(int q);

/// The n = 5 curve with edge lengths linear in t, t^-1 and t^-3; entries are
/// the squared lengths. Requires a, b, c != 0 and a + b != 0.
EdgeCurve n5_curve(const Rational& a, const Rational& b, const Rational& c);

/// The n5 curve with vertex 5 dropped.
EdgeCurve n4_curve(const Rational& a, const Rational& b, const Rational& c);

struct OddCurveReport {
  int q = 0;
  int n = 0;
  bool ok = false;
  LaurentPoly volume;           // computed W(s(t))
  LaurentPoly expected_volume;  // (-4)^(1-q) (n!)^-2 t
  std::vector<std::string> failures;
};

/// Exact check of the odd curve: S_ijk = -1/16 when {i,j,k} contains some
/// {r, q+r} with 1 <= r <= q-1, 0 otherwise; W = (-4)^(1-q) (n!)^-2 t.
OddCurveReport verify_odd_curve(int q);

/// Which quantity an asymptotic claim is about.
struct Quantity {
  std::optional<Triple> triple;  // empty: the squared volume W

  static Quantity volume() { return {}; }
  static Quantity area(int i, int j, int k) { return {Triple{i, j, k}}; }
  std::string to_string() const;
};

/// quantity = coefficient * t^degree + O(t^remainder_bound)
struct AsymptoticClaim {
  Quantity quantity;
  int degree;
  Rational coefficient;
  int remainder_bound;
};

struct ClaimResult {
  AsymptoticClaim claim;
  LaurentPoly computed;
  bool ok = false;
  std::string detail;
};

struct AsymptoticsReport {
  bool ok = false;
  std::vector<ClaimResult> results;
};

/// Checks each claim exactly: top degree and coefficient match, and after
/// removing the leading term the top degree is <= remainder_bound.
AsymptoticsReport verify_asymptotics(const EdgeCurve& curve, const std::vector<AsymptoticClaim>& claims);

/// The displayed leading-term claims for the n5 curve at its parameters.
std::vector<AsymptoticClaim> n5_claims(const Rational& a, const Rational& b, const Rational& c);
/// W = -(1/144) a^2 b^2 (a+b)^2 t^4 + O(1) for the n4 curve.
std::vector<AsymptoticClaim> n4_claims(const Rational& a, const Rational& b, const Rational& c);

// ---- witness polynomials ----

enum class WitnessKind { One, Q, P, D, PD };

struct WitnessPolynomial {
  WitnessKind kind = WitnessKind::One;
  std::array<int, 5> indices{0, 1, 2, 3, 4};  // for P and PD

  static WitnessPolynomial one() { return {WitnessKind::One, {}}; }
  static WitnessPolynomial q() { return {WitnessKind::Q, {}}; }
  static WitnessPolynomial p(std::array<int, 5> idx) { return {WitnessKind::P, idx}; }
  static WitnessPolynomial d() { return {WitnessKind::D, {}}; }
  static WitnessPolynomial pd(std::array<int, 5> idx) { return {WitnessKind::PD, idx}; }

  std::string to_string() const;
};

/// Parses "1", "Q", "D", "P", "PD"; P and PD take `indices`.
WitnessPolynomial parse_witness(const std::string& kind, std::array<int, 5> indices = {0, 1, 2, 3, 4});

namespace detail {
void check_witness_arity(const WitnessPolynomial& w, int n);
}

/// Evaluates a witness polynomial in the S variables.
///   Q  (n = 4): prod over i<j of 2S_ijk S_ijl + 2S_ijl S_ijm + 2S_ijm S_ijk - S_ijk^2 - S_ijl^2 - S_ijm^2
///   P  (n >= 4): prod of S over the 10 triples of the five indices
///   D  (n = 5): prod of (S_ijk - S_ijl) over distinct i,j,k,l with i<j, k<l
template <Scalar T>
T evaluate_witness(const WitnessPolynomial& w, const SquaredAreaVector<T>& s) {
  const int n = s.n();
  detail::check_witness_arity(w, n);
  const T one = RingTraits<T>::embed(Rational(1), s[0]);
  T out = one;
  auto mul_p = [&] {
    const auto& idx = w.indices;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b)
        for (std::size_t c = b + 1; c < 5; ++c) out = out * s.at(idx[a], idx[b], idx[c]);
  };
  auto mul_d = [&] {
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 0; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (k == i || k == j || l == i || l == j) continue;
            out = out * (s.at(i, j, k) - s.at(i, j, l));
          }
  };
  switch (w.kind) {
    case WitnessKind::One: break;
    case WitnessKind::Q: {
      const T two = RingTraits<T>::embed(Rational(2), s[0]);
      for (int i = 0; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
          std::array<int, 3> rest{};
          std::size_t r = 0;
          for (int v = 0; v <= 4; ++v)
            if (v != i && v != j) rest[r++] = v;
          const T& x = s.at(i, j, rest[0]);
          const T& y = s.at(i, j, rest[1]);
          const T& z = s.at(i, j, rest[2]);
          out = out * (two * (x * y + y * z + z * x) - x * x - y * y - z * z);
        }
      break;
    }
    case WitnessKind::P: mul_p(); break;
    case WitnessKind::D: mul_d(); break;
    case WitnessKind::PD:
      mul_p();
      mul_d();
      break;
  }
  return out;
}

struct WitnessCertificate {
  std::string witness;
  Degree volume_degree = Degree::minus_infinity();   // top degree of W(s(t))
  Degree product_degree = Degree::minus_infinity();  // top degree of w(S(s(t))) W(s(t))
  LaurentPoly product;
  bool passed = false;  // product_degree <= 0
};

/// Computes w(S(s(t))) * W(s(t)) exactly along the curve. Throws
/// PreconditionError if some S_ijk(s(t)) is unbounded (top degree > 0).
WitnessCertificate witness_degree_certificate(const EdgeCurve& curve, const WitnessPolynomial& w);

}  // namespace simplex_lab
