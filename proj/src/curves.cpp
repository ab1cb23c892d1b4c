#include "simplex_lab/curves.hpp"

#include "simplex_lab/errors.hpp"

#include <set>
#include <sstream>

namespace simplex_lab {

std::string to_string(CurveFamily f) {
  switch (f) {
    case CurveFamily::Odd: return "odd";
    case CurveFamily::N5: return "n5";
    case CurveFamily::N4: return "n4";
  }
  return "unknown";
}

EdgeCurve odd_curve(int q) {
  if (q < 3) throw PreconditionError("odd_curve: q must be >= 3");
  const int n = 2 * q - 1;
  const LaurentPoly t = LaurentPoly::t();
  std::vector<LaurentPoly> entries;
  entries.reserve(pair_count(n));
  for (const auto& [i, j] : pairs(n)) {
    const bool same_half = (i < q) == (j < q);
    if (same_half)
      entries.emplace_back();
    else if (i >= 1 && j == q + i)
      entries.push_back(t + LaurentPoly(1));
    else
      entries.push_back(t);
  }
  return {CurveFamily::Odd, q, std::nullopt, LaurentEdges(n, std::move(entries))};
}

EdgeCurve n5_curve(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw PreconditionError("n5_curve: a, b, c must be nonzero");
  if ((a + b).is_zero()) throw PreconditionError("n5_curve: a + b must be nonzero");
  const LaurentPoly inv = LaurentPoly::monomial(Rational(1), -1);
  const LaurentPoly bt = LaurentPoly::monomial(b, 1);
  const LaurentPoly at = LaurentPoly::monomial(a, 1);
  const LaurentPoly mixed = LaurentPoly::monomial(a + b, 1) - LaurentPoly::monomial(c, -3);

  LaurentEdges lengths = LaurentEdges::constant(5, LaurentPoly());
  for (auto [i, j] : {Pair{0, 1}, Pair{4, 5}}) lengths.at(i, j) = inv;
  for (auto [i, j] : {Pair{0, 2}, Pair{1, 2}, Pair{3, 4}, Pair{3, 5}}) lengths.at(i, j) = bt;
  for (auto [i, j] : {Pair{0, 3}, Pair{1, 3}, Pair{2, 4}, Pair{2, 5}}) lengths.at(i, j) = at;
  for (auto [i, j] : {Pair{0, 4}, Pair{1, 4}, Pair{0, 5}, Pair{1, 5}, Pair{2, 3}}) lengths.at(i, j) = mixed;

  std::vector<LaurentPoly> squared;
  squared.reserve(lengths.size());
  for (const auto& l : lengths.entries()) squared.push_back(l * l);
  return {CurveFamily::N5, 0, std::array<Rational, 3>{a, b, c}, LaurentEdges(5, std::move(squared))};
}

EdgeCurve n4_curve(const Rational& a, const Rational& b, const Rational& c) {
  EdgeCurve full = n5_curve(a, b, c);
  return {CurveFamily::N4, 0, full.parameters, restrict_to(full.edges, {0, 1, 2, 3, 4})};
}

OddCurveReport verify_odd_curve(int q) {
  const EdgeCurve curve = odd_curve(q);
  const int n = curve.n();
  OddCurveReport report;
  report.q = q;
  report.n = n;

  const auto areas = area_map(curve.edges);
  const auto ts = triples(n);
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto& tr = ts[k];
    const std::set<int> verts(tr.begin(), tr.end());
    bool has_pair = false;
    for (int r = 1; r <= q - 1; ++r) has_pair = has_pair || (verts.count(r) && verts.count(q + r));
    const LaurentPoly expected = has_pair ? LaurentPoly(Rational(-1, 16)) : LaurentPoly();
    if (!(areas[k] == expected)) {
      std::ostringstream os;
      os << "S_" << tr[0] << tr[1] << tr[2] << " = " << areas[k] << ", expected " << expected;
      report.failures.push_back(os.str());
    }
  }

  Rational fact(1);
  for (int k = 2; k <= n; ++k) fact *= Rational(k);
  report.expected_volume = LaurentPoly::monomial(Rational(-4).pow(1 - q) / (fact * fact), 1);
  report.volume = cm_volume_squared(curve.edges).value;
  if (!(report.volume == report.expected_volume))
    report.failures.push_back("W = " + report.volume.to_string() + ", expected " + report.expected_volume.to_string());
  report.ok = report.failures.empty();
  return report;
}

std::string Quantity::to_string() const {
  if (!triple) return "W";
  std::ostringstream os;
  os << "S_" << (*triple)[0] << (*triple)[1] << (*triple)[2];
  return os.str();
}

AsymptoticsReport verify_asymptotics(const EdgeCurve& curve, const std::vector<AsymptoticClaim>& claims) {
  AsymptoticsReport report;
  report.ok = true;
  const auto areas = area_map(curve.edges);
  std::optional<LaurentPoly> volume;
  for (const auto& claim : claims) {
    ClaimResult res{claim, {}, false, {}};
    if (claim.quantity.triple) {
      const auto& [i, j, k] = *claim.quantity.triple;
      res.computed = areas.at(i, j, k);
    } else {
      if (!volume) volume = cm_volume_squared(curve.edges).value;
      res.computed = *volume;
    }
    const LaurentPoly remainder = res.computed - LaurentPoly::monomial(claim.coefficient, claim.degree);
    const Degree top = res.computed.top_degree();
    std::ostringstream os;
    if (claim.coefficient.is_zero()) {
      os << "claimed leading coefficient is zero";
    } else if (top != Degree::of(claim.degree)) {
      os << "top degree " << top.to_string() << ", claimed " << claim.degree;
    } else if (res.computed.leading_coefficient() != claim.coefficient) {
      os << "leading coefficient " << res.computed.leading_coefficient() << ", claimed " << claim.coefficient;
    } else if (!(remainder.top_degree() <= claim.remainder_bound)) {
      os << "remainder degree " << remainder.top_degree().to_string() << " exceeds " << claim.remainder_bound;
    } else {
      res.ok = true;
    }
    if (!res.ok) os << "; computed " << res.computed;
    res.detail = os.str();
    report.ok = report.ok && res.ok;
    report.results.push_back(std::move(res));
  }
  return report;
}

std::vector<AsymptoticClaim> n5_claims(const Rational& a, const Rational& b, const Rational& c) {
  const Rational quarter(1, 4);
  const Rational ab = a + b;
  std::vector<AsymptoticClaim> out;
  auto add = [&](std::initializer_list<Triple> ts, const Rational& coef) {
    for (const auto& t : ts) out.push_back({Quantity::area(t[0], t[1], t[2]), 0, coef, -4});
  };
  add({{0, 1, 2}, {3, 4, 5}}, quarter * b * b);
  add({{0, 1, 3}, {2, 4, 5}}, quarter * a * a);
  add({{0, 1, 4}, {0, 1, 5}, {0, 4, 5}, {1, 4, 5}}, quarter * ab * ab);
  add({{0, 2, 3}, {1, 2, 3}, {2, 3, 4}, {2, 3, 5}}, Rational(1, 2) * a * b * c * ab);
  out.push_back({Quantity::volume(), 2, -Rational(1, 3600) * a * a * b * b * ab * ab, -2});
  return out;
}

std::vector<AsymptoticClaim> n4_claims(const Rational& a, const Rational& b, const Rational& c) {
  (void)c;
  const Rational ab = a + b;
  return {{Quantity::volume(), 4, -Rational(1, 144) * a * a * b * b * ab * ab, 0}};
}

std::string WitnessPolynomial::to_string() const {
  auto idx = [&] {
    std::string s;
    for (int i : indices) s += std::to_string(i);
    return s;
  };
  switch (kind) {
    case WitnessKind::One: return "1";
    case WitnessKind::Q: return "Q";
    case WitnessKind::P: return "P" + idx();
    case WitnessKind::D: return "D";
    case WitnessKind::PD: return "P" + idx() + "*D";
  }
  return "?";
}

WitnessPolynomial parse_witness(const std::string& kind, std::array<int, 5> indices) {
  if (kind == "1" || kind == "one") return WitnessPolynomial::one();
  if (kind == "Q") return WitnessPolynomial::q();
  if (kind == "D") return WitnessPolynomial::d();
  if (kind == "P") return WitnessPolynomial::p(indices);
  if (kind == "PD") return WitnessPolynomial::pd(indices);
  throw ParseError("unknown witness \"" + kind + "\" (expected 1, Q, P, D or PD)");
}

namespace detail {

void check_witness_arity(const WitnessPolynomial& w, int n) {
  auto check_indices = [&] {
    std::set<int> seen;
    for (int i : w.indices) {
      if (i < 0 || i > n) throw PreconditionError("witness P: index " + std::to_string(i) + " outside {0..n}");
      if (!seen.insert(i).second) throw PreconditionError("witness P: indices must be pairwise distinct");
    }
  };
  switch (w.kind) {
    case WitnessKind::One: return;
    case WitnessKind::Q:
      if (n != 4) throw PreconditionError("witness Q is defined for n = 4 only");
      return;
    case WitnessKind::D:
      if (n != 5) throw PreconditionError("witness D is defined for n = 5 only");
      return;
    case WitnessKind::P:
      if (n < 4) throw PreconditionError("witness P needs n >= 4");
      check_indices();
      return;
    case WitnessKind::PD:
      if (n != 5) throw PreconditionError("witness P*D is defined for n = 5 only");
      check_indices();
      return;
  }
}

}  // namespace detail

WitnessCertificate witness_degree_certificate(const EdgeCurve& curve, const WitnessPolynomial& w) {
  const auto areas = area_map(curve.edges);
  for (std::size_t k = 0; k < areas.size(); ++k)
    if (areas[k].top_degree() > 0) {
      const auto tr = triple_at(curve.n(), k);
      throw PreconditionError("witness_degree_certificate: S_" + std::to_string(tr[0]) + std::to_string(tr[1]) +
                              std::to_string(tr[2]) + " is unbounded along the curve");
    }
  WitnessCertificate cert;
  cert.witness = w.to_string();
  const LaurentPoly volume = cm_volume_squared(curve.edges).value;
  cert.volume_degree = volume.top_degree();
  cert.product = evaluate_witness(w, areas) * volume;
  cert.product_degree = cert.product.top_degree();
  cert.passed = cert.product_degree <= 0;
  return cert;
}

}  // namespace simplex_lab
