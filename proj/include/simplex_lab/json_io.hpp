#pragma once

#include "simplex_lab/catalog.hpp"
#include "simplex_lab/curves.hpp"
#include "simplex_lab/fiber.hpp"
#include "simplex_lab/linearization.hpp"
#include "simplex_lab/metrics.hpp"

#include <json.hpp>

#include <variant>

namespace simplex_lab {

using json = nlohmann::ordered_json;

// Scalars. Exact values are always strings, never JSON numbers.
//   Rational      "p/q"
//   QuadExt       {"a": "p/q", "b": "p/q", "d": -15}
//   LaurentPoly   {"<exponent>": "p/q", ...}
//   Complex       [re, im]
json to_json(const Rational& r);
json to_json(const QuadExt& x);
json to_json(const LaurentPoly& p);
json to_json(const Complex& z);

Rational rational_from_json(const json& j);
QuadExt quadext_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);
Complex complex_from_json(const json& j);

template <class T>
T scalar_from_json(const json& j);
template <> inline Rational scalar_from_json<Rational>(const json& j) { return rational_from_json(j); }
template <> inline QuadExt scalar_from_json<QuadExt>(const json& j) { return quadext_from_json(j); }
template <> inline LaurentPoly scalar_from_json<LaurentPoly>(const json& j) { return laurent_from_json(j); }
template <> inline Complex scalar_from_json<Complex>(const json& j) { return complex_from_json(j); }

using AnyEdges = std::variant<SquaredEdgeVector<Rational>, SquaredEdgeVector<QuadExt>, SquaredEdgeVector<Complex>,
                              SquaredEdgeVector<LaurentPoly>>;
using AnyAreas = std::variant<SquaredAreaVector<Rational>, SquaredAreaVector<QuadExt>, SquaredAreaVector<Complex>,
                              SquaredAreaVector<LaurentPoly>>;

// Vectors: {"n": int, "ring": "rational"|"quadext"|"complex"|"laurent", "entries": [...]}
template <Scalar T>
json to_json(const SquaredEdgeVector<T>& s) {
  json entries = json::array();
  for (const auto& x : s.entries()) entries.push_back(to_json(x));
  return json{{"n", s.n()}, {"ring", RingTraits<T>::name}, {"entries", entries}};
}

template <Scalar T>
json to_json(const SquaredAreaVector<T>& s) {
  json entries = json::array();
  for (const auto& x : s.entries()) entries.push_back(to_json(x));
  return json{{"n", s.n()}, {"ring", RingTraits<T>::name}, {"entries", entries}};
}

template <Scalar T>
json to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

/// Throws ParseError on schema violations.
AnyEdges edges_from_json(const json& j);
AnyAreas areas_from_json(const json& j);

/// Parses JSON text; throws ParseError carrying the byte position.
json parse_json_text(const std::string& text, const std::string& source = "input");

// Reports.
json to_json(const FiberReport& r);
json to_json(const OddCurveReport& r);
json to_json(const AsymptoticsReport& r);
json to_json(const WitnessCertificate& c);
json to_json(const FiberResult& r);
json to_json(const ProbeReport& r);
json to_json(const ImageSweep& s);
json to_json(const EdgeCurve& c);

}  // namespace simplex_lab
