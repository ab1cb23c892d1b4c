#include "simplex_lab/json_io.hpp"

#include "simplex_lab/errors.hpp"

#include <string>

namespace simplex_lab {

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const QuadExt& x) { return json{{"a", x.a().to_string()}, {"b", x.b().to_string()}, {"d", x.d()}}; }

json to_json(const LaurentPoly& p) {
  json out = json::object();
  // descending exponents read naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out[std::to_string(it->first)] = it->second.to_string();
  return out;
}

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string, got " + j.dump());
}

QuadExt quadext_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d") || !j["d"].is_number_integer())
    throw ParseError("quadext must be {\"a\":\"p/q\",\"b\":\"p/q\",\"d\":int}, got " + j.dump());
  try {
    return QuadExt(rational_from_json(j["a"]), rational_from_json(j["b"]), j["d"].get<long>());
  } catch (const RingError& e) {
    throw ParseError(e.what());
  }
}

LaurentPoly laurent_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return LaurentPoly(rational_from_json(j));
  if (!j.is_object()) throw ParseError("laurent polynomial must be an object {\"<exponent>\": \"p/q\"}, got " + j.dump());
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw ParseError("bad Laurent exponent \"" + key + "\"");
    if (terms.count(e)) throw ParseError("duplicate Laurent exponent \"" + key + "\"");
    terms.emplace(e, rational_from_json(value));
  }
  return LaurentPoly(std::move(terms));
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex must be [re, im], got " + j.dump());
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ParseError("complex value must be finite");
  return z;
}

namespace {

template <class T>
std::vector<T> entries_from_json(const json& j) {
  std::vector<T> out;
  for (const auto& e : j) out.push_back(scalar_from_json<T>(e));
  return out;
}

void check_vector_schema(const json& j) {
  if (!j.is_object()) throw ParseError("vector document must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("vector document needs integer \"n\"");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("vector document needs array \"entries\"");
}

std::string ring_of(const json& j) {
  if (!j.contains("ring")) return "rational";
  if (!j["ring"].is_string()) throw ParseError("\"ring\" must be a string");
  return j["ring"].get<std::string>();
}

template <template <class> class Vector, class Any>
Any vector_from_json(const json& j) {
  check_vector_schema(j);
  const int n = j["n"].get<int>();
  const std::string ring = ring_of(j);
  try {
    if (ring == "rational") return Vector<Rational>(n, entries_from_json<Rational>(j["entries"]));
    if (ring == "quadext") {
      auto e = entries_from_json<QuadExt>(j["entries"]);
      for (const auto& x : e)
        if (!e.empty() && x.d() != e.front().d()) throw ParseError("quadext entries must share one discriminant");
      return Vector<QuadExt>(n, std::move(e));
    }
    if (ring == "complex") return Vector<Complex>(n, entries_from_json<Complex>(j["entries"]));
    if (ring == "laurent") return Vector<LaurentPoly>(n, entries_from_json<LaurentPoly>(j["entries"]));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown ring \"" + ring + "\" (expected rational, quadext, complex or laurent)");
}

}  // namespace

AnyEdges edges_from_json(const json& j) { return vector_from_json<SquaredEdgeVector, AnyEdges>(j); }
AnyAreas areas_from_json(const json& j) { return vector_from_json<SquaredAreaVector, AnyAreas>(j); }

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in " + source + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json to_json(const FiberReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"point", f.point}, {"triple", f.triple}, {"value", f.value}});
  return json{{"n", r.n}, {"count", r.count}, {"fiber_ok", r.fiber_ok}, {"failures", failures}};
}

json to_json(const OddCurveReport& r) {
  return json{{"family", "odd"},
              {"q", r.q},
              {"n", r.n},
              {"ok", r.ok},
              {"W", to_json(r.volume)},
              {"W_expected", to_json(r.expected_volume)},
              {"failures", r.failures}};
}

json to_json(const AsymptoticsReport& r) {
  json claims = json::array();
  for (const auto& c : r.results)
    claims.push_back({{"quantity", c.claim.quantity.to_string()},
                      {"degree", c.claim.degree},
                      {"coefficient", c.claim.coefficient.to_string()},
                      {"remainder_bound", c.claim.remainder_bound},
                      {"ok", c.ok},
                      {"computed", to_json(c.computed)},
                      {"detail", c.detail}});
  return json{{"ok", r.ok}, {"claims", claims}};
}

json to_json(const WitnessCertificate& c) {
  auto deg = [](const Degree& d) -> json {
    if (d.is_minus_infinity()) return "-inf";
    return d.value();
  };
  return json{{"witness", c.witness},
              {"W_top_degree", deg(c.volume_degree)},
              {"product_top_degree", deg(c.product_degree)},
              {"passed", c.passed},
              {"product", to_json(c.product)}};
}

json to_json(const FiberResult& r) {
  json endpoints = json::array();
  for (std::size_t k = 0; k < r.endpoints.size(); ++k) {
    json e = to_json(r.endpoints[k]);
    e["residual"] = r.residuals[k];
    e["negation"] = r.negation[k] ? json(*r.negation[k]) : json(nullptr);
    endpoints.push_back(e);
  }
  json paths = json::array();
  for (const auto& p : r.paths)
    paths.push_back({{"start", p.start},
                     {"status", to_string(p.status)},
                     {"succeeded", p.succeeded},
                     {"steps", p.steps},
                     {"rejected_steps", p.rejected_steps},
                     {"retries", p.retries},
                     {"residual", p.residual},
                     {"endpoint", p.endpoint ? json(*p.endpoint) : json(nullptr)}});
  return json{{"n", 4},
              {"gamma", to_json(r.gamma)},
              {"endpoint_count", r.endpoints.size()},
              {"path_failures", r.path_failures},
              {"duplicate_endpoints", r.duplicate_endpoints},
              {"negation_pairs", r.negation_pair_count},
              {"class_count", r.class_count},
              {"excluded_from_classes", r.excluded_from_classes},
              {"endpoints", endpoints},
              {"paths", paths}};
}

json to_json(const ProbeReport& r) {
  json anomalies = json::array();
  for (const auto& a : r.anomalies) anomalies.push_back(to_json(a));
  return json{{"n", r.n},     {"trials", r.trials},         {"converged", r.converged},
              {"plus", r.plus}, {"minus", r.minus},           {"not_converged", r.not_converged},
              {"ok", r.ok()},   {"anomalies", anomalies}};
}

json to_json(const ImageSweep& s) {
  json matrix = json::object();
  for (std::size_t a = 0; a < s.labels.size(); ++a) {
    json row = json::object();
    for (std::size_t b = 0; b < s.labels.size(); ++b) row[s.labels[b]] = static_cast<bool>(s.equal[a][b]);
    matrix[s.labels[a]] = row;
  }
  json mismatches = json::array();
  for (const auto& [a, b] : s.mismatches) mismatches.push_back({s.labels[a], s.labels[b]});
  return json{{"n", s.n}, {"points", s.labels.size()}, {"consistent", s.mismatches.empty()},
              {"mismatches", mismatches}, {"images_equal", matrix}};
}

json to_json(const EdgeCurve& c) {
  json out{{"family", to_string(c.family)}, {"n", c.n()}};
  if (c.family == CurveFamily::Odd) out["q"] = c.q;
  if (c.parameters) out["parameters"] = {{"a", (*c.parameters)[0].to_string()}, {"b", (*c.parameters)[1].to_string()},
                                         {"c", (*c.parameters)[2].to_string()}};
  out["edges"] = to_json(c.edges);
  return out;
}

}  // namespace simplex_lab
