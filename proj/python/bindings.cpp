// Python bindings. Structured values cross the boundary as JSON text; the
// package wrapper converts to and from Python objects.
#include "simplex_lab/simplex_lab.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace simplex_lab;

namespace {

std::string dump(const json& j) { return j.dump(); }

json parse(const std::string& text, const char* what) { return parse_json_text(text, what); }

std::array<int, 5> five(const std::vector<int>& v) {
  if (v.size() != 5) throw PreconditionError("indices: need exactly 5 vertices");
  return {v[0], v[1], v[2], v[3], v[4]};
}

ComplexAreas complex_target(const json& doc) {
  return std::visit(
      [](const auto& v) -> ComplexAreas {
        using T = std::decay_t<decltype(v[0])>;
        if constexpr (std::is_same_v<T, LaurentPoly> || std::is_same_v<T, QuadExt>) {
          throw ParseError("fiber target must use the rational or complex ring");
        } else {
          std::vector<Complex> e;
          for (const auto& x : v.entries()) {
            if constexpr (std::is_same_v<T, Complex>)
              e.push_back(x);
            else
              e.emplace_back(x.to_double(), 0.0);
          }
          return ComplexAreas(v.n(), std::move(e));
        }
      },
      areas_from_json(doc));
}

std::string volume(const std::string& edges, const std::string& route) {
  if (route != "cm" && route != "gram") throw PreconditionError("route must be \"cm\" or \"gram\"");
  return std::visit(
      [&](const auto& s) {
        return dump(to_json(route == "cm" ? cm_volume_squared(s).value : gram_volume_squared(s).value));
      },
      edges_from_json(parse(edges, "edges")));
}

std::string areas(const std::string& edges) {
  return std::visit([](const auto& s) { return dump(to_json(area_map(s))); }, edges_from_json(parse(edges, "edges")));
}

std::string catalog(int n, bool verify) {
  const auto pts = build_catalog(n);
  json doc{{"n", n}, {"count", pts.size()}};
  if (verify) doc["fiber_ok"] = verify_points(n, pts).fiber_ok;
  json points = json::object();
  for (const auto& p : pts)
    points[p.name()] = std::visit([](const auto& s) { return to_json(s); }, p.coordinates);
  doc["points"] = points;
  if (n == 4) {
    json table = json::object();
    for (const auto& v : volume_table(4)) table[v.point] = to_json(v.volume.a());
    doc["volume_table"] = table;
  }
  return dump(doc);
}

std::string jacobian_at(int n, const std::string& label) {
  const auto p = make_point(n, parse_label(n, label));
  return std::visit(
      [&](const auto& s) {
        const auto m = jacobian(s);
        return dump(json{{"n", n}, {"point", p.name()}, {"rank", rank_exact(m)}, {"matrix", to_json(m)}});
      },
      p.coordinates);
}

bool images_equal_at(int n, const std::string& a, const std::string& b) {
  const auto pa = make_point(n, parse_label(n, a));
  const auto pb = make_point(n, parse_label(n, b));
  return images_equal(jacobian(pa.as_quadext()), jacobian(pb.as_quadext()));
}

std::string curve(const std::string& family, int q, const std::string& a, const std::string& b, const std::string& c,
                  bool verify, const std::string& witness, const std::vector<int>& indices) {
  const Rational ra = Rational::parse(a), rb = Rational::parse(b), rc = Rational::parse(c);
  EdgeCurve ec;
  if (family == "odd")
    ec = odd_curve(q);
  else if (family == "n5")
    ec = n5_curve(ra, rb, rc);
  else if (family == "n4")
    ec = n4_curve(ra, rb, rc);
  else
    throw PreconditionError("family must be odd, n5 or n4");
  json doc = to_json(ec);
  if (verify)
    doc["verification"] = family == "odd" ? to_json(verify_odd_curve(q))
                                          : to_json(verify_asymptotics(ec, family == "n5" ? n5_claims(ra, rb, rc)
                                                                                          : n4_claims(ra, rb, rc)));
  if (!witness.empty()) doc["certificate"] = to_json(witness_degree_certificate(ec, parse_witness(witness, five(indices))));
  return dump(doc);
}

std::string witness(const std::string& kind, const std::string& areas_doc, const std::vector<int>& indices) {
  const auto w = parse_witness(kind, five(indices));
  return std::visit([&](const auto& s) { return dump(to_json(evaluate_witness(w, s))); },
                    areas_from_json(parse(areas_doc, "areas")));
}

TrackerConfig config(std::uint64_t seed, double tol) {
  TrackerConfig cfg;
  cfg.seed = seed;
  cfg.newton_tol = tol;
  return cfg;
}

std::string fiber(const std::string& target, std::uint64_t seed, double tol) {
  return dump(to_json(track_fiber(complex_target(parse(target, "target")), config(seed, tol))));
}

std::string probe(int n, int trials, std::uint64_t seed, double tol) {
  const auto s_true = random_real_simplex(n, seed);
  json doc = to_json(local_uniqueness_probe(s_true, trials, config(seed, tol)));
  doc["s_true"] = to_json(s_true);
  return dump(doc);
}

std::string all_checks(const std::vector<int>& dims, const std::vector<int>& qs, std::uint64_t seed) {
  CheckOptions opt;
  opt.exact_dimensions = dims;
  opt.odd_q = qs;
  opt.seed = seed;
  py::gil_scoped_release release;
  return dump(run_all_checks(opt).to_json());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact simplex metric invariants (JSON text interface)";

  py::register_exception<RingError>(m, "RingError", PyExc_ArithmeticError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ContradictionError>(m, "ContradictionError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("volume", &volume, py::arg("edges"), py::arg("route") = "cm");
  m.def("areas", &areas, py::arg("edges"));
  m.def("catalog", &catalog, py::arg("n"), py::arg("verify") = false);
  m.def("jacobian", &jacobian_at, py::arg("n"), py::arg("point"));
  m.def("images_equal", &images_equal_at, py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("curve", &curve, py::arg("family"), py::arg("q") = 3, py::arg("a") = "1", py::arg("b") = "1",
        py::arg("c") = "1", py::arg("verify") = false, py::arg("witness") = "",
        py::arg("indices") = std::vector<int>{0, 1, 2, 3, 4});
  m.def("witness", &witness, py::arg("kind"), py::arg("areas"), py::arg("indices") = std::vector<int>{0, 1, 2, 3, 4});
  m.def("fiber", &fiber, py::arg("target"), py::arg("seed") = 7, py::arg("tol") = 1e-10,
        py::call_guard<py::gil_scoped_release>());
  m.def("probe", &probe, py::arg("n") = 5, py::arg("trials") = 200, py::arg("seed") = 7, py::arg("tol") = 1e-10,
        py::call_guard<py::gil_scoped_release>());
  m.def("all_checks", &all_checks, py::arg("dims") = std::vector<int>{4, 5, 6},
        py::arg("q") = std::vector<int>{3, 4}, py::arg("seed") = 7);
}
