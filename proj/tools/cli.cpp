#include "cli.hpp"

#include "simplex_lab/errors.hpp"
#include "simplex_lab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace simplex_lab::cli {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError("bad integer \"" + item + "\" in list \"" + text + "\"");
    out.push_back(v);
  }
  return out;
}

std::array<int, 5> parse_indices(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 5) throw ParseError("--indices needs exactly 5 vertices");
  return {v[0], v[1], v[2], v[3], v[4]};
}

void check_dimension(int requested, int actual) {
  if (requested >= 0 && requested != actual)
    throw ParseError("--n " + std::to_string(requested) + " does not match document dimension " + std::to_string(actual));
}

json rational_or_quadext(const QuadExt& x) { return x.is_rational() ? to_json(x.a()) : to_json(x); }

ComplexAreas to_complex_areas(const AnyAreas& any) {
  return std::visit(
      [](const auto& v) -> ComplexAreas {
        using T = std::decay_t<decltype(v[0])>;
        std::vector<Complex> e;
        for (const auto& x : v.entries()) {
          if constexpr (std::is_same_v<T, Complex>)
            e.push_back(x);
          else if constexpr (std::is_same_v<T, Rational>)
            e.emplace_back(x.to_double(), 0.0);
          else if constexpr (std::is_same_v<T, QuadExt>) {
            const double root = std::sqrt(std::abs(static_cast<double>(x.d())));
            e.push_back(x.d() < 0 ? Complex(x.a().to_double(), x.b().to_double() * root)
                                  : Complex(x.a().to_double() + x.b().to_double() * root, 0.0));
          } else
            throw ParseError("a numeric target cannot use the laurent ring");
        }
        return {v.n(), std::move(e)};
      },
      any);
}

ComplexEdges to_complex_edges(const AnyEdges& any) {
  return std::visit(
      [](const auto& v) -> ComplexEdges {
        using T = std::decay_t<decltype(v[0])>;
        std::vector<Complex> e;
        for (const auto& x : v.entries()) {
          if constexpr (std::is_same_v<T, Complex>)
            e.push_back(x);
          else if constexpr (std::is_same_v<T, Rational>)
            e.emplace_back(x.to_double(), 0.0);
          else
            throw ParseError("probe edges must use the rational or complex ring");
        }
        return {v.n(), std::move(e)};
      },
      any);
}

struct Emitter {
  std::string path;
  std::ostream& out;

  void emit(const json& j) const {
    if (path.empty()) {
      out << j.dump(2) << "\n";
      return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path);
    f << j.dump(2) << "\n";
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric invariants of simplices: Cayley-Menger volumes, Heron-map fibers, curve certificates"};
  app.require_subcommand(1);

  std::string out_path;
  int n = -1;
  std::uint64_t seed = 7;
  double tol = 1e-10;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out,--json", out_path, "write the JSON report to this file");
  };

  // volume
  std::string edges_path;
  std::string route = "cm";
  auto* volume = app.add_subcommand("volume", "squared volume W from squared edge lengths");
  volume->add_option("--n", n, "dimension (checked against the document)");
  volume->add_option("--edges", edges_path, "edge vector JSON")->required();
  volume->add_option("--route", route, "cm (Cayley-Menger) or gram")->check(CLI::IsMember({"cm", "gram"}));
  add_common(volume);

  // areas
  auto* areas = app.add_subcommand("areas", "squared 2-face areas via Heron's formula");
  areas->add_option("--n", n, "dimension (checked against the document)");
  areas->add_option("--edges", edges_path, "edge vector JSON")->required();
  add_common(areas);

  // catalog
  bool verify = false;
  bool classify = false;
  auto* catalog = app.add_subcommand("catalog", "known preimages of the equiareal point");
  catalog->add_option("--n", n, "dimension (>= 4)")->required();
  catalog->add_flag("--verify", verify, "check every point maps to all areas 3/16");
  catalog->add_flag("--classify", classify, "classify every 4-vertex restriction");
  add_common(catalog);

  // jacobian
  std::vector<std::string> points;
  bool want_rank = false;
  auto* jac = app.add_subcommand("jacobian", "exact Jacobian of the Heron map at a catalog point");
  jac->add_option("--n", n, "dimension")->required();
  jac->add_option("--point", points, "pairing:<i-j,...>:<+1|-1> or cycle:<a-b-c-d-e>")->required()->expected(1);
  jac->add_flag("--rank", want_rank, "report the exact rank only");
  add_common(jac);

  // images
  bool all_pairs = false;
  auto* images = app.add_subcommand("images", "compare Jacobian column spaces at pairing points");
  images->add_option("--n", n, "dimension (>= 5)")->required();
  images->add_flag("--all-pairs", all_pairs, "sweep all pairs of pairing points");
  images->add_option("--point", points, "two pairing labels to compare");
  add_common(images);

  // curve
  std::string family;
  int q = 3;
  std::string a_text = "1", b_text = "1", c_text = "1";
  std::string witness_kind;
  std::string indices_text = "0,1,2,3,4";
  auto* curve = app.add_subcommand("curve", "exact Laurent curves of squared edge lengths");
  curve->add_option("--family", family, "odd, n5 or n4")->required()->check(CLI::IsMember({"odd", "n5", "n4"}));
  curve->add_option("--q", q, "odd family: n = 2q - 1");
  curve->add_option("--a", a_text, "rational parameter a");
  curve->add_option("--b", b_text, "rational parameter b");
  curve->add_option("--c", c_text, "rational parameter c");
  curve->add_flag("--verify", verify, "check the stated identities / asymptotics exactly");
  curve->add_option("--witness", witness_kind, "degree certificate for witness 1, Q, P, D or PD");
  curve->add_option("--indices", indices_text, "five vertices for P / PD");
  add_common(curve);

  // witness
  std::string areas_path;
  auto* witness = app.add_subcommand("witness", "evaluate a witness polynomial at an area vector");
  witness->add_option("--kind", witness_kind, "Q, P, D, PD or 1")->required();
  witness->add_option("--areas", areas_path, "area vector JSON")->required();
  witness->add_option("--indices", indices_text, "five vertices for P / PD");
  witness->add_option("--n", n, "dimension (checked against the document)");
  add_common(witness);

  // fiber
  std::string target_path;
  auto* fiber = app.add_subcommand("fiber", "track the 64 fiber points of the n=4 Heron map to a target");
  fiber->add_option("--n", n, "dimension (must be 4)");
  fiber->add_option("--target", target_path, "area vector JSON")->required();
  fiber->add_option("--seed", seed, "seed for the homotopy twist");
  fiber->add_option("--tol", tol, "Newton residual tolerance");
  add_common(fiber);

  // probe
  int trials = 200;
  auto* probe = app.add_subcommand("probe", "random Newton starts against the areas of a real simplex (n >= 5)");
  probe->add_option("--n", n, "dimension (>= 5)");
  probe->add_option("--edges", edges_path, "real edge vector JSON (default: random simplex from --seed)");
  probe->add_option("--trials", trials, "number of random starts");
  probe->add_option("--seed", seed, "random seed");
  probe->add_option("--tol", tol, "Newton residual tolerance");
  add_common(probe);

  // all-checks
  std::string dims_text = "4,5,6";
  std::string q_text = "3,4";
  CheckOptions options;
  auto* all = app.add_subcommand("all-checks", "run the full verification suite");
  all->add_option("--dims", dims_text, "dimensions for the exact suites");
  all->add_option("--q", q_text, "q values for the odd curves");
  all->add_option("--seed", seed, "random seed");
  all->add_option("--samples", options.oracle_samples, "oracle samples per dimension");
  all->add_option("--targets", options.fiber_targets, "perturbed fiber targets");
  all->add_option("--trials", options.probe_trials, "probe starts");
  all->add_option("--tol", tol, "Newton residual tolerance");
  add_common(all);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands())
    if (sub->get_help_ptr() && sub->get_help_ptr()->count()) {
      out << sub->help();
      return kExitOk;
    }

  const Emitter emitter{out_path, out};
  try {
    if (volume->parsed()) {
      const AnyEdges edges = edges_from_json(read_json_file(edges_path));
      std::visit(
          [&](const auto& s) {
            check_dimension(n, s.n());
            const auto w = route == "cm" ? cm_volume_squared(s) : gram_volume_squared(s);
            emitter.emit(json{{"n", s.n()}, {"ring", RingTraits<std::decay_t<decltype(s[0])>>::name},
                              {"route", route}, {"W", to_json(w.value)}});
          },
          edges);
      return kExitOk;
    }
    if (areas->parsed()) {
      const AnyEdges edges = edges_from_json(read_json_file(edges_path));
      std::visit(
          [&](const auto& s) {
            check_dimension(n, s.n());
            emitter.emit(to_json(area_map(s)));
          },
          edges);
      return kExitOk;
    }
    if (catalog->parsed()) {
      const auto pts = build_catalog(n);
      json doc{{"n", n}, {"count", pts.size()}};
      json labels = json::array();
      for (const auto& p : pts) labels.push_back(p.name());
      int status = kExitOk;
      if (verify) {
        const auto fr = verify_points(n, pts);
        doc["fiber_ok"] = fr.fiber_ok;
        doc["failures"] = to_json(fr)["failures"];
        if (!fr.fiber_ok) status = kExitCheckFailed;
      }
      if (n == 4) {
        json table = json::object();
        for (const auto& v : volume_table(4)) table[v.point] = rational_or_quadext(v.volume);
        doc["volume_table"] = table;
      }
      if (classify) {
        json rows = json::array();
        bool ok = true;
        for (const auto& c : classify_catalog_tetrahedra(n)) {
          json cases = json::array();
          for (auto k : c.cases) cases.push_back(to_string(k));
          rows.push_back({{"point", c.point}, {"vertices", c.vertices}, {"cases", cases}, {"error", c.error}});
          ok = ok && !c.cases.empty();
        }
        doc["tetrahedra_ok"] = ok;
        doc["tetrahedra"] = rows;
        if (!ok) status = kExitCheckFailed;
      }
      doc["points"] = labels;
      emitter.emit(doc);
      return status;
    }
    if (jac->parsed()) {
      const CatalogPoint p = make_point(n, parse_label(n, points.front()));
      json doc{{"n", n}, {"point", p.name()}, {"rows", triple_count(n)}, {"cols", pair_count(n)}};
      std::visit(
          [&](const auto& s) {
            const auto m = jacobian(s);
            doc["rank"] = rank_exact(m);
            if (!want_rank) doc["matrix"] = to_json(m);
          },
          p.coordinates);
      emitter.emit(doc);
      return kExitOk;
    }
    if (images->parsed()) {
      if (all_pairs) {
        const auto sweep = sweep_pairing_images(n);
        emitter.emit(to_json(sweep));
        return sweep.mismatches.empty() ? kExitOk : kExitCheckFailed;
      }
      if (points.size() != 2) throw ParseError("images: give --all-pairs or exactly two --point labels");
      const auto a = make_point(n, parse_label(n, points[0]));
      const auto b = make_point(n, parse_label(n, points[1]));
      const bool eq = images_equal(jacobian(a.as_quadext()), jacobian(b.as_quadext()));
      emitter.emit(json{{"n", n}, {"a", a.name()}, {"b", b.name()}, {"images_equal", eq}});
      return kExitOk;
    }
    if (curve->parsed()) {
      const Rational a = Rational::parse(a_text);
      const Rational b = Rational::parse(b_text);
      const Rational c = Rational::parse(c_text);
      EdgeCurve ec = family == "odd" ? odd_curve(q) : (family == "n5" ? n5_curve(a, b, c) : n4_curve(a, b, c));
      json doc = to_json(ec);
      int status = kExitOk;
      if (verify) {
        if (family == "odd") {
          const auto r = verify_odd_curve(q);
          doc["verification"] = to_json(r);
          if (!r.ok) status = kExitCheckFailed;
        } else {
          const auto r = verify_asymptotics(ec, family == "n5" ? n5_claims(a, b, c) : n4_claims(a, b, c));
          doc["verification"] = to_json(r);
          if (!r.ok) status = kExitCheckFailed;
        }
      }
      if (!witness_kind.empty()) {
        const auto cert = witness_degree_certificate(ec, parse_witness(witness_kind, parse_indices(indices_text)));
        doc["certificate"] = to_json(cert);
        if (!cert.passed) status = kExitCheckFailed;
      }
      emitter.emit(doc);
      return status;
    }
    if (witness->parsed()) {
      const AnyAreas s = areas_from_json(read_json_file(areas_path));
      const auto w = parse_witness(witness_kind, parse_indices(indices_text));
      std::visit(
          [&](const auto& v) {
            check_dimension(n, v.n());
            emitter.emit(json{{"witness", w.to_string()}, {"n", v.n()}, {"value", to_json(evaluate_witness(w, v))}});
          },
          s);
      return kExitOk;
    }
    if (fiber->parsed()) {
      if (n >= 0 && n != 4) throw PreconditionError("fiber: only n = 4 is supported");
      const ComplexAreas target = to_complex_areas(areas_from_json(read_json_file(target_path)));
      TrackerConfig cfg;
      cfg.seed = seed;
      cfg.newton_tol = tol;
      const auto r = track_fiber(target, cfg);
      emitter.emit(to_json(r));
      return kExitOk;
    }
    if (probe->parsed()) {
      TrackerConfig cfg;
      cfg.seed = seed;
      cfg.newton_tol = tol;
      ComplexEdges s_true;
      if (!edges_path.empty()) {
        s_true = to_complex_edges(edges_from_json(read_json_file(edges_path)));
        check_dimension(n, s_true.n());
      } else {
        s_true = random_real_simplex(n < 0 ? 5 : n, seed);
      }
      const auto r = local_uniqueness_probe(s_true, trials, cfg);
      json doc = to_json(r);
      doc["s_true"] = to_json(s_true);
      emitter.emit(doc);
      return r.ok() ? kExitOk : kExitCheckFailed;
    }
    if (all->parsed()) {
      options.exact_dimensions = parse_int_list(dims_text);
      options.odd_q = parse_int_list(q_text);
      options.seed = seed;
      options.newton_tol = tol;
      const auto report = run_all_checks(options);
      emitter.emit(report.to_json());
      for (const auto& c : report.checks) err << "[" << to_string(c.status) << "] " << c.id << "\n";
      return report.exit_status();
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace simplex_lab::cli
