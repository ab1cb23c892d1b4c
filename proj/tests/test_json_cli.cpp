#include "cli.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace simplex_lab;
using test_support::random_rational;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("simplex_lab_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("json") {

TEST_CASE("scalars serialize as strings and round-trip") {
  CHECK(to_json(Rational(-3, 7)) == json("-3/7"));
  CHECK(to_json(Rational(4)) == json("4"));
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational r = random_rational(rng, 1000000, 1000000);
    CHECK(rational_from_json(to_json(r)) == r);
    const QuadExt q(random_rational(rng), random_rational(rng), -15);
    CHECK(quadext_from_json(to_json(q)) == q);
    const LaurentPoly p = LaurentPoly::monomial(random_rational(rng), trial % 7 - 3) + LaurentPoly(random_rational(rng));
    CHECK(laurent_from_json(to_json(p)) == p);
    const Complex z(std::ldexp(static_cast<double>(trial), -3), -0.1 * trial);
    CHECK(complex_from_json(to_json(z)) == z);
  }
}

TEST_CASE("edge vectors round-trip through text") {
  const auto x = make_point(4, parse_label(4, "cycle:0-1-2-3-4")).as_quadext();
  const auto back = edges_from_json(parse_json_text(to_json(x).dump()));
  REQUIRE(std::holds_alternative<SquaredEdgeVector<QuadExt>>(back));
  CHECK(std::get<SquaredEdgeVector<QuadExt>>(back) == x);
  const auto curve = odd_curve(3).edges;
  const auto back_c = edges_from_json(parse_json_text(to_json(curve).dump()));
  CHECK(std::get<SquaredEdgeVector<LaurentPoly>>(back_c) == curve);
  const auto areas = area_map(SquaredEdgeVector<Rational>::constant(4, Rational(1)));
  CHECK(std::get<SquaredAreaVector<Rational>>(areas_from_json(to_json(areas))) == areas);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_WITH_AS(parse_json_text("{\"n\": 3,", "doc"), doctest::Contains("byte"), ParseError);
  CHECK_THROWS_AS(edges_from_json(json{{"n", 3}, {"ring", "rational"}, {"entries", json::array({"1"})}}), ParseError);
  CHECK_THROWS_AS(edges_from_json(json{{"n", 1}, {"ring", "octonion"}, {"entries", json::array({"1"})}}), ParseError);
  CHECK_THROWS_AS(edges_from_json(json{{"n", 1}, {"ring", "rational"}, {"entries", json::array({1.5})}}), ParseError);
  CHECK_THROWS_AS(rational_from_json(json("1/0")), ParseError);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("volume of the all-ones vector") {
  const auto path = write_temp("ones.json", to_json(SquaredEdgeVector<Rational>::constant(4, Rational(1))).dump());
  const auto r = run_cli({"volume", "--n", "4", "--edges", path});
  CHECK(r.code == 0);
  CHECK(parse_json_text(r.out)["W"] == "5/9216");
  const auto g = run_cli({"volume", "--edges", path, "--route", "gram"});
  CHECK(parse_json_text(g.out)["W"] == "5/9216");
  CHECK(run_cli({"volume", "--n", "5", "--edges", path}).code == 2);
}

TEST_CASE("areas") {
  const auto path = write_temp("tri.json", R"({"n":2,"ring":"rational","entries":["1","1","1"]})");
  const auto r = run_cli({"areas", "--edges", path});
  CHECK(r.code == 0);
  CHECK(parse_json_text(r.out)["entries"][0] == "3/16");
}

TEST_CASE("catalog") {
  const auto r = run_cli({"catalog", "--n", "4", "--verify"});
  CHECK(r.code == 0);
  const auto j = parse_json_text(r.out);
  CHECK(j["count"] == 64);
  CHECK(j["fiber_ok"] == true);
  CHECK(j["volume_table"]["pairing::+1"] == "5/9216");
  CHECK(j["volume_table"]["cycle:0-1-2-3-4"] == "5/1024");
  const auto out = (std::filesystem::temp_directory_path() / "simplex_lab_test_catalog.json").string();
  CHECK(run_cli({"catalog", "--n", "5", "--json", out}).code == 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(parse_json_text(buf.str())["count"] == 152);
}

TEST_CASE("jacobian and images") {
  const auto r = run_cli({"jacobian", "--n", "5", "--point", "pairing:0-1,2-3:+1", "--rank"});
  CHECK(r.code == 0);
  CHECK(parse_json_text(r.out)["rank"] == 15);
  const auto full = parse_json_text(run_cli({"jacobian", "--n", "4", "--point", "pairing::+1"}).out);
  CHECK(full["matrix"][0][0] == "1/8");
  const auto img = run_cli({"images", "--n", "5", "--point", "pairing:0-1:+1", "--point", "pairing:0-1:-1"});
  CHECK(parse_json_text(img.out)["images_equal"] == true);
  CHECK(run_cli({"jacobian", "--n", "4", "--point", "pairing:0-9:+1"}).code == 2);
}

TEST_CASE("curve and witness") {
  const auto odd = run_cli({"curve", "--family", "odd", "--q", "3", "--verify"});
  CHECK(odd.code == 0);
  CHECK(parse_json_text(odd.out)["verification"]["ok"] == true);
  const auto pd = run_cli({"curve", "--family", "n5", "--a", "1", "--b", "1", "--c", "1", "--witness", "PD"});
  CHECK(pd.code == 0);
  CHECK(parse_json_text(pd.out)["certificate"]["passed"] == true);
  // the bare volume is unbounded along the n4 curve: certificate fails, exit 1
  CHECK(run_cli({"curve", "--family", "n4", "--witness", "1"}).code == 1);
  const auto path = write_temp("y0.json", to_json(area_map(SquaredEdgeVector<Rational>::constant(4, Rational(1)))).dump());
  const auto w = run_cli({"witness", "--kind", "Q", "--areas", path});
  CHECK(w.code == 0);
  CHECK(parse_json_text(w.out)["value"] == to_json(Rational(27, 256).pow(10)));
}

TEST_CASE("fiber and probe") {
  const auto path = write_temp("target.json", to_json(area_map(SquaredEdgeVector<Rational>::constant(4, Rational(1)))).dump());
  const auto r = run_cli({"fiber", "--n", "4", "--target", path, "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(parse_json_text(r.out)["endpoints"].size() == 64);
  const auto p = run_cli({"probe", "--n", "5", "--trials", "10", "--seed", "3"});
  CHECK(p.code == 0);
  CHECK(parse_json_text(p.out)["trials"] == 10);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"volume"}).code == 2);
  CHECK(run_cli({"curve", "--family", "even"}).code == 2);
  const auto bad = write_temp("bad.json", "{\"n\": 4, \"ring\": ");
  const auto r = run_cli({"volume", "--edges", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte") != std::string::npos);
  CHECK(run_cli({"--help"}).code == 0);
}

}  // TEST_SUITE
