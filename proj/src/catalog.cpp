#include "simplex_lab/catalog.hpp"

#include "simplex_lab/errors.hpp"
#include "simplex_lab/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace simplex_lab {

PartialPairing::PartialPairing(int n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {
  std::set<int> used;
  for (auto& p : pairs_) {
    if (p[0] > p[1]) std::swap(p[0], p[1]);
    for (int v : p) {
      if (v < 0 || v > n_) throw PreconditionError("partial pairing: vertex outside {0..n}");
      if (!used.insert(v).second) throw PreconditionError("partial pairing: pairs must be disjoint");
    }
    if (p[0] == p[1]) throw PreconditionError("partial pairing: degenerate pair");
  }
  std::sort(pairs_.begin(), pairs_.end());
}

bool PartialPairing::contains(int i, int j) const {
  const Pair p = i < j ? Pair{i, j} : Pair{j, i};
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

std::string PartialPairing::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < pairs_.size(); ++k) os << (k ? "," : "") << pairs_[k][0] << "-" << pairs_[k][1];
  return os.str();
}

FiveCycle::FiveCycle(std::array<int, 5> order) : order_(order) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 5>{0, 1, 2, 3, 4})
    throw PreconditionError("five-cycle must visit each of 0..4 exactly once");
  // Rotate to start at 0, then orient so order[1] < order[4].
  std::rotate(order_.begin(), std::find(order_.begin(), order_.end(), 0), order_.end());
  if (order_[1] > order_[4]) std::reverse(order_.begin() + 1, order_.end());
}

std::array<Pair, 5> FiveCycle::edges() const {
  std::array<Pair, 5> out{};
  for (std::size_t k = 0; k < 5; ++k) {
    int a = order_[k];
    int b = order_[(k + 1) % 5];
    out[k] = a < b ? Pair{a, b} : Pair{b, a};
  }
  return out;
}

bool FiveCycle::contains(int i, int j) const {
  const Pair p = i < j ? Pair{i, j} : Pair{j, i};
  const auto e = edges();
  return std::find(e.begin(), e.end(), p) != e.end();
}

std::string FiveCycle::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < 5; ++k) os << (k ? "-" : "") << order_[k];
  return os.str();
}

std::size_t partial_pairing_count(int n) {
  // r_n = sum_k (n+1)! / (2^k k! (n+1-2k)!)
  const auto m = static_cast<std::size_t>(n) + 1;
  std::size_t total = 0;
  for (std::size_t k = 0; 2 * k <= m; ++k) {
    // C(m, 2k) * (2k-1)!!
    std::size_t term = binomial(m, 2 * k);
    for (std::size_t odd = 1; odd < 2 * k; odd += 2) term *= odd;
    total += term;
  }
  return total;
}

namespace {

void extend_pairings(int n, int v, std::vector<bool>& used, std::vector<Pair>& current,
                     std::vector<PartialPairing>& out) {
  while (v <= n && used[static_cast<std::size_t>(v)]) ++v;
  if (v > n) {
    out.emplace_back(n, current);
    return;
  }
  used[static_cast<std::size_t>(v)] = true;
  // v unpaired
  extend_pairings(n, v + 1, used, current, out);
  // v paired with a later free vertex
  for (int w = v + 1; w <= n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = true;
    current.push_back({v, w});
    extend_pairings(n, v + 1, used, current, out);
    current.pop_back();
    used[static_cast<std::size_t>(w)] = false;
  }
  used[static_cast<std::size_t>(v)] = false;
}

}  // namespace

std::vector<PartialPairing> enumerate_partial_pairings(int n) {
  if (n < 1) throw PreconditionError("enumerate_partial_pairings: n must be >= 1");
  std::vector<PartialPairing> out;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<Pair> current;
  extend_pairings(n, 0, used, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiveCycle> enumerate_five_cycles() {
  std::vector<FiveCycle> out;
  std::array<int, 4> rest{1, 2, 3, 4};
  do {
    // each undirected cycle appears twice (once per direction)
    if (rest[0] < rest[3]) out.emplace_back(std::array<int, 5>{0, rest[0], rest[1], rest[2], rest[3]});
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::string label_string(const CatalogLabel& label) {
  if (const auto* p = std::get_if<PairingLabel>(&label))
    return "pairing:" + p->pairing.to_string() + ":" + (p->sigma > 0 ? "+1" : "-1");
  return "cycle:" + std::get<FiveCycle>(label).to_string();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_vertex(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad vertex \"" + s + "\"");
  return std::stoi(s);
}

}  // namespace

CatalogLabel parse_label(int n, const std::string& text) {
  const auto parts = split(text, ':');
  try {
    if (parts.size() == 3 && parts[0] == "pairing") {
      std::vector<Pair> pairs;
      if (!parts[1].empty()) {
        for (const auto& item : split(parts[1], ',')) {
          const auto ends = split(item, '-');
          if (ends.size() != 2) throw ParseError("bad pair \"" + item + "\"");
          pairs.push_back({parse_vertex(ends[0]), parse_vertex(ends[1])});
        }
      }
      int sigma = 0;
      if (parts[2] == "+1" || parts[2] == "1")
        sigma = 1;
      else if (parts[2] == "-1")
        sigma = -1;
      else
        throw ParseError("sign must be +1 or -1, got \"" + parts[2] + "\"");
      return PairingLabel{PartialPairing(n, std::move(pairs)), sigma};
    }
    if (parts.size() == 2 && parts[0] == "cycle") {
      if (n != 4) throw ParseError("cycle points exist only for n = 4");
      const auto verts = split(parts[1], '-');
      if (verts.size() != 5) throw ParseError("a five-cycle needs 5 vertices");
      std::array<int, 5> order{};
      for (std::size_t k = 0; k < 5; ++k) order[k] = parse_vertex(verts[k]);
      return FiveCycle(order);
    }
  } catch (const PreconditionError& e) {
    throw ParseError("bad point label \"" + text + "\": " + e.what());
  }
  throw ParseError("bad point label \"" + text + "\" (expected pairing:<i-j,...>:<+1|-1> or cycle:<a-b-c-d-e>)");
}

RationalEdges pairing_point(const PartialPairing& omega, int sigma) {
  if (sigma != 1 && sigma != -1) throw PreconditionError("pairing_point: sigma must be +1 or -1");
  const int n = omega.n();
  std::vector<Rational> entries;
  entries.reserve(pair_count(n));
  for (const auto& [i, j] : pairs(n)) entries.emplace_back(omega.contains(i, j) ? 3 * sigma : sigma);
  return {n, std::move(entries)};
}

QuadExtEdges cycle_point(const FiveCycle& gamma) {
  // sqrt(-3/5) = (1/5) sqrt(-15)
  const QuadExt root(Rational(0), Rational(1, 5), QuadExt::kCatalogDiscriminant);
  std::vector<QuadExt> entries;
  entries.reserve(pair_count(4));
  for (const auto& [i, j] : pairs(4)) entries.push_back(gamma.contains(i, j) ? root : -root);
  return {4, std::move(entries)};
}

CatalogPoint make_point(int n, const CatalogLabel& label) {
  if (const auto* p = std::get_if<PairingLabel>(&label)) {
    if (p->pairing.n() != n) throw PreconditionError("make_point: pairing dimension mismatch");
    return {label, pairing_point(p->pairing, p->sigma)};
  }
  if (n != 4) throw PreconditionError("make_point: cycle points exist only for n = 4");
  return {label, cycle_point(std::get<FiveCycle>(label))};
}

QuadExtEdges CatalogPoint::as_quadext() const {
  if (const auto* q = std::get_if<QuadExtEdges>(&coordinates)) return *q;
  const auto& r = std::get<RationalEdges>(coordinates);
  std::vector<QuadExt> entries;
  entries.reserve(r.size());
  for (const auto& x : r.entries()) entries.push_back(QuadExt::embed(x, QuadExt::kCatalogDiscriminant));
  return {r.n(), std::move(entries)};
}

SquaredEdgeVector<Complex> CatalogPoint::as_complex() const {
  std::vector<Complex> entries;
  if (const auto* r = std::get_if<RationalEdges>(&coordinates)) {
    for (const auto& x : r->entries()) entries.emplace_back(x.to_double(), 0.0);
    return {r->n(), std::move(entries)};
  }
  const auto& q = std::get<QuadExtEdges>(coordinates);
  for (const auto& x : q.entries()) {
    // a + b sqrt(d), d < 0 gives a purely imaginary root
    const double root = std::sqrt(std::abs(static_cast<double>(x.d())));
    if (x.d() < 0)
      entries.emplace_back(x.a().to_double(), x.b().to_double() * root);
    else
      entries.emplace_back(x.a().to_double() + x.b().to_double() * root, 0.0);
  }
  return {q.n(), std::move(entries)};
}

std::vector<CatalogPoint> build_catalog(int n) {
  if (n < 4) throw PreconditionError("build_catalog: unsupported dimension " + std::to_string(n) + " (need n >= 4)");
  std::vector<CatalogPoint> out;
  for (const auto& omega : enumerate_partial_pairings(n))
    for (int sigma : {1, -1}) out.push_back(make_point(n, PairingLabel{omega, sigma}));
  if (n == 4)
    for (const auto& gamma : enumerate_five_cycles()) out.push_back(make_point(4, gamma));
  return out;
}

namespace {

template <ExactScalar T>
void check_areas(const std::string& name, const SquaredEdgeVector<T>& s, std::vector<FiberFailure>& failures) {
  const T target = RingTraits<T>::embed(equiareal_value(), s[0]);
  const auto areas = area_map(s);
  const auto ts = triples(s.n());
  for (std::size_t k = 0; k < areas.size(); ++k) {
    if (!(areas[k] == target)) {
      std::ostringstream os;
      os << areas[k];
      failures.push_back({name, ts[k], os.str()});
    }
  }
}

}  // namespace

FiberReport verify_points(int n, const std::vector<CatalogPoint>& points) {
  std::vector<std::vector<FiberFailure>> per_point(points.size());
  parallel_for(points.size(), [&](std::size_t k) {
    const auto& p = points[k];
    if (const auto* r = std::get_if<RationalEdges>(&p.coordinates))
      check_areas(p.name(), *r, per_point[k]);
    else
      check_areas(p.name(), std::get<QuadExtEdges>(p.coordinates), per_point[k]);
  });
  FiberReport report;
  report.n = n;
  report.count = points.size();
  for (auto& f : per_point) report.failures.insert(report.failures.end(), f.begin(), f.end());
  report.fiber_ok = report.failures.empty();
  return report;
}

FiberReport verify_fiber(int n) { return verify_points(n, build_catalog(n)); }

std::vector<VolumeEntry> volume_table(int n) {
  if (n != 4) throw PreconditionError("volume_table: only n = 4 is supported");
  std::vector<VolumeEntry> out;
  for (const auto& p : build_catalog(4)) out.push_back({p.name(), cm_volume_squared(p.as_quadext()).value});
  return out;
}

std::string to_string(TetrahedronCase c) {
  switch (c) {
    case TetrahedronCase::OppositeEdgesEqual: return "opposite-edges-equal";
    case TetrahedronCase::Cyclic123: return "cyclic-1-2-3";
    case TetrahedronCase::Cyclic231: return "cyclic-2-3-1";
    case TetrahedronCase::Cyclic312: return "cyclic-3-1-2";
  }
  return "unknown";
}

std::vector<TetrahedronCheck> classify_catalog_tetrahedra(int n) {
  std::vector<TetrahedronCheck> out;
  const auto catalog = build_catalog(n);
  std::vector<std::array<int, 4>> subsets;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) subsets.push_back({a, b, c, d});
  for (const auto& p : catalog) {
    const auto coords = p.as_quadext();
    for (const auto& sub : subsets) {
      TetrahedronCheck check{p.name(), sub, {}, {}};
      try {
        check.cases = classify_equiareal_tetrahedron(restrict_to(coords, {sub.begin(), sub.end()}));
      } catch (const std::exception& e) {
        check.error = e.what();
      }
      out.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace simplex_lab
