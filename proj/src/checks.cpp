#include "simplex_lab/report.hpp"

#include "simplex_lab/errors.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace simplex_lab {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body`, which appends failure messages; a time limit <= 0 disables
// the runtime requirement.
Check timed_check(std::string id, std::string ref, double limit_seconds,
                  const std::function<void(std::vector<std::string>&, std::ostringstream&)>& body) {
  Check check{std::move(id), std::move(ref), CheckStatus::Pass, {}, 0.0};
  std::vector<std::string> failures;
  std::ostringstream info;
  const auto t0 = Clock::now();
  try {
    body(failures, info);
  } catch (const std::exception& e) {
    failures.push_back(std::string("exception: ") + e.what());
  }
  check.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds > 0 && check.seconds > limit_seconds) {
    std::ostringstream os;
    os << "runtime " << check.seconds << " s exceeds " << limit_seconds << " s";
    failures.push_back(os.str());
  }
  std::ostringstream detail;
  detail << info.str();
  for (const auto& f : failures) detail << (detail.tellp() > 0 ? "; " : "") << f;
  check.detail = detail.str();
  check.status = failures.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  return check;
}

std::size_t pairing_size(const CatalogPoint& p) {
  return std::get<PairingLabel>(p.label).pairing.size();
}

}  // namespace

VerificationReport run_all_checks(const CheckOptions& options) {
  VerificationReport report;
  report.suite = "simplex-lab all-checks";

  report.add(timed_check("ac1-exact-volumes", "Cayley-Menger squared volumes at the n=4 equiareal fiber points", 1.0,
                         [&](auto& fail, auto& info) {
    const auto ones = SquaredEdgeVector<Rational>::constant(4, Rational(1));
    if (cm_volume_squared(ones).value != Rational(5, 9216)) fail.push_back("W(all ones) != 5/9216");
    std::size_t checked = 0;
    for (const auto& p : build_catalog(4)) {
      const QuadExt w = cm_volume_squared(p.as_quadext()).value;
      Rational expected;
      if (p.is_cycle())
        expected = Rational(5, 1024);
      else {
        const std::size_t k = pairing_size(p);
        expected = k == 0 ? Rational(5, 9216) : (k == 1 ? Rational(-1, 3072) : Rational(-3, 1024));
      }
      if (!(w == QuadExt::embed(expected, w.d()))) fail.push_back(p.name() + ": W = " + w.to_string());
      ++checked;
    }
    info << checked << " points checked";
  }));

  report.add(timed_check("ac2-fiber-catalog", "equiareal fiber catalog: 64 points for n=4, 2 r_n points for n>=5", 5.0,
                         [&](auto& fail, auto& info) {
    if (partial_pairing_count(4) != 26 || enumerate_partial_pairings(4).size() != 26) fail.push_back("r_4 != 26");
    for (int n : options.exact_dimensions) {
      const auto fr = verify_fiber(n);
      const std::size_t expected = n == 4 ? 64 : 2 * partial_pairing_count(n);
      if (enumerate_partial_pairings(n).size() != partial_pairing_count(n))
        fail.push_back("n=" + std::to_string(n) + ": enumeration disagrees with closed form");
      if (fr.count != expected)
        fail.push_back("n=" + std::to_string(n) + ": " + std::to_string(fr.count) + " points, expected " +
                       std::to_string(expected));
      if (!fr.fiber_ok) fail.push_back("n=" + std::to_string(n) + ": " + std::to_string(fr.failures.size()) + " area mismatches");
      info << "n=" << n << ": " << fr.count << " points; ";
    }
  }));

  report.add(timed_check("ac3-jacobian-certificates", "Heron-map differential injective at catalog points; image equality iff same pairing",
                         120.0, [&](auto& fail, auto& info) {
    for (int n : options.exact_dimensions) {
      std::size_t bad = 0;
      const auto ranks = catalog_jacobian_ranks(n);
      for (const auto& r : ranks)
        if (r.rank != r.expected) ++bad;
      if (bad) fail.push_back("n=" + std::to_string(n) + ": " + std::to_string(bad) + " rank-deficient points");
      info << "n=" << n << ": " << ranks.size() << " ranks; ";
    }
    const auto sweep = sweep_pairing_images(5);
    if (sweep.labels.size() != 152) fail.push_back("n=5 sweep covers " + std::to_string(sweep.labels.size()) + " points");
    if (!sweep.mismatches.empty())
      fail.push_back(std::to_string(sweep.mismatches.size()) + " image comparisons disagree with pairing equality");
    info << "n=5 sweep over " << sweep.labels.size() << " points; ";
    const auto sampled = sweep_pairing_images(6, sample_pairing_labels(6, 16, options.seed));
    if (!sampled.mismatches.empty())
      fail.push_back("n=6 sample: " + std::to_string(sampled.mismatches.size()) + " image comparisons disagree");
    info << "n=6 sampled sweep over " << sampled.labels.size() << " points";
  }));

  report.add(timed_check("ac4-oracle-equivalence", "Cayley-Menger determinant agrees with the Gram determinant", 0.0,
                         [&](auto& fail, auto& info) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    for (int n = 1; n <= 6; ++n) {
      for (int k = 0; k < options.oracle_samples; ++k) {
        std::vector<Rational> e;
        for (std::size_t m = 0; m < pair_count(n); ++m) {
          const long p = num(rng);
          const long q = den(rng);
          e.emplace_back(p, q);
        }
        const SquaredEdgeVector<Rational> s(n, std::move(e));
        if (cm_volume_squared(s) != gram_volume_squared(s)) {
          fail.push_back("n=" + std::to_string(n) + " sample " + std::to_string(k) + " disagrees");
          break;
        }
      }
    }
    info << options.oracle_samples << " samples per n in 1..6";
  }));

  report.add(timed_check("ac5-odd-curves", "odd-dimensional curve with bounded areas and linearly growing volume", 30.0,
                         [&](auto& fail, auto& info) {
    for (int q : options.odd_q) {
      const auto r = verify_odd_curve(q);
      if (!r.ok)
        for (const auto& f : r.failures) fail.push_back("q=" + std::to_string(q) + ": " + f);
      info << "q=" << q << ": W = " << r.volume << "; ";
    }
  }));

  const std::vector<std::array<Rational, 3>> params{{Rational(1), Rational(1), Rational(1)},
                                                     {Rational(2), Rational(1), Rational(3)},
                                                     {Rational(3), Rational(-2), Rational(1)}};

  report.add(timed_check("ac6-n5-asymptotics", "leading terms of areas and volume along the n=5 curve", 0.0,
                         [&](auto& fail, auto& info) {
    for (const auto& [a, b, c] : params) {
      const auto r = verify_asymptotics(n5_curve(a, b, c), n5_claims(a, b, c));
      for (const auto& res : r.results)
        if (!res.ok) fail.push_back("(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ") " +
                                    res.claim.quantity.to_string() + ": " + res.detail);
      const auto r4 = verify_asymptotics(n4_curve(a, b, c), n4_claims(a, b, c));
      for (const auto& res : r4.results)
        if (!res.ok) fail.push_back("n4 (" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ") " + res.detail);
    }
    info << params.size() << " parameter triples";
  }));

  report.add(timed_check("ac7-witness-certificates", "Q*W and P*D*W stay bounded along the curves while W does not", 0.0,
                         [&](auto& fail, auto& info) {
    for (const auto& [a, b, c] : params) {
      const std::string tag = "(" + a.to_string() + "," + b.to_string() + "," + c.to_string() + ")";
      const auto c4 = n4_curve(a, b, c);
      const auto c5 = n5_curve(a, b, c);
      const auto w4 = witness_degree_certificate(c4, WitnessPolynomial::one());
      const auto q4 = witness_degree_certificate(c4, WitnessPolynomial::q());
      const auto w5 = witness_degree_certificate(c5, WitnessPolynomial::one());
      const auto pd5 = witness_degree_certificate(c5, WitnessPolynomial::pd({0, 1, 2, 3, 4}));
      if (w4.volume_degree != Degree::of(4)) fail.push_back(tag + " n=4: deg W = " + w4.volume_degree.to_string());
      if (w5.volume_degree != Degree::of(2)) fail.push_back(tag + " n=5: deg W = " + w5.volume_degree.to_string());
      if (!q4.passed) fail.push_back(tag + " deg Q*W = " + q4.product_degree.to_string());
      if (!pd5.passed) fail.push_back(tag + " deg P*D*W = " + pd5.product_degree.to_string());
      info << tag << ": deg QW=" << q4.product_degree.to_string() << ", deg PDW=" << pd5.product_degree.to_string() << "; ";
    }
  }));

  report.add(timed_check("ac8-tetrahedron-classification", "every equiareal tetrahedron face of the n=4 catalog is classified", 0.0,
                         [&](auto& fail, auto& info) {
    const auto checks = classify_catalog_tetrahedra(4);
    std::size_t bad = 0;
    for (const auto& c : checks)
      if (c.cases.empty()) ++bad;
    if (bad) fail.push_back(std::to_string(bad) + " restrictions unclassified");
    info << checks.size() << " restrictions";
  }));

  TrackerConfig cfg;
  cfg.seed = options.seed;
  cfg.newton_tol = options.newton_tol;

  report.add(timed_check("ac9-fiber-tracking", "64-point fiber of the n=4 Heron map, at most 32 congruence classes", 0.0,
                         [&](auto& fail, auto& info) {
    double slowest = 0.0;
    for (int k = 0; k < options.fiber_targets; ++k) {
      TrackerConfig c = cfg;
      c.seed = options.seed + static_cast<std::uint64_t>(k);
      const auto target = perturbed_equiareal_target(4, 1e-2, c.seed);
      const auto t0 = Clock::now();
      const auto r = track_fiber(target, c);
      slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - t0).count());
      double worst = 0.0;
      for (const auto& e : r.endpoints) worst = std::max(worst, area_residual(e, target));
      const std::string tag = "target " + std::to_string(k);
      if (r.endpoints.size() != 64) fail.push_back(tag + ": " + std::to_string(r.endpoints.size()) + " endpoints");
      if (worst >= 1e-8) fail.push_back(tag + ": residual " + std::to_string(worst));
      if (r.negation_pair_count != 32) fail.push_back(tag + ": " + std::to_string(r.negation_pair_count) + " negation pairs");
      if (r.class_count > 32) fail.push_back(tag + ": class_count " + std::to_string(r.class_count));
    }
    const auto s_true = random_real_simplex(4, options.seed, 0.05);
    const auto target = area_map(s_true);
    const auto t0 = Clock::now();
    const auto r = track_fiber(target, cfg);
    slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - t0).count());
    bool plus = false;
    bool minus = false;
    for (const auto& e : r.endpoints) {
      plus = plus || max_distance(e, s_true) < 1e-6;
      minus = minus || max_distance(e, -s_true) < 1e-6;
    }
    if (!plus || !minus) fail.push_back("+-s_true not both recovered");
    if (slowest > 60.0) fail.push_back("slowest target took " + std::to_string(slowest) + " s");
    info << options.fiber_targets << " perturbed targets + 1 realizable target; slowest " << slowest << " s";
  }));

  report.add(timed_check("ac10-uniqueness-probe", "random Newton starts for n=5 only reach +-s_true", 0.0,
                         [&](auto& fail, auto& info) {
    const auto s_true = random_real_simplex(5, options.seed);
    const auto r = local_uniqueness_probe(s_true, options.probe_trials, cfg);
    if (!r.ok()) fail.push_back(std::to_string(r.anomalies.size()) + " endpoints outside {+s, -s}");
    if (r.converged == 0) fail.push_back("no start converged");
    info << r.converged << "/" << r.trials << " converged (" << r.plus << " at +s, " << r.minus << " at -s)";
  }));

  return report;
}

}  // namespace simplex_lab
