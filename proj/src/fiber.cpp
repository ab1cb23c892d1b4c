#include "simplex_lab/fiber.hpp"

#include "simplex_lab/errors.hpp"
#include "simplex_lab/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace simplex_lab {

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

Vec to_vec(const ComplexEdges& s) {
  Vec v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t k = 0; k < s.size(); ++k) v(static_cast<Eigen::Index>(k)) = s[k];
  return v;
}

Vec to_vec(const ComplexAreas& a) {
  Vec v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t k = 0; k < a.size(); ++k) v(static_cast<Eigen::Index>(k)) = a[k];
  return v;
}

ComplexEdges to_edges(int n, const Vec& v) {
  return {n, std::vector<Complex>(v.data(), v.data() + v.size())};
}

// Heron map and its Jacobian evaluated directly on Eigen storage.
class HeronSystem {
public:
  explicit HeronSystem(int n) : n_(n), triples_(triples(n)) {
    for (const auto& [i, j, k] : triples_)
      cols_.push_back({pair_index(n, i, j), pair_index(n, j, k), pair_index(n, k, i)});
  }

  int n() const { return n_; }
  Eigen::Index unknowns() const { return static_cast<Eigen::Index>(pair_count(n_)); }
  Eigen::Index equations() const { return static_cast<Eigen::Index>(triples_.size()); }

  Vec areas(const Vec& s) const {
    Vec out(equations());
    for (std::size_t r = 0; r < cols_.size(); ++r) {
      const Complex a = s(static_cast<Eigen::Index>(cols_[r][0]));
      const Complex b = s(static_cast<Eigen::Index>(cols_[r][1]));
      const Complex c = s(static_cast<Eigen::Index>(cols_[r][2]));
      out(static_cast<Eigen::Index>(r)) = (2.0 * (a * b + b * c + c * a) - a * a - b * b - c * c) / 16.0;
    }
    return out;
  }

  Mat jacobian(const Vec& s) const {
    Mat d = Mat::Zero(equations(), unknowns());
    for (std::size_t r = 0; r < cols_.size(); ++r) {
      const auto& c = cols_[r];
      for (std::size_t m = 0; m < 3; ++m) {
        const Complex own = s(static_cast<Eigen::Index>(c[m]));
        const Complex o1 = s(static_cast<Eigen::Index>(c[(m + 1) % 3]));
        const Complex o2 = s(static_cast<Eigen::Index>(c[(m + 2) % 3]));
        d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c[m])) = (o1 + o2 - own) / 8.0;
      }
    }
    return d;
  }

private:
  int n_;
  std::vector<Triple> triples_;
  std::vector<std::array<std::size_t, 3>> cols_;
};

double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

bool finite(const Vec& v) {
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (!std::isfinite(v(k).real()) || !std::isfinite(v(k).imag())) return false;
  return true;
}

// Solves J dx = rhs (least squares when overdetermined). Empty on numerical
// rank deficiency.
std::optional<Vec> solve(const Mat& j, const Vec& rhs) {
  Eigen::ColPivHouseholderQR<Mat> qr(j);
  qr.setThreshold(1e-12);
  if (qr.rank() < j.cols()) return std::nullopt;
  return Vec(qr.solve(rhs));
}

struct NewtonOutcome {
  Vec s;
  NewtonStatus status;
  int iterations;
  double residual;
};

NewtonOutcome newton_on(const HeronSystem& sys, Vec s, const Vec& target, double tol, int max_iters,
                        double bound) {
  const bool square = sys.equations() == sys.unknowns();
  Vec f = sys.areas(s) - target;
  double res = max_abs(f);
  for (int it = 0; it <= max_iters; ++it) {
    if (res < tol) return {s, NewtonStatus::Converged, it, res};
    if (it == max_iters) break;
    auto step = solve(sys.jacobian(s), -f);
    if (!step) return {s, NewtonStatus::Singular, it, res};
    if (square) {
      s += *step;
      f = sys.areas(s) - target;
      res = max_abs(f);
    } else {
      // backtracking on the residual 2-norm
      const double base = f.norm();
      double lambda = 1.0;
      Vec trial = s + *step;
      Vec ft = sys.areas(trial) - target;
      while (ft.norm() >= base && lambda > 1.0 / 1024) {
        lambda /= 2;
        trial = s + lambda * *step;
        ft = sys.areas(trial) - target;
      }
      s = trial;
      f = ft;
      res = max_abs(f);
    }
    if (!finite(s) || max_abs(s) > bound) return {s, NewtonStatus::Diverged, it + 1, res};
  }
  return {s, NewtonStatus::IterationLimit, max_iters, res};
}

}  // namespace

void TrackerConfig::validate() const {
  if (!(step_min > 0 && step_min <= step_initial && step_initial <= 1))
    throw PreconditionError("TrackerConfig: need 0 < step_min <= step_initial <= 1");
  if (!(newton_tol > 0 && dedupe_tol > 0 && divergence_bound > 0))
    throw PreconditionError("TrackerConfig: tolerances must be positive");
  if (newton_max_iters < 1 || corrector_max_iters < 1 || max_retries < 0)
    throw PreconditionError("TrackerConfig: iteration limits must be positive");
  if (gamma && std::abs(std::abs(*gamma) - 1.0) > 1e-12)
    throw PreconditionError("TrackerConfig: gamma must have unit modulus");
}

Complex TrackerConfig::resolved_gamma() const {
  if (gamma) return *gamma;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

std::string to_string(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::Converged: return "converged";
    case NewtonStatus::IterationLimit: return "iteration-limit";
    case NewtonStatus::Singular: return "singular";
    case NewtonStatus::Diverged: return "diverged";
  }
  return "unknown";
}

double area_residual(const ComplexEdges& s, const ComplexAreas& target) {
  const HeronSystem sys(s.n());
  return max_abs(sys.areas(to_vec(s)) - to_vec(target));
}

double max_distance(const ComplexEdges& x, const ComplexEdges& y) {
  if (x.n() != y.n()) throw PreconditionError("max_distance: dimension mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, std::abs(x[k] - y[k]));
  return d;
}

NewtonResult newton_correct(const ComplexEdges& s, const ComplexAreas& target, const TrackerConfig& cfg) {
  if (s.n() != target.n()) throw PreconditionError("newton_correct: dimension mismatch");
  const HeronSystem sys(s.n());
  auto out = newton_on(sys, to_vec(s), to_vec(target), cfg.newton_tol, cfg.newton_max_iters, cfg.divergence_bound);
  return {to_edges(s.n(), out.s), out.status, out.iterations, out.residual};
}

ComplexAreas equiareal_point(int n) {
  return {n, std::vector<Complex>(triple_count(n), Complex(3.0 / 16.0, 0.0))};
}

namespace {

struct PathOutcome {
  Vec s;
  NewtonStatus status = NewtonStatus::IterationLimit;
  bool ok = false;
  int steps = 0;
  int rejected = 0;
  double residual = 0.0;
};

PathOutcome track_path(const HeronSystem& sys, const Vec& start, const Vec& y0, const Vec& target, Complex gamma,
                       const TrackerConfig& cfg, double step_initial, double step_min) {
  // phi(s) = y(tau) with y(tau) = ((1-tau) gamma y0 + tau target) / ((1-tau) gamma + tau)
  auto path_point = [&](double tau) -> Vec {
    const Complex c = (1.0 - tau) * gamma + tau;
    return ((1.0 - tau) * gamma * y0 + tau * target) / c;
  };
  auto path_velocity = [&](double tau) -> Vec {
    const Complex c = (1.0 - tau) * gamma + tau;
    const Vec b = (1.0 - tau) * gamma * y0 + tau * target;
    return ((target - gamma * y0) * c - b * (1.0 - gamma)) / (c * c);
  };
  constexpr int kMaxSteps = 200000;
  constexpr double kCorrectorTol = 1e-9;

  PathOutcome out;
  Vec s = start;
  double tau = 0.0;
  double h = step_initial;
  int clean = 0;
  while (tau < 1.0) {
    if (out.steps + out.rejected > kMaxSteps) {
      out.status = NewtonStatus::IterationLimit;
      return out;
    }
    const double next = std::min(1.0, tau + h);
    const double dt = next - tau;
    bool accepted = false;
    if (auto v = solve(sys.jacobian(s), path_velocity(tau))) {
      Vec x = s + dt * *v;  // Euler predictor
      const Vec y = path_point(next);
      for (int it = 0; it < cfg.corrector_max_iters; ++it) {
        auto dx = solve(sys.jacobian(x), y - sys.areas(x));
        if (!dx || !finite(*dx)) break;
        x += *dx;
        if (max_abs(*dx) <= kCorrectorTol * (1.0 + max_abs(x))) {
          accepted = true;
          break;
        }
      }
      if (accepted && max_abs(x) > cfg.divergence_bound) {
        out.s = x;
        out.status = NewtonStatus::Diverged;
        return out;
      }
      if (accepted) s = x;
    }
    if (accepted) {
      tau = next;
      ++out.steps;
      if (++clean >= 3) {
        h = std::min(1.0, 2.0 * h);
        clean = 0;
      }
    } else {
      ++out.rejected;
      clean = 0;
      h /= 2.0;
      if (h < step_min) {
        out.s = s;
        out.status = NewtonStatus::Singular;
        return out;
      }
    }
  }
  auto end = newton_on(sys, s, target, cfg.newton_tol, cfg.newton_max_iters, cfg.divergence_bound);
  out.s = end.s;
  out.status = end.status;
  out.residual = end.residual;
  out.ok = end.status == NewtonStatus::Converged;
  return out;
}

bool all_real(const ComplexEdges& s, double tol) {
  return std::all_of(s.entries().begin(), s.entries().end(), [&](const Complex& x) { return std::abs(x.imag()) <= tol; });
}

}  // namespace

FiberResult track_fiber(const ComplexAreas& target, const TrackerConfig& cfg) {
  cfg.validate();
  if (target.n() != 4) throw PreconditionError("track_fiber: only n = 4 is supported");
  const HeronSystem sys(4);
  const auto catalog = build_catalog(4);
  const Vec y0 = to_vec(equiareal_point(4));
  const Vec tgt = to_vec(target);
  const Complex gamma = cfg.resolved_gamma();

  std::vector<PathOutcome> outcomes(catalog.size());
  std::vector<int> retries(catalog.size(), 0);
  parallel_for(catalog.size(), [&](std::size_t k) {
    const Vec start = to_vec(catalog[k].as_complex());
    double step = cfg.step_initial;
    double floor = cfg.step_min;
    outcomes[k] = track_path(sys, start, y0, tgt, gamma, cfg, step, floor);
    while (!outcomes[k].ok && retries[k] < cfg.max_retries) {
      ++retries[k];
      step /= 2;
      floor /= 2;
      outcomes[k] = track_path(sys, start, y0, tgt, gamma, cfg, step, floor);
    }
  });

  FiberResult result;
  result.gamma = gamma;
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const auto& o = outcomes[k];
    PathRecord rec{catalog[k].name(), o.status, o.ok, o.steps, o.rejected, retries[k], o.residual, std::nullopt};
    if (!o.ok) {
      ++result.path_failures;
      result.paths.push_back(rec);
      continue;
    }
    const ComplexEdges e = to_edges(4, o.s);
    for (std::size_t m = 0; m < result.endpoints.size(); ++m)
      if (max_distance(e, result.endpoints[m]) < cfg.dedupe_tol) {
        rec.endpoint = m;
        break;
      }
    if (rec.endpoint) {
      ++result.duplicate_endpoints;
    } else {
      rec.endpoint = result.endpoints.size();
      result.endpoints.push_back(e);
      result.residuals.push_back(o.residual);
    }
    result.paths.push_back(rec);
  }
  if (result.endpoints.empty()) throw RingError("track_fiber: every path failed");

  const std::size_t m = result.endpoints.size();
  result.negation.assign(m, std::nullopt);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && max_distance(result.endpoints[i], -result.endpoints[j]) < cfg.dedupe_tol) {
        result.negation[i] = j;
        break;
      }
  for (std::size_t i = 0; i < m; ++i)
    if (result.negation[i] && *result.negation[i] > i && result.negation[*result.negation[i]] == i)
      ++result.negation_pair_count;

  // Congruence classes: real endpoints with all entries of one strict sign,
  // normalized to the positive representative.
  std::vector<ComplexEdges> classes;
  for (const auto& e : result.endpoints) {
    const bool real = all_real(e, cfg.dedupe_tol);
    const bool pos = std::all_of(e.entries().begin(), e.entries().end(), [&](const Complex& x) { return x.real() > cfg.dedupe_tol; });
    const bool neg = std::all_of(e.entries().begin(), e.entries().end(), [&](const Complex& x) { return x.real() < -cfg.dedupe_tol; });
    if (!real || !(pos || neg)) {
      ++result.excluded_from_classes;
      continue;
    }
    const ComplexEdges rep = pos ? e : -e;
    const bool seen = std::any_of(classes.begin(), classes.end(),
                                  [&](const ComplexEdges& c) { return max_distance(c, rep) < cfg.dedupe_tol; });
    if (!seen) classes.push_back(rep);
  }
  result.class_count = classes.size();
  return result;
}

ComplexEdges random_real_simplex(int n, std::uint64_t seed, double perturbation) {
  if (n < 1) throw PreconditionError("random_real_simplex: n must be >= 1");
  std::mt19937_64 rng(seed);
  const auto vertices = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<double>> p(vertices);
  if (perturbation >= 0) {
    // unit regular simplex: e_i / sqrt(2) in R^(n+1)
    std::uniform_real_distribution<double> noise(-perturbation, perturbation);
    for (std::size_t i = 0; i < vertices; ++i) {
      p[i].assign(vertices, 0.0);
      p[i][i] = std::numbers::sqrt2 / 2.0;
      for (auto& x : p[i]) x += noise(rng);
    }
  } else {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (auto& v : p) {
      v.resize(static_cast<std::size_t>(n));
      for (auto& x : v) x = normal(rng);
    }
  }
  std::vector<Complex> entries;
  for (const auto& [i, j] : pairs(n)) {
    double d = 0.0;
    for (std::size_t c = 0; c < p[0].size(); ++c) {
      const double diff = p[static_cast<std::size_t>(i)][c] - p[static_cast<std::size_t>(j)][c];
      d += diff * diff;
    }
    entries.emplace_back(d, 0.0);
  }
  return {n, std::move(entries)};
}

ComplexAreas perturbed_equiareal_target(int n, double distance, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> dir(triple_count(n));
  for (auto& x : dir) x = u(rng);
  double largest = 0.0;
  for (double x : dir) largest = std::max(largest, std::abs(x));
  const double scale_by = largest > 0 ? distance / largest : 0.0;
  std::vector<Complex> entries;
  for (double x : dir) entries.emplace_back(3.0 / 16.0 + x * scale_by, 0.0);
  return {n, std::move(entries)};
}

std::string to_string(ProbeBucket b) {
  switch (b) {
    case ProbeBucket::Plus: return "+s";
    case ProbeBucket::Minus: return "-s";
    case ProbeBucket::Other: return "other";
    case ProbeBucket::NotConverged: return "not-converged";
  }
  return "unknown";
}

ProbeBucket probe_from(const ComplexEdges& start, const ComplexEdges& s_true, const TrackerConfig& cfg) {
  const auto res = newton_correct(start, area_map(s_true), cfg);
  if (res.status != NewtonStatus::Converged) return ProbeBucket::NotConverged;
  if (max_distance(res.point, s_true) < cfg.dedupe_tol) return ProbeBucket::Plus;
  if (max_distance(res.point, -s_true) < cfg.dedupe_tol) return ProbeBucket::Minus;
  return ProbeBucket::Other;
}

ProbeReport local_uniqueness_probe(const ComplexEdges& s_true, int trials, const TrackerConfig& cfg) {
  cfg.validate();
  if (s_true.n() < 5) throw PreconditionError("local_uniqueness_probe: need n >= 5");
  if (!all_real(s_true, 0.0)) throw PreconditionError("local_uniqueness_probe: s_true must be real");
  if (trials < 0) throw PreconditionError("local_uniqueness_probe: trials must be >= 0");
  double radius = 0.0;
  for (const auto& x : s_true.entries()) radius = std::max(radius, 2.0 * std::abs(x));

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> box(-radius, radius);
  std::vector<ComplexEdges> starts;
  for (int t = 0; t < trials; ++t) {
    std::vector<Complex> e;
    for (std::size_t k = 0; k < s_true.size(); ++k) {
      const double re = box(rng);
      const double im = box(rng);
      e.emplace_back(re, im);
    }
    starts.emplace_back(s_true.n(), std::move(e));
  }

  const ComplexAreas target = area_map(s_true);
  std::vector<NewtonResult> results(starts.size());
  parallel_for(starts.size(), [&](std::size_t k) { results[k] = newton_correct(starts[k], target, cfg); });

  ProbeReport report;
  report.n = s_true.n();
  report.trials = trials;
  for (const auto& r : results) {
    if (r.status != NewtonStatus::Converged) {
      ++report.not_converged;
      continue;
    }
    ++report.converged;
    if (max_distance(r.point, s_true) < cfg.dedupe_tol)
      ++report.plus;
    else if (max_distance(r.point, -s_true) < cfg.dedupe_tol)
      ++report.minus;
    else
      report.anomalies.push_back(r.point);
  }
  return report;
}

}  // namespace simplex_lab
