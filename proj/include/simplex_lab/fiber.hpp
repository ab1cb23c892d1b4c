#pragma once

#include "simplex_lab/catalog.hpp"
#include "simplex_lab/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace simplex_lab {

using ComplexEdges = SquaredEdgeVector<Complex>;
using ComplexAreas = SquaredAreaVector<Complex>;

struct TrackerConfig {
  double step_initial = 0.05;
  double step_min = 1e-7;
  double newton_tol = 1e-10;  // max-norm residual bound for accepted endpoints
  int newton_max_iters = 50;
  std::optional<Complex> gamma;  // drawn from `seed` when empty
  std::uint64_t seed = 0;
  double dedupe_tol = 1e-6;
  double divergence_bound = 1e8;  // paths with max |s_ij| above this are abandoned
  int corrector_max_iters = 4;
  int max_retries = 2;  // re-runs of a failed path with halved steps

  /// Throws PreconditionError on inconsistent settings.
  void validate() const;
  /// The homotopy twist: `gamma` if set, otherwise a seeded unit complex number.
  Complex resolved_gamma() const;
};

enum class NewtonStatus { Converged, IterationLimit, Singular, Diverged };
std::string to_string(NewtonStatus s);

struct NewtonResult {
  ComplexEdges point;
  NewtonStatus status = NewtonStatus::IterationLimit;
  int iterations = 0;
  double residual = 0.0;  // max |phi(s) - target|
};

/// max_k |S_k(s) - target_k|
double area_residual(const ComplexEdges& s, const ComplexAreas& target);

/// Newton correction of s toward area_map(s) = target. Square systems (n = 4)
/// take plain Newton steps; overdetermined ones (n >= 5) take Gauss-Newton
/// least-squares steps with backtracking on the residual norm. Failures are
/// reported in the status, never thrown.
NewtonResult newton_correct(const ComplexEdges& s, const ComplexAreas& target, const TrackerConfig& cfg);

struct PathRecord {
  std::string start;  // catalog label
  NewtonStatus status = NewtonStatus::IterationLimit;
  bool succeeded = false;
  int steps = 0;
  int rejected_steps = 0;
  int retries = 0;
  double residual = 0.0;
  std::optional<std::size_t> endpoint;  // index into FiberResult::endpoints
};

struct FiberResult {
  std::vector<ComplexEdges> endpoints;  // distinct at dedupe_tol
  std::vector<double> residuals;
  std::vector<PathRecord> paths;  // one per catalog point, catalog order
  std::size_t path_failures = 0;
  std::size_t duplicate_endpoints = 0;  // successful paths landing on an earlier endpoint
  /// negation[i] = index of the endpoint equal to -endpoints[i], if any.
  std::vector<std::optional<std::size_t>> negation;
  std::size_t negation_pair_count = 0;
  /// Distinct real strictly positive endpoints after identifying s ~ -s.
  std::size_t class_count = 0;
  std::size_t excluded_from_classes = 0;  // complex or non-positive endpoints
  Complex gamma;
};

/// Tracks the 64 catalog points of the n = 4 fiber over y0 to the fiber
/// over `target` along
///   H(s, tau) = (1 - tau) gamma (phi(s) - y0) + tau (phi(s) - target).
/// Throws PreconditionError unless n = 4 and RingError if every path fails.
FiberResult track_fiber(const ComplexAreas& target, const TrackerConfig& cfg);

/// The equiareal point y0 with all entries 3/16.
ComplexAreas equiareal_point(int n);

/// Squared edges of a random real n-simplex. With `perturbation` >= 0 the
/// vertices are those of the unit regular simplex moved by uniform noise of
/// that size; otherwise they are standard Gaussian.
ComplexEdges random_real_simplex(int n, std::uint64_t seed, double perturbation = -1.0);

/// y0 moved by a random direction of max-norm `distance` (real).
ComplexAreas perturbed_equiareal_target(int n, double distance, std::uint64_t seed);

enum class ProbeBucket { Plus, Minus, Other, NotConverged };
std::string to_string(ProbeBucket b);

struct ProbeReport {
  int n = 0;
  int trials = 0;
  std::size_t converged = 0;
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t not_converged = 0;
  std::vector<ComplexEdges> anomalies;  // converged outside {+s_true, -s_true}
  bool ok() const { return anomalies.empty(); }
};

/// Newton from `start` against area_map(s_true), bucketed by endpoint.
ProbeBucket probe_from(const ComplexEdges& start, const ComplexEdges& s_true, const TrackerConfig& cfg);

/// `trials` Newton runs from random complex starts in a box of half-width
/// 2 max|s_true| (n >= 5, s_true real).
ProbeReport local_uniqueness_probe(const ComplexEdges& s_true, int trials, const TrackerConfig& cfg);

/// max_k |x_k - y_k|
double max_distance(const ComplexEdges& x, const ComplexEdges& y);

}  // namespace simplex_lab
