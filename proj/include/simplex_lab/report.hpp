#pragma once

#include "simplex_lab/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace simplex_lab {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  double seconds = 0.0;
};

/// Machine-readable verification result. exit_status() is 0 iff no check failed.
struct VerificationReport {
  static constexpr int kSchemaVersion = 1;

  std::string suite;
  std::vector<Check> checks;

  /// Throws PreconditionError on a duplicate id.
  void add(Check check);
  bool all_passed() const;
  int exit_status() const { return all_passed() ? 0 : 1; }
  json to_json() const;
};

struct CheckOptions {
  std::vector<int> exact_dimensions{4, 5, 6};
  std::vector<int> odd_q{3, 4};
  int oracle_samples = 500;
  int fiber_targets = 20;
  int probe_trials = 200;
  std::uint64_t seed = 7;
  double newton_tol = 1e-10;
};

/// Runs the full verification suite; check ids match the acceptance list.
VerificationReport run_all_checks(const CheckOptions& options);

}  // namespace simplex_lab
