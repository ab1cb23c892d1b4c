#include "simplex_lab/report.hpp"

#include "simplex_lab/errors.hpp"

#include <algorithm>

namespace simplex_lab {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

void VerificationReport::add(Check check) {
  if (std::any_of(checks.begin(), checks.end(), [&](const Check& c) { return c.id == check.id; }))
    throw PreconditionError("duplicate check id " + check.id);
  checks.push_back(std::move(check));
}

bool VerificationReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

json VerificationReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks)
    list.push_back({{"id", c.id},
                    {"paper_ref", c.paper_ref},
                    {"status", to_string(c.status)},
                    {"detail", c.detail},
                    {"seconds", c.seconds}});
  return json{{"schema_version", kSchemaVersion}, {"suite", suite}, {"checks", list}, {"exit_status", exit_status()}};
}

}  // namespace simplex_lab
