#pragma once

// Per-vector reports and their JSON form. Reports are consumed by tests and
// by the batch census command, so the JSON carries a schema tag.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lorenz/census.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/lorenz_vector.hpp"
#include "lorenz/torus_detect.hpp"

namespace lorenz {

inline constexpr const char* kReportSchema = "lorenz-report/1";

struct Report {
  std::string name;
  std::string input;                     // vector text as given
  bool known = true;                     // false for "?" census rows
  std::optional<std::string> normalized; // canonical text of the normalized vector
  std::optional<std::string> tparams;
  std::optional<TmTriple> triple;
  InvariantReport invariants;
  TorusVerdict torus;
  std::vector<std::string> warnings;
  std::optional<std::string> error;      // set when the entry could not be processed

  bool operator==(const Report&) const = default;
};

/// Full report for one vector. Non-normalized input is destabilized first
/// (with a warning); the unknot gets the trivial report.
Report report(const LorenzVector& v, std::string name = {});
/// Never throws: per-entry failures are recorded in `error`.
Report report_entry(const CensusEntry& entry);
/// Evaluates entries on up to `threads` workers (0 = hardware concurrency);
/// output order matches input order.
std::vector<Report> report_all(std::span<const CensusEntry> entries, unsigned threads = 0);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InvariantReport& r);
InvariantReport invariant_report_from_json(const nlohmann::json& j);

}  // namespace lorenz
