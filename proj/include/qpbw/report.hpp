#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qpbw::cli {

inline constexpr const char* kReportSchemaVersion = "1";

/// One verification case: inputs, verdict, and a minimal witness on failure.
struct CaseRecord {
  nlohmann::json inputs;
  bool pass = true;
  nlohmann::json witness;  // null unless failed
};

struct Report {
  std::string suite;
  nlohmann::json config;
  std::vector<CaseRecord> cases;
  nlohmann::json extra;  // suite-specific aggregates (recorded data, dims, ...)

  long failed() const;
  void add_pass(nlohmann::json inputs);
  void add_fail(nlohmann::json inputs, nlohmann::json witness);

  /// Deterministic JSON rendering: schema version, summary counts, cases in
  /// enumeration order.  No timestamps.
  nlohmann::json to_json() const;
  std::string dump() const;
};

}  // namespace qpbw::cli
