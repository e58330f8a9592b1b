#include "qpbw/report.hpp"

namespace qpbw::cli {

long Report::failed() const {
  long n = 0;
  for (const auto& c : cases)
    if (!c.pass) ++n;
  return n;
}

void Report::add_pass(nlohmann::json inputs) {
  cases.push_back(CaseRecord{std::move(inputs), true, nullptr});
}

void Report::add_fail(nlohmann::json inputs, nlohmann::json witness) {
  cases.push_back(CaseRecord{std::move(inputs), false, std::move(witness)});
}

nlohmann::json Report::to_json() const {
  nlohmann::json jcases = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json jc{{"inputs", c.inputs}, {"pass", c.pass}};
    if (!c.pass) jc["witness"] = c.witness;
    jcases.push_back(std::move(jc));
  }
  return nlohmann::json{{"schema_version", kReportSchemaVersion},
                        {"suite", suite},
                        {"config", config},
                        {"summary", {{"total", cases.size()}, {"failed", failed()}}},
                        {"cases", jcases},
                        {"extra", extra}};
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace qpbw::cli
