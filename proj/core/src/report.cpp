#include "ghzlab/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace ghzlab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_to_ordered_json(const VerificationReport& r) {
  ordered_json j;
  j["command"] = r.command;
  ordered_json params = ordered_json::object();
  for (const auto& [key, val] : r.parameters) {
    params[key] = val;
  }
  j["parameters"] = std::move(params);
  j["passed"] = r.passed;
  if (r.value.has_value()) {
    j["value"] = ordered_json{{"num", r.value->num}, {"den", r.value->den}};
  }
  if (r.value_real.has_value()) {
    j["value_real"] = *r.value_real;
  }
  if (r.examined.has_value()) {
    j["examined"] = *r.examined;
  }
  j["witnesses"] = r.witnesses;
  j["counterexamples"] = r.counterexamples;
  j["notes"] = r.notes;
  if (r.seed.has_value()) {
    j["seed"] = *r.seed;
  }
  j["tool_version"] = r.tool_version;
  return j;
}

std::string dump(const ordered_json& j, bool pretty) {
  return (pretty ? j.dump(2) : j.dump()) + "\n";
}

}  // namespace

std::string to_json(const VerificationReport& report, bool pretty) {
  return dump(report_to_ordered_json(report), pretty);
}

std::string to_json_bundle(const std::string& command,
                           const std::vector<VerificationReport>& reports, bool pretty) {
  ordered_json j;
  j["command"] = command;
  j["passed"] = std::all_of(reports.begin(), reports.end(),
                            [](const VerificationReport& r) { return r.passed; });
  ordered_json list = ordered_json::array();
  for (const auto& r : reports) {
    list.push_back(report_to_ordered_json(r));
  }
  j["reports"] = std::move(list);
  j["tool_version"] = kToolVersion;
  return dump(j, pretty);
}

}  // namespace ghzlab
