#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghzlab/rational.hpp"
#include "ghzlab/version.hpp"

namespace ghzlab {

// How many witnesses or counterexamples a report stores before it switches to
// counting only.
inline constexpr int kReportItemCap = 16;

// Machine-readable result of one check or computation. Serialized as a single
// JSON document with a fixed key order, so reports with equal content are
// byte-identical.
struct VerificationReport {
  std::string command;
  // Ordered key/value pairs; insertion order is the serialization order.
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = true;
  // Exact rational result, where the command computes one. Never rendered as
  // a float.
  std::optional<Rational> value;
  // Floating-point result for quantum successes, which are irrational in
  // general.
  std::optional<double> value_real;
  std::optional<std::uint64_t> examined;
  std::vector<std::string> witnesses;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
  std::optional<std::uint64_t> seed;
  std::string tool_version = kToolVersion;

  void add_parameter(const std::string& key, const std::string& val) {
    parameters.emplace_back(key, val);
  }

  // Records a named check in the notes and folds its outcome into `passed`.
  void add_check(const std::string& name, bool ok) {
    notes.push_back(name + ": " + (ok ? "ok" : "FAILED"));
    passed = passed && ok;
  }

  void add_counterexample(std::uint64_t already_found, const std::string& rendering) {
    if (already_found < static_cast<std::uint64_t>(kReportItemCap)) {
      counterexamples.push_back(rendering);
    }
  }
};

std::string to_json(const VerificationReport& report, bool pretty);

// Umbrella serialization for the `all` command: one document holding every
// sub-report in order.
std::string to_json_bundle(const std::string& command,
                           const std::vector<VerificationReport>& reports, bool pretty);

}  // namespace ghzlab
