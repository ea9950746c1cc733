#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace vcalc {

// One checked coefficient: identity name plus λ-power (or -1 when the identity
// is not a λ-bracket, e.g. an n-th product).
struct ReportEntry {
  std::string identity;
  int lambda_power = -1;
  std::string expected;
  std::string computed;
  std::string difference;  // "0" when the check passes
  bool pass = false;
  double seconds = 0;  // wall time of the whole identity; text output only
};

struct VerificationReport {
  static constexpr const char* kSchema = "vcalc-report/1";

  std::string suite;
  std::string mode;
  std::vector<std::string> header;  // free-form "key = value" lines
  std::vector<ReportEntry> entries;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t identity_count() const;  // distinct identity names
  void append(const VerificationReport& other);

  std::string to_text(bool with_timing = false) const;
  // Deterministic: fixed key order, no timing.
  nlohmann::ordered_json to_json() const;
};

}  // namespace vcalc
