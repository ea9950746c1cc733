#include "vcalc/reduction/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace vcalc {

bool VerificationReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

std::size_t VerificationReport::identity_count() const {
  std::set<std::string> names;
  for (const auto& e : entries) names.insert(e.identity);
  return names.size();
}

void VerificationReport::append(const VerificationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  if (!mode.empty()) out << "mode: " << mode << "\n";
  for (const auto& h : header) out << h << "\n";
  std::string current;
  for (const auto& e : entries) {
    if (e.identity != current) {
      current = e.identity;
      out << "\n" << current;
      if (with_timing) out << "  (" << std::fixed << std::setprecision(2) << e.seconds << " s)";
      out << "\n";
    }
    out << "  " << (e.pass ? "PASS" : "FAIL");
    if (e.lambda_power >= 0) out << "  λ^" << e.lambda_power;
    out << "  expected: " << e.expected << "\n";
    if (!e.pass) {
      out << "        computed: " << e.computed << "\n";
      out << "        difference: " << e.difference << "\n";
    }
  }
  for (const auto& n : notes) out << "\nnote: " << n;
  if (!notes.empty()) out << "\n";
  out << "\nresult: " << (passed() ? "PASS" : "FAIL") << " (" << identity_count() << " identities, "
      << entries.size() << " coefficients)\n";
  return out.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["suite"] = suite;
  doc["mode"] = mode;
  doc["header"] = header;
  doc["pass"] = passed();
  auto& arr = doc["results"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json r;
    r["identity"] = e.identity;
    r["lambda_power"] = e.lambda_power >= 0 ? nlohmann::ordered_json(e.lambda_power) : nlohmann::ordered_json();
    r["expected"] = e.expected;
    r["computed"] = e.computed;
    r["difference"] = e.difference;
    r["pass"] = e.pass;
    arr.push_back(std::move(r));
  }
  doc["notes"] = notes;
  return doc;
}

}  // namespace vcalc
