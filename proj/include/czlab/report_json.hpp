#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "czlab/verify.hpp"

namespace czlab {

// Machine-readable report. Key order is fixed, and elapsed_ms is always
// emitted as 0 so that a given seed and parameter set produces a
// byte-identical document regardless of wall-clock timings or --jobs.
inline nlohmann::ordered_json reports_to_json(
    const std::vector<CheckReport>& reports, std::uint64_t seed) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["seed"] = seed;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) {
    nlohmann::ordered_json jr;
    jr["check_id"] = r.check_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    jr["params"] = params;
    jr["verdict"] = verdict_name(r.verdict);
    if (r.witness) jr["witness"] = *r.witness;
    jr["elapsed_ms"] = 0;
    doc["reports"].push_back(jr);
  }
  return doc;
}

inline std::string reports_to_json_text(const std::vector<CheckReport>& reports,
                                        std::uint64_t seed) {
  return reports_to_json(reports, seed).dump(2) + "\n";
}

}  // namespace czlab
