#ifndef BMAT_REPORT_JSON_HPP
#define BMAT_REPORT_JSON_HPP

// JSON form of a verification report. Keys keep insertion order so the
// output is byte-for-byte stable.

#include <string>

#include <json.hpp>

#include "bmat/verify.hpp"

namespace bmat::verify {

inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json out;
  out["version"] = report.version;
  auto claims = nlohmann::ordered_json::array();
  for (const auto& c : report.claims) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["status"] = to_string(c.status);
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["paper_ref"] = c.paper_ref;
    claims.push_back(std::move(j));
  }
  out["claims"] = std::move(claims);
  out["summary"] = {{"pass", report.summary.pass},
                    {"fail", report.summary.fail},
                    {"discrepancy", report.summary.discrepancy}};
  return out;
}

inline std::string to_json_string(const Report& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace bmat::verify

#endif  // BMAT_REPORT_JSON_HPP
