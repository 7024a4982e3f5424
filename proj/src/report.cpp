#include "qaw/report.hpp"

#include <algorithm>

namespace qaw {

std::string residual_of(const SkewLaurentOp& residual) {
  return residual.is_zero() ? std::string() : "nonzero operator: " + summarize(residual);
}

std::string residual_of(const LaurentPoly& residual) {
  return residual.is_zero() ? std::string() : "nonzero polynomial: " + summarize(residual);
}

std::string residual_of(const Rational& lhs, const Rational& rhs) {
  return lhs == rhs ? std::string() : "scalar mismatch: " + to_string(lhs) + " != " + to_string(rhs);
}

std::string residual_of(bool holds, const std::string& what) { return holds ? std::string() : what; }

bool all_passed(const Reports& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["paper_anchor"] = r.paper_anchor;
  j["seed"] = r.seed;
  j["point_digest"] = r.point_digest;
  j["status"] = r.passed() ? "pass" : "fail";
  j["residual_summary"] = r.residual_summary;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

nlohmann::ordered_json to_json(const SkewLaurentOp& op) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [key, c] : op.terms()) {
    nlohmann::ordered_json rec;
    rec["j"] = key.first;
    rec["k"] = key.second;
    rec["coeff"] = to_string(c);
    out.push_back(std::move(rec));
  }
  return out;
}

nlohmann::ordered_json to_json(const LaurentPoly& f) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [power, c] : f.terms()) {
    nlohmann::ordered_json rec;
    rec["power"] = power;
    rec["coeff"] = to_string(c);
    out.push_back(std::move(rec));
  }
  return out;
}

nlohmann::ordered_json report_document(const nlohmann::ordered_json& invocation, const Reports& reports) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = kToolVersion;
  doc["invocation"] = invocation;
  auto list = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    if (r.passed()) ++passed;
  }
  doc["reports"] = std::move(list);
  doc["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", reports.size() - passed}};
  return doc;
}

}  // namespace qaw
