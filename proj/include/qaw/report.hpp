#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include <json.hpp>

#include "qaw/qcore.hpp"
#include "qaw/skew_laurent.hpp"

namespace qaw {

enum class Status { pass, fail };

/// One identity check at one parameter point. status is pass iff the
/// residual was exactly zero; residual_summary then stays empty.
struct VerificationReport {
  std::string check_name;
  std::string paper_anchor;
  std::int64_t seed = 0;
  std::string point_digest;
  Status status = Status::pass;
  std::string residual_summary;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == Status::pass; }
};

using Reports = std::vector<VerificationReport>;

/// Empty string for a zero residual, otherwise its head.
std::string residual_of(const SkewLaurentOp& residual);
std::string residual_of(const LaurentPoly& residual);
std::string residual_of(const Rational& lhs, const Rational& rhs);
std::string residual_of(bool holds, const std::string& what);

/// Runs fn() -> std::string (empty on success) and wraps it into a report for
/// point p. Exceptions thrown by fn become failed reports.
template <class Fn>
VerificationReport run_check(std::string name, std::string anchor, const ParamPoint& p, Fn&& fn) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.seed = p.seed;
  r.point_digest = digest(p);
  const auto start = std::chrono::steady_clock::now();
  try {
    r.residual_summary = fn();
  } catch (const std::exception& e) {
    r.residual_summary = std::string("error: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                     .count();
  r.status = r.residual_summary.empty() ? Status::pass : Status::fail;
  return r;
}

inline void append(Reports& out, Reports more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

bool all_passed(const Reports& reports);

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const SkewLaurentOp& op);
nlohmann::ordered_json to_json(const LaurentPoly& f);

/// {tool_version, invocation, reports, summary:{total, passed, failed}}.
nlohmann::ordered_json report_document(const nlohmann::ordered_json& invocation, const Reports& reports);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qaw
