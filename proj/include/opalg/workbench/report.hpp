#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "opalg/core/check.hpp"

namespace opalg::workbench {

inline constexpr const char* kToolVersion = "opalg-workbench 0.3.0";

/**
 * Result of one command. `checks` are asserted unless marked informational;
 * `findings` holds anything recorded without being asserted (search
 * witnesses, seeds, verdicts on ambiguous readings).
 */
struct RunReport
{
  std::string tool_version = kToolVersion;
  std::string command;
  std::string input;
  std::string input_digest;
  std::vector<CheckReport> checks;
  nlohmann::json findings = nlohmann::json::object();

  /// True when no asserted check failed.
  bool passed() const;
};

enum class ReportFormat
{
  text,
  json,
};

ReportFormat parse_report_format(std::string_view text);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const RunReport& r);

/// Deterministic: sorted keys, canonical scalar strings, trailing newline.
std::string render(const RunReport& r, ReportFormat format);

/// 0 if passed, 1 otherwise.
int exit_status(const RunReport& r);

} // namespace opalg::workbench
