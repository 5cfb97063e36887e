#include "opalg/workbench/report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "opalg/core/errors.hpp"

namespace opalg::workbench {

using nlohmann::json;

bool RunReport::passed() const
{
  for (const auto& c : checks)
    if (!c.informational && !c.passed)
      return false;
  return true;
}

ReportFormat parse_report_format(std::string_view text)
{
  if (text == "text")
    return ReportFormat::text;
  if (text == "json")
    return ReportFormat::json;
  throw ParseError("unknown report format '" + std::string(text) + "' (expected text or json)");
}

std::string sha256_hex(std::string_view bytes)
{
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i)
    os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

json to_json(const Vector& v)
{
  json out = json::array();
  for (const auto& s : v.coords())
    out.push_back(s.str());
  return out;
}

json to_json(const CheckReport& r)
{
  json out;
  out["identity"] = r.identity;
  out["passed"] = r.passed;
  out["informational"] = r.informational;
  out["tuples_evaluated"] = r.tuples_evaluated;
  if (r.witness)
    out["witness"] = {{"tuple", r.witness->tuple}, {"residual", to_json(r.witness->residual)}};
  else
    out["witness"] = nullptr;
  if (!r.markers.empty())
    out["markers"] = r.markers;
  if (!r.subchecks.empty()) {
    json subs = json::array();
    for (const auto& s : r.subchecks)
      subs.push_back(to_json(s));
    out["subchecks"] = std::move(subs);
  }
  return out;
}

json to_json(const RunReport& r)
{
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(to_json(c));
  return {
      {"tool_version", r.tool_version}, {"command", r.command},   {"input", r.input},
      {"input_digest", r.input_digest}, {"passed", r.passed()}, {"checks", std::move(checks)},
      {"findings", r.findings},
  };
}

namespace {

std::string tuple_str(const std::vector<std::size_t>& t)
{
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    os << (i ? ", " : "") << t[i];
  os << ")";
  return os.str();
}

void render_check(std::ostream& os, const CheckReport& r, int depth)
{
  os << std::string(2 * depth, ' ') << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.identity;
  if (r.informational)
    os << " (informational)";
  os << "  tuples=" << r.tuples_evaluated;
  if (r.witness && !r.witness->tuple.empty())
    os << "  witness=" << tuple_str(r.witness->tuple) << " residual=" << r.witness->residual;
  for (const auto& m : r.markers)
    os << "  {" << m << "}";
  os << "\n";
  for (const auto& s : r.subchecks)
    render_check(os, s, depth + 1);
}

} // namespace

std::string render(const RunReport& r, ReportFormat format)
{
  if (format == ReportFormat::json)
    return to_json(r).dump(2) + "\n";

  std::ostringstream os;
  os << r.tool_version << "\n";
  os << "command: " << r.command << "\n";
  if (!r.input.empty())
    os << "input:   " << r.input << "\n";
  if (!r.input_digest.empty())
    os << "sha256:  " << r.input_digest << "\n";
  os << "result:  " << (r.passed() ? "PASS" : "FAIL") << "\n";
  if (!r.checks.empty()) {
    os << "\nchecks:\n";
    for (const auto& c : r.checks)
      render_check(os, c, 1);
  }
  if (!r.findings.empty())
    os << "\nfindings:\n" << r.findings.dump(2) << "\n";
  return os.str();
}

int exit_status(const RunReport& r)
{
  return r.passed() ? 0 : 1;
}

} // namespace opalg::workbench
