#include "opalg/workbench/suites.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "opalg/core/errors.hpp"
#include "opalg/jordan/triple.hpp"
#include "opalg/lie/myb.hpp"
#include "opalg/rrho/bunch.hpp"

namespace opalg::workbench {

SuiteInput input_from_text(std::string_view text, std::string label)
{
  return {parse_algebra_file(text), std::move(label), sha256_hex(text)};
}

SuiteInput input_from_catalog(std::string_view name)
{
  AlgebraFile f = from_catalog(catalog::lookup(name));
  std::string digest = sha256_hex(render_algebra_file(f));
  return {std::move(f), "catalog:" + std::string(name), std::move(digest)};
}

SuiteInput load_input(std::string_view spec)
{
  constexpr std::string_view prefix = "catalog:";
  if (spec.starts_with(prefix))
    return input_from_catalog(spec.substr(prefix.size()));
  const std::filesystem::path path{std::string(spec)};
  if (!std::filesystem::exists(path)) {
    if (spec.find('/') != std::string_view::npos || path.has_extension())
      throw Error("no such file '" + path.string() + "'");
    return input_from_catalog(spec);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return input_from_text(buf.str(), path.string());
}

namespace {

const std::map<std::string, std::string>& default_roles()
{
  static const std::map<std::string, std::string> roles{
      {"R", "R"}, {"R1", "R1"}, {"R2", "R2"}, {"rho", "rho"}, {"xi", "xi"}};
  return roles;
}

std::string role_name(const SuiteOptions& opts, const std::string& role)
{
  if (const auto it = opts.roles.find(role); it != opts.roles.end())
    return it->second;
  return default_roles().at(role);
}

const Operator& role_op(const AlgebraFile& f, const SuiteOptions& opts, const std::string& role)
{
  const std::string name = role_name(opts, role);
  if (!f.operators.contains(name))
    throw Error("operator for role " + role + " ('" + name + "') not found in input");
  return f.operators.at(name);
}

const BilinearStructure& need_bracket(const AlgebraFile& f, std::string_view suite)
{
  if (!f.bracket)
    throw Error("suite " + std::string(suite) + " requires a bracket");
  return *f.bracket;
}

const TrilinearStructure& need_triple(const AlgebraFile& f, std::string_view suite)
{
  if (!f.triple)
    throw Error("suite " + std::string(suite) + " requires a triple");
  return *f.triple;
}

CheckReport renamed(CheckReport r, std::string name)
{
  r.identity = std::move(name);
  return r;
}

/// Pass flag is the equality of two other pass flags.
CheckReport agreement(std::string name, const CheckReport& a, const CheckReport& b)
{
  CheckReport r;
  r.identity = std::move(name);
  r.passed = a.passed == b.passed;
  if (!r.passed)
    r.witness = Witness{};
  r.markers.push_back(a.identity + "=" + (a.passed ? "pass" : "fail"));
  r.markers.push_back(b.identity + "=" + (b.passed ? "pass" : "fail"));
  return r;
}

std::string poly_str(const Polynomial& f)
{
  std::string out;
  for (std::size_t k = 0; k < f.size(); ++k)
    out += (k ? "," : "") + f[k].str();
  return out;
}

using Checks = std::vector<CheckReport>;

/// Antisymmetry and Jacobi of the base bracket; false if either fails.
bool lie_gate(const BilinearStructure& b, const SuiteOptions& opts, Checks& out)
{
  out.push_back(check_antisymmetry(b, opts.check));
  out.push_back(check_jacobi(b, opts.check));
  return out[out.size() - 2].passed && out.back().passed;
}

void skip_all(Checks& out, std::initializer_list<const char*> names, std::string_view reason)
{
  for (const char* n : names)
    out.push_back(skipped(n, reason));
}

constexpr std::string_view kNotLie = "base bracket is not Lie";

void suite_lie_base(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  lie_gate(need_bracket(f, "lie-base"), opts, out);
}

void suite_myb(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const BilinearStructure& b = need_bracket(f, "myb");
  const Operator& R = role_op(f, opts, "R");
  if (!lie_gate(b, opts, out))
    return skip_all(out, {"myb", "jacobi[bracket_R]"}, kNotLie);
  CheckReport myb = lie::check_myb(b, R, opts.check);
  CheckReport derived = renamed(check_jacobi(lie::bracket_r(b, R), opts.check), "jacobi[bracket_R]");
  if (!myb.passed)
    derived = informational(std::move(derived));
  out.push_back(std::move(myb));
  out.push_back(std::move(derived));
}

void suite_polynomial_closure(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const BilinearStructure& b = need_bracket(f, "polynomial-closure");
  const Operator& R = role_op(f, opts, "R");
  std::vector<Polynomial> polys = opts.polynomials;
  if (polys.empty())
    polys = {{Scalar(0), Scalar(0), Scalar(1)},
             {Scalar(1), Scalar(1), Scalar(1)},
             {Scalar(0), Scalar(-1), Scalar(0), Scalar(2)}};
  if (!lie_gate(b, opts, out)) {
    out.push_back(skipped("myb", kNotLie));
    return;
  }
  const lie::LieWithOperator g(b, R, opts.check);
  out.push_back(lie::check_myb(g, opts.check));
  const bool base_ok = out.back().passed;
  for (const auto& p : polys) {
    const std::string name = "polynomial-closure[" + poly_str(p) + "]";
    if (!base_ok)
      out.push_back(skipped(name, "R is not mYB"));
    else
      out.push_back(renamed(lie::check_polynomial_closure(g, p, opts.check), name));
  }
}

void suite_bi_myb(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const BilinearStructure& b = need_bracket(f, "bi-myb");
  const Operator& R1 = role_op(f, opts, "R1");
  const Operator& R2 = role_op(f, opts, "R2");
  if (!lie_gate(b, opts, out))
    return skip_all(out, {"bi-myb", "xi-characterization", "r0-probe"}, kNotLie);
  const lie::LieBiOperator g(b, R1, R2, opts.check);
  const lie::XiParams xp = lie::convert_params(R1, R2);
  const lie::LieWithOperator base(b, xp.R, opts.check);

  CheckReport bi = lie::check_bi_myb(g, opts.check);
  const bool ok = bi.passed;
  const bool commuting = bi.at("commuting").passed;
  out.push_back(std::move(bi));
  out.push_back(lie::check_xi_characterization(base, xp.xi, opts.check));
  out.push_back(ok ? lie::probe_r0(g, opts.check) : skipped("r0-probe", "not bi-mYB"));

  CheckReport et = lie::check_even_tempered(g, opts.check);
  CheckReport etx = lie::check_even_tempered_xi(base, xp.xi, opts.check);
  CheckReport agree = agreement("even-tempered-agreement", et, etx);
  if (!commuting)
    agree = informational(std::move(agree));
  out.push_back(informational(std::move(et)));
  out.push_back(informational(std::move(etx)));
  out.push_back(std::move(agree));
}

void suite_even_tempered(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const BilinearStructure& b = need_bracket(f, "even-tempered");
  const Operator& R1 = role_op(f, opts, "R1");
  const Operator& R2 = role_op(f, opts, "R2");
  if (!lie_gate(b, opts, out))
    return skip_all(out, {"even-tempered", "even-tempered-xi"}, kNotLie);
  const lie::LieBiOperator g(b, R1, R2, opts.check);
  const lie::XiParams xp = lie::convert_params(R1, R2);
  out.push_back(lie::check_even_tempered(g, opts.check));
  out.push_back(lie::check_even_tempered_xi(lie::LieWithOperator(b, xp.R, opts.check), xp.xi, opts.check));
}

JtsVariant other(JtsVariant v)
{
  return v == JtsVariant::middle ? JtsVariant::jacobson : JtsVariant::middle;
}

void suite_jts(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const TrilinearStructure& t = need_triple(f, "jts");
  out.push_back(check_jts_identity(t, opts.variant, opts.check));
  out.push_back(informational(check_jts_identity(t, other(opts.variant), opts.check)));
}

void suite_design(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const BilinearStructure& b = need_bracket(f, "design");
  const TrilinearStructure& t = need_triple(f, "design");
  if (!lie_gate(b, opts, out))
    return skip_all(out, {"design"}, kNotLie);
  out.push_back(jordan::check_design({b, t, opts.variant}, opts.check));
}

/// Base identity of the triple; asserted unless running unchecked.
std::optional<jordan::TripleWithOperator> triple_gate(const TrilinearStructure& t, const Operator& R,
                                                      const SuiteOptions& opts, Checks& out)
{
  CheckReport base = check_jts_identity(t, opts.variant, opts.check);
  const bool ok = base.passed;
  if (opts.unchecked) {
    out.push_back(informational(std::move(base)));
    return jordan::TripleWithOperator::unchecked(t, R, opts.variant);
  }
  out.push_back(std::move(base));
  if (!ok)
    return std::nullopt;
  return jordan::TripleWithOperator(t, R, opts.variant, opts.check);
}

void mark(CheckReport& r, const jordan::TripleWithOperator& s)
{
  if (!s.base_verified())
    r.markers.push_back(jordan::kBaseUnverified);
}

void suite_triple_myb(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const TrilinearStructure& t = need_triple(f, "triple-myb");
  const Operator& R = role_op(f, opts, "R");
  const auto s = triple_gate(t, R, opts, out);
  if (!s)
    return skip_all(out, {"triple-myb", "triple-r-modes", "triple-intertwining"}, "base triple fails the JTS identity");

  Checks local;
  local.push_back(jordan::check_triple_myb(*s, opts.check));
  const bool ok = local.back().passed;
  const TrilinearStructure full = jordan::triple_r_full(t, R);
  CheckReport modes = check_structures_equal("triple-r-modes", full, jordan::triple_r_reduced_unchecked(t, R));
  local.push_back(ok ? std::move(modes) : informational(std::move(modes)));
  if (ok) {
    local.push_back(jordan::check_triple_intertwining(*s, opts.check));
    const TrilinearStructure derived = jordan::triple_r(*s, jordan::TripleMode::reduced, opts.check);
    CheckReport jac = check_jts_identity(derived, JtsVariant::jacobson, opts.check);
    jac.identity += "[derived]";
    CheckReport mid = check_jts_identity(derived, JtsVariant::middle, opts.check);
    mid.identity += "[derived]";
    // Only the classical identity is known to pass to the derived triple.
    const bool assert_jacobson = opts.variant == JtsVariant::jacobson && s->base_verified();
    local.push_back(assert_jacobson ? std::move(jac) : informational(std::move(jac)));
    local.push_back(informational(std::move(mid)));
  } else {
    local.push_back(skipped("triple-intertwining", "R is not triple mYB"));
  }
  for (auto& r : local) {
    mark(r, *s);
    out.push_back(std::move(r));
  }
}

void suite_triple_bi_myb(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const TrilinearStructure& t = need_triple(f, "triple-bi-myb");
  const Operator& R1 = role_op(f, opts, "R1");
  const Operator& R2 = role_op(f, opts, "R2");
  const auto s = triple_gate(t, R1, opts, out);
  if (!s)
    return skip_all(out, {"triple-bi-myb"}, "base triple fails the JTS identity");
  CheckReport r = jordan::check_triple_bi_myb(t, R1, R2, opts.check);
  mark(r, *s);
  out.push_back(std::move(r));
}

void suite_rho_identity(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const TrilinearStructure& t = need_triple(f, "rho-identity");
  const Operator& rho = role_op(f, opts, "rho");
  std::optional<TrilinearStructure> derived;
  if (f.operators.contains(role_name(opts, "R1"))) {
    const Operator& R1 = role_op(f, opts, "R1");
    if (jordan::check_triple_myb(t, R1, opts.check).passed)
      derived = jordan::triple_r_reduced_unchecked(t, R1);
  }
  out.push_back(jordan::check_rho_identity(t, rho, derived, opts.check));
}

void suite_rrho(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const BilinearStructure& b = need_bracket(f, "rrho");
  const Operator& R = role_op(f, opts, "R");
  const Operator& rho = role_op(f, opts, "rho");
  if (!lie_gate(b, opts, out))
    return skip_all(out, {"rrho", "jacobi[bracket_rho]"}, kNotLie);
  const rrho::RRhoAlgebra a(b, R, rho, opts.check);
  CheckReport r = rrho::check_rrho(a, opts.check);
  CheckReport jac = renamed(check_jacobi(rrho::bracket_rho(a), opts.check), "jacobi[bracket_rho]");
  if (!r.passed)
    jac = informational(std::move(jac));
  out.push_back(std::move(r));
  out.push_back(std::move(jac));
}

CheckReport round_trip(const rrho::QuadraticBunch& q, const rrho::RRhoAlgebra& a, const SuiteOptions& opts)
{
  CheckReport r;
  r.identity = "extract-round-trip";
  try {
    const rrho::RRhoAlgebra back = rrho::extract_rrho(q, opts.check);
    if (!(back == a)) {
      r.passed = false;
      r.witness = Witness{};
    }
  } catch (const rrho::CoefficientMismatch& e) {
    r.passed = false;
    r.witness = e.witness;
    r.markers.push_back(e.what());
  }
  return r;
}

void suite_bunch(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  const BilinearStructure& b = need_bracket(f, "bunch");
  const Operator& R = role_op(f, opts, "R");
  const Operator& rho = role_op(f, opts, "rho");
  if (!lie_gate(b, opts, out))
    return skip_all(out, {"gamma-bunch", "extract-round-trip"}, kNotLie);
  const rrho::RRhoAlgebra a(b, R, rho, opts.check);
  const rrho::QuadraticBunch q = rrho::build_bunch(a, opts.check);
  out.push_back(rrho::check_gamma_bunch(q, opts.check));
  out.push_back(out.back().passed ? round_trip(q, a, opts) : skipped("extract-round-trip", "gamma-bunch failed"));
}

void suite_rrho_bunch(const AlgebraFile& f, const SuiteOptions& opts, Checks& out)
{
  suite_rrho(f, opts, out);
  Checks rest;
  suite_bunch(f, opts, rest);
  // The base bracket checks were already recorded.
  for (std::size_t i = 2; i < rest.size(); ++i)
    out.push_back(std::move(rest[i]));
}

using SuiteFn = std::function<void(const AlgebraFile&, const SuiteOptions&, Checks&)>;

const std::map<std::string, SuiteFn, std::less<>>& suites()
{
  static const std::map<std::string, SuiteFn, std::less<>> table{
      {"lie-base", suite_lie_base},
      {"myb", suite_myb},
      {"polynomial-closure", suite_polynomial_closure},
      {"bi-myb", suite_bi_myb},
      {"even-tempered", suite_even_tempered},
      {"jts", suite_jts},
      {"design", suite_design},
      {"triple-myb", suite_triple_myb},
      {"triple-bi-myb", suite_triple_bi_myb},
      {"rho-identity", suite_rho_identity},
      {"rrho", suite_rrho},
      {"bunch", suite_bunch},
      {"rrho+bunch", suite_rrho_bunch},
  };
  return table;
}

} // namespace

RunReport run_suite(const SuiteInput& input, std::string_view suite, const SuiteOptions& opts)
{
  const auto it = suites().find(suite);
  if (it == suites().end())
    throw Error("unknown suite '" + std::string(suite) + "'");
  RunReport report;
  report.command = "check " + std::string(suite);
  report.input = input.label;
  report.input_digest = input.digest;
  it->second(input.algebra, opts, report.checks);
  report.findings["variant"] = std::string(to_string(opts.variant));
  nlohmann::json roles = nlohmann::json::object();
  for (const auto& [role, name] : default_roles())
    if (input.algebra.operators.contains(role_name(opts, role)))
      roles[role] = role_name(opts, role);
  report.findings["roles"] = roles;
  // Informational outcomes are collected so they can be cited without
  // walking the check tree.
  nlohmann::json info = nlohmann::json::object();
  std::function<void(const CheckReport&)> collect = [&](const CheckReport& r) {
    if (r.informational)
      info[r.identity] = r.passed ? "pass" : "fail";
    for (const auto& s : r.subchecks)
      collect(s);
  };
  for (const auto& c : report.checks)
    collect(c);
  report.findings["informational"] = info;
  return report;
}

std::vector<std::string> suite_names()
{
  std::vector<std::string> out;
  for (const auto& [name, fn] : suites())
    out.push_back(name);
  return out;
}

std::vector<std::string> derive_names()
{
  return {"bracket-r", "bracket-rho", "triple-r", "triple-r-full"};
}

AlgebraFile derive(const AlgebraFile& f, std::string_view which, const std::map<std::string, std::string>& ops,
                   const SuiteOptions& opts)
{
  SuiteOptions o = opts;
  for (const auto& [role, name] : ops)
    o.roles[role] = name;
  AlgebraFile out = f;
  if (which == "bracket-r") {
    out.bracket = lie::bracket_r(need_bracket(f, "bracket-r"), role_op(f, o, "R"));
  } else if (which == "bracket-rho") {
    out.bracket = rrho::bracket_rho(need_bracket(f, "bracket-rho"), role_op(f, o, "R"), role_op(f, o, "rho"));
  } else if (which == "triple-r") {
    const auto s = jordan::TripleWithOperator::unchecked(need_triple(f, "triple-r"), role_op(f, o, "R"), o.variant);
    out.triple = jordan::triple_r(s, jordan::TripleMode::reduced, o.check);
  } else if (which == "triple-r-full") {
    out.triple = jordan::triple_r_full(need_triple(f, "triple-r-full"), role_op(f, o, "R"));
  } else {
    throw Error("unknown derived structure '" + std::string(which) + "'");
  }
  return out;
}

} // namespace opalg::workbench
