// opalg: batch front end for the operator-algebra workbench.
//
//   opalg check INPUT --suite NAME [--format text|json] [--force] ...
//   opalg derive INPUT --structure NAME --op R=NAME -o OUT
//   opalg catalog list | export NAME
//   opalg search TARGET --seed N --trials N --dim N --entry-bound N
//   opalg convert INPUT --to xi|bi -o OUT
//   opalg findings
//
// Exit status: 0 all asserted checks passed, 1 some asserted check failed,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "opalg/catalog/catalog.hpp"
#include "opalg/core/errors.hpp"
#include "opalg/lie/myb.hpp"
#include "opalg/workbench/algebra_file.hpp"
#include "opalg/workbench/findings.hpp"
#include "opalg/workbench/report.hpp"
#include "opalg/workbench/search.hpp"
#include "opalg/workbench/suites.hpp"

namespace wb = opalg::workbench;

namespace {

constexpr int kUsage = 2;

struct Output
{
  std::string path;
  std::string format = "text";
};

void add_output(CLI::App* cmd, Output& out, bool with_format = true)
{
  cmd->add_option("-o,--output", out.path, "Write to this file instead of standard output");
  if (with_format)
    cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"text", "json"}));
}

void emit(const std::string& text, const std::string& path)
{
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw opalg::Error("cannot write '" + path + "'");
  f << text;
}

int emit_report(const wb::RunReport& r, const Output& out)
{
  emit(wb::render(r, wb::parse_report_format(out.format)), out.path);
  return wb::exit_status(r);
}

/// "R1=right" pairs into a role map.
std::map<std::string, std::string> parse_roles(const std::vector<std::string>& items)
{
  std::map<std::string, std::string> roles;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw opalg::ParseError("expected ROLE=OPERATOR, got '" + item + "'");
    roles[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return roles;
}

opalg::Polynomial parse_poly(const std::string& text)
{
  opalg::Polynomial p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    p.push_back(opalg::Scalar::parse(text.substr(start, end - start)));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return p;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact verification workbench for Lie algebras and Jordan triple systems with operators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(wb::kToolVersion));

  // check
  std::string input, suite, variant = "jacobson";
  std::vector<std::string> ops, polys;
  bool force = false, unchecked = false;
  unsigned threads = 0;
  Output out;
  auto* check = app.add_subcommand("check", "Run a named check suite");
  check->add_option("input", input, "Algebra file or catalog:NAME")->required();
  check->add_option("-s,--suite", suite, "Suite name")->required();
  check->add_option("--variant", variant, "JTS identity variant")->check(CLI::IsMember({"middle", "jacobson"}));
  check->add_option("--op", ops, "Operator for a role, e.g. R1=right (repeatable)");
  check->add_option("--poly", polys, "Polynomial coefficients c0,c1,... for polynomial-closure (repeatable)");
  check->add_flag("--force", force, "Run sweeps above the dimension guard");
  check->add_flag("--unchecked", unchecked, "Accept a triple failing the JTS identity");
  check->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_output(check, out);

  // derive
  std::string structure;
  auto* derive = app.add_subcommand("derive", "Write the algebra with a derived bracket or triple");
  derive->add_option("input", input, "Algebra file or catalog:NAME")->required();
  derive->add_option("--structure", structure, "Derived structure")->required()->check(
      CLI::IsMember(wb::derive_names()));
  derive->add_option("--op", ops, "Operator for a role, e.g. R=right (repeatable)");
  add_output(derive, out, false);

  // catalog
  std::string name, triple_key;
  auto* catalog = app.add_subcommand("catalog", "List or export catalog entries");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog names");
  auto* exp = catalog->add_subcommand("export", "Export an entry as an algebra file");
  exp->add_option("name", name, "Catalog name with parameters")->required();
  exp->add_option("--triple", triple_key, "Which triple to export (default: primary)");
  add_output(exp, out, false);

  // search
  std::string target;
  wb::SearchOptions sopts;
  auto* search = app.add_subcommand("search", "Seeded search for a witness of a claim");
  search->add_option("target", target, "Search target")->required();
  search->add_option("--seed", sopts.seed, "Random seed");
  search->add_option("--trials", sopts.trials, "Number of sampled instances")->check(CLI::PositiveNumber);
  search->add_option("--dim", sopts.dim, "Matrix size n of the ambient algebra (0 = target default)");
  search->add_option("--entry-bound", sopts.entry_bound, "Bound B on sampled p/q")->check(CLI::PositiveNumber);
  search->add_flag("--force", force, "Run sweeps above the dimension guard");
  add_output(search, out);

  // convert
  std::string to;
  auto* convert = app.add_subcommand("convert", "Convert between (R1,R2) and (R,xi) parameters");
  convert->add_option("input", input, "Algebra file or catalog:NAME")->required();
  convert->add_option("--to", to, "xi: add R, xi from R1, R2; bi: add R1, R2 from R, xi")
      ->required()
      ->check(CLI::IsMember({"xi", "bi"}));
  convert->add_option("--op", ops, "Operator for a role (repeatable)");
  add_output(convert, out, false);

  // findings
  auto* findings = app.add_subcommand("findings", "Emit the findings document on ambiguous readings");
  add_output(findings, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*check) {
      wb::SuiteOptions o;
      o.check.force = force;
      o.check.threads = threads;
      o.variant = opalg::parse_jts_variant(variant);
      o.roles = parse_roles(ops);
      o.unchecked = unchecked;
      for (const auto& p : polys)
        o.polynomials.push_back(parse_poly(p));
      return emit_report(wb::run_suite(wb::load_input(input), suite, o), out);
    }
    if (*derive) {
      const auto in = wb::load_input(input);
      emit(wb::render_algebra_file(wb::derive(in.algebra, structure, parse_roles(ops))), out.path);
      return 0;
    }
    if (*catalog) {
      if (*list) {
        for (const auto& n : opalg::catalog::catalog_names())
          std::cout << n << "\n";
        return 0;
      }
      emit(wb::render_algebra_file(wb::from_catalog(opalg::catalog::lookup(name), triple_key)), out.path);
      return 0;
    }
    if (*search) {
      sopts.check.force = force;
      return emit_report(wb::search(target, sopts), out);
    }
    if (*convert) {
      auto in = wb::load_input(input);
      const auto roles = parse_roles(ops);
      const auto role = [&](const std::string& r) {
        const auto it = roles.find(r);
        return in.algebra.op(it == roles.end() ? r : it->second);
      };
      if (to == "xi") {
        const auto p = opalg::lie::convert_params(role("R1"), role("R2"));
        in.algebra.operators.insert_or_assign("R", p.R);
        in.algebra.operators.insert_or_assign("xi", p.xi);
      } else {
        const auto p = opalg::lie::convert_params(opalg::lie::XiParams{role("R"), role("xi")});
        in.algebra.operators.insert_or_assign("R1", p.R1);
        in.algebra.operators.insert_or_assign("R2", p.R2);
      }
      emit(wb::render_algebra_file(in.algebra), out.path);
      return 0;
    }
    if (*findings)
      return emit_report(wb::findings_report(), out);
  } catch (const std::exception& e) {
    std::cerr << "opalg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
