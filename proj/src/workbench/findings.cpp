#include "opalg/workbench/findings.hpp"

#include "opalg/catalog/catalog.hpp"
#include "opalg/catalog/oracle.hpp"
#include "opalg/core/random.hpp"
#include "opalg/jordan/triple.hpp"
#include "opalg/lie/myb.hpp"

namespace opalg::workbench {

using nlohmann::json;
namespace oracle = catalog::oracle;

namespace {

json verdict(const CheckReport& r)
{
  json out = {{"passed", r.passed}, {"tuples_evaluated", r.tuples_evaluated}};
  if (r.witness && !r.witness->tuple.empty())
    out["witness"] = {{"tuple", r.witness->tuple}, {"residual", to_json(r.witness->residual)}};
  return out;
}

struct Example1Params
{
  const char* x0;
  const char* form;
};

constexpr Example1Params kExample1Params[] = {
    {"0,0,1", "diag:1,1,1"},
    {"1,2,0", "diag:1,2,3"},
};

std::string example1_name(const Example1Params& p)
{
  return std::string("example1-so3?x0=") + p.x0 + "&form=" + p.form;
}

json example1_readings(const CheckOptions& opts)
{
  json out = json::array();
  for (const auto& p : kExample1Params) {
    const auto e = catalog::lookup(example1_name(p));
    json readings = json::object();
    const std::pair<const char*, const char*> kinds[] = {{"Ra", "X -> <X0,X> X0"}, {"Rb", "X -> [X0,X]"}};
    for (const auto& [key, meaning] : kinds) {
      const Operator& R = e.op(key);
      json r = {{"reading", meaning}, {"myb", verdict(lie::check_myb(*e.bracket, R, opts))}};
      for (const char* triple : {"two-term", "standard"})
        r[std::string("triple-myb[") + triple + "]"] = verdict(jordan::check_triple_myb(e.triple(triple), R, opts));
      readings[key] = std::move(r);
    }
    out.push_back({{"instance", example1_name(p)}, {"readings", std::move(readings)}});
  }
  return out;
}

json example1_triple(const CheckOptions& opts)
{
  const auto e = catalog::lookup(example1_name(kExample1Params[0]));
  json out = json::object();
  const std::pair<const char*, const char*> triples[] = {{"two-term", "<X,Y>Z + <Y,Z>X"},
                                                         {"standard", "<X,Y>Z + <Y,Z>X - <X,Z>Y"}};
  for (const auto& [key, formula] : triples) {
    const TrilinearStructure& t = e.triple(key);
    json v = {{"formula", formula}};
    for (JtsVariant variant : {JtsVariant::middle, JtsVariant::jacobson})
      v["jts-identity[" + std::string(to_string(variant)) + "]"] = verdict(check_jts_identity(t, variant, opts));
    v["equivariance"] = verdict(jordan::check_equivariance(*e.bracket, t, opts));
    v["design-condition"] = verdict(jordan::check_design_condition(*e.bracket, t, opts));
    out[key] = std::move(v);
  }
  out["instance"] = example1_name(kExample1Params[0]);
  return out;
}

std::string sign_of(const oracle::WordPoly& p)
{
  const auto x = oracle::WordPoly::letter('x'), y = oracle::WordPoly::letter('y'),
             z = oracle::WordPoly::letter('z'), q = oracle::WordPoly::letter('q');
  const auto first = x * q * y * q * z, second = z * q * y * q * x;
  if (p == first + second)
    return "plus";
  if (p == first - second)
    return "minus";
  return "neither";
}

json example3_sign(const CheckOptions& opts)
{
  const oracle::WordPoly right = oracle::derived_triple_words(true, true);
  const oracle::WordPoly right_full = oracle::derived_triple_words(true, false);
  const oracle::WordPoly left = oracle::derived_triple_words(false, true);
  json out = {
      {"printed_form", "XQYQZ - ZQYQX"},
      {"expansion",
       {{"right-reduced", right.str()}, {"right-full", right_full.str()}, {"left-reduced", left.str()}}},
      {"sign", sign_of(right)},
      {"sign_agrees_across_forms", sign_of(right) == sign_of(right_full) && sign_of(right) == sign_of(left)},
  };

  const auto x = oracle::WordPoly::letter('x'), y = oracle::WordPoly::letter('y'),
             z = oracle::WordPoly::letter('z'), q = oracle::WordPoly::letter('q');
  const oracle::WordPoly plus = x * q * y * q * z + z * q * y * q * x;
  const oracle::WordPoly minus = x * q * y * q * z - z * q * y * q * x;

  RationalSampler sampler(11);
  json instances = json::array();
  for (const auto& Q : {catalog::parse_q("diag:1,2", 2), catalog::random_matrix(2, sampler)}) {
    const auto e = catalog::example2(2, Q);
    const auto& real = *e.realization;
    json inst = {{"Q", json::array()}};
    for (std::size_t r = 0; r < 2; ++r)
      inst["Q"].push_back({Q(r, 0).str(), Q(r, 1).str()});
    for (const char* side : {"R1", "R2"}) {
      const jordan::TripleWithOperator s(e.triple(), e.op(side), JtsVariant::jacobson, opts);
      const TrilinearStructure derived = jordan::triple_r(s, jordan::TripleMode::reduced, opts);
      inst[std::string(side) + " vs plus"] =
          verdict(check_structures_equal("plus", derived, oracle::trilinear_from_words(real, plus, Q)));
      inst[std::string(side) + " vs printed"] =
          verdict(check_structures_equal("printed", derived, oracle::trilinear_from_words(real, minus, Q)));
    }
    instances.push_back(std::move(inst));
  }
  out["tensor_comparison"] = std::move(instances);
  return out;
}

json jts_variant(const CheckOptions& opts)
{
  json out = json::object();
  for (JtsVariant v : {JtsVariant::middle, JtsVariant::jacobson}) {
    const std::string name(to_string(v));
    json letters = json::array();
    for (char c : oracle::jts_letters(v))
      letters.push_back(std::string(1, c));
    json item = {{"tuple_order", letters},
                 {"free_residual_of_XYZ+ZYX", oracle::jts_residual(v).str()},
                 {"holds_for_XYZ+ZYX", oracle::associative_triple_satisfies(v)}};

    const auto gl2 = catalog::gl_assoc(2);
    const CheckReport r = check_jts_identity(gl2.triple(), v, opts);
    const auto matrix_witness = oracle::jts_first_failure(*gl2.realization, v);
    item["gl2"] = verdict(r);
    item["gl2_matrix_oracle_agrees"] = matrix_witness ? (r.witness && *r.witness == *matrix_witness) : r.passed;

    const auto so3 = catalog::lookup(example1_name(kExample1Params[0]));
    item["so3_standard_form_triple"] = verdict(check_jts_identity(so3.triple("standard"), v, opts));
    out[name] = std::move(item);
  }
  return out;
}

} // namespace

json findings_document(const CheckOptions& opts)
{
  return {
      {"example1-operator-readings", example1_readings(opts)},
      {"example1-triple", example1_triple(opts)},
      {"example3-sign", example3_sign(opts)},
      {"jts-variant", jts_variant(opts)},
  };
}

RunReport findings_report(const CheckOptions& opts)
{
  RunReport r;
  r.command = "findings";
  r.input = "built-in instances";
  r.findings = findings_document(opts);
  r.input_digest = sha256_hex(r.findings.dump());
  return r;
}

} // namespace opalg::workbench
