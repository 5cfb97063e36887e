// Acceptance run: one line per criterion, exact equality throughout, each
// criterion under its wall-clock limit. Exit status 0 iff every line is PASS.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "opalg/catalog/catalog.hpp"
#include "opalg/catalog/oracle.hpp"
#include "opalg/core/errors.hpp"
#include "opalg/core/random.hpp"
#include "opalg/jordan/triple.hpp"
#include "opalg/lie/myb.hpp"
#include "opalg/rrho/bunch.hpp"
#include "opalg/workbench/findings.hpp"
#include "opalg/workbench/report.hpp"
#include "opalg/workbench/search.hpp"

using namespace opalg;
namespace oracle = catalog::oracle;
namespace wb = opalg::workbench;
using catalog::CatalogEntry;
using catalog::Matrix;

namespace {

/// Collects the first failed requirement and free-form notes for one criterion.
class Tally
{
public:
  void require(bool ok, const std::string& what)
  {
    ++m_checked;
    if (!ok && m_failure.empty())
      m_failure = what;
  }
  void require(const CheckReport& r, const std::string& what)
  {
    std::ostringstream os;
    os << what;
    if (r.witness)
      os << " [" << r.identity << " witness " << describe_tuple(r.witness->tuple) << "]";
    require(r.passed, os.str());
  }
  void note(const std::string& text) { m_notes.push_back(text); }

  bool passed() const { return m_failure.empty(); }
  const std::string& failure() const { return m_failure; }
  std::size_t checked() const { return m_checked; }
  const std::vector<std::string>& notes() const { return m_notes; }

private:
  static std::string describe_tuple(const std::vector<std::size_t>& t)
  {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
      s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
  }

  std::string m_failure;
  std::size_t m_checked = 0;
  std::vector<std::string> m_notes;
};

struct Instance
{
  std::string label;
  CatalogEntry entry;
};

std::string q_label(std::size_t n, const std::string& how)
{
  return "example2-gl" + std::to_string(n) + "?q=" + how;
}

/// gl(n) for n = 2, 3: Q = diag(1..n) and 20 seeded random rational Q each.
const std::vector<Instance>& multiplication_instances()
{
  static const std::vector<Instance> instances = [] {
    std::vector<Instance> out;
    for (std::size_t n : {2u, 3u}) {
      std::vector<Scalar> d;
      for (std::size_t i = 1; i <= n; ++i)
        d.emplace_back(static_cast<long>(i));
      out.push_back({q_label(n, "diag"), catalog::example2(n, Matrix::diagonal(d))});
      RationalSampler s(100 + n);
      for (int k = 0; k < 20; ++k)
        out.push_back({q_label(n, "random#" + std::to_string(k)), catalog::example2(n, catalog::random_matrix(n, s))});
    }
    return out;
  }();
  return instances;
}

std::vector<const Instance*> gl2_instances()
{
  std::vector<const Instance*> out;
  for (const auto& i : multiplication_instances())
    if (i.entry.dim == 4)
      out.push_back(&i);
  return out;
}

void criterion1(Tally& t)
{
  for (const auto& [label, e] : multiplication_instances()) {
    const lie::LieBiOperator g(*e.bracket, e.op("R1"), e.op("R2"));
    t.require(lie::check_bi_myb(g), label + ": bi-mYB");
    t.require(lie::check_even_tempered(g), label + ": even-tempered");
    const BilinearStructure expected = oracle::xqy_minus_yqx(*e.realization, *e.q);
    t.require(lie::bracket_r(*e.bracket, e.op("R1")) == expected, label + ": [.,.]_R1 vs XQY-YQX");
    t.require(lie::bracket_r(*e.bracket, e.op("R2")) == expected, label + ": [.,.]_R2 vs XQY-YQX");
  }
}

void criterion2(Tally& t)
{
  RationalSampler s(202);
  std::vector<Polynomial> polys;
  for (std::size_t degree : {0u, 1u, 2u, 3u, 3u})
    polys.push_back(s.polynomial(degree));

  for (const auto& [label, e] : multiplication_instances()) {
    for (const char* side : {"R1", "R2"}) {
      const Operator& R = e.op(side);
      t.require(check_jacobi(lie::bracket_r(*e.bracket, R)), label + ": jacobi of [.,.]_" + side);
      const lie::LieWithOperator g(*e.bracket, R);
      for (const auto& f : polys)
        t.require(lie::check_polynomial_closure(g, f), label + ": polynomial closure for " + side);
      // Linear bunch [.,.] + t[.,.]_R with maps 1 + tR.
      const rrho::RRhoAlgebra linear(*e.bracket, R, Operator(e.dim));
      t.require(rrho::check_gamma_bunch(rrho::build_bunch(linear)), label + ": linear bunch for " + side);
    }
    for (const auto& f : polys) {
      const lie::LieBiOperator g(*e.bracket, op_polynomial(f, e.op("R1")), op_polynomial(f, e.op("R2")));
      t.require(lie::check_bi_myb(g), label + ": bi-mYB of (f(R1), f(R2))");
    }
  }
}

void criterion3(Tally& t)
{
  const auto x = oracle::WordPoly::letter('x'), y = oracle::WordPoly::letter('y'),
             z = oracle::WordPoly::letter('z'), q = oracle::WordPoly::letter('q');
  const oracle::WordPoly plus = x * q * y * q * z + z * q * y * q * x;

  for (const Instance* inst : gl2_instances()) {
    const auto& label = inst->label;
    const CatalogEntry& e = inst->entry;
    const TrilinearStructure& base = e.triple();
    const Operator &R1 = e.op("R1"), &R2 = e.op("R2");
    t.require(jordan::check_triple_myb(base, R1), label + ": triple mYB for X -> XQ");
    t.require(jordan::check_triple_myb(base, R2), label + ": triple mYB for X -> QX");

    const jordan::TripleWithOperator s1(base, R1, JtsVariant::jacobson), s2(base, R2, JtsVariant::jacobson);
    const TrilinearStructure d1 = jordan::triple_r(s1), d2 = jordan::triple_r(s2);
    t.require(d1 == d2, label + ": derived triples of R1 and R2 differ");
    t.require(jordan::triple_r(s1, jordan::TripleMode::full) == d1, label + ": full vs reduced for R1");
    t.require(jordan::triple_r(s2, jordan::TripleMode::full) == d2, label + ": full vs reduced for R2");
    t.require(d1 == oracle::trilinear_from_words(*e.realization, plus, *e.q),
              label + ": derived triple vs monomial oracle XQYQZ + ZQYQX");
    t.require(jordan::check_triple_intertwining(s1), label + ": intertwining for R1");
    t.require(jordan::check_triple_intertwining(s2), label + ": intertwining for R2");

    const CheckReport bi = jordan::check_triple_bi_myb(base, R1, R2);
    t.require(bi, label + ": triple bi-mYB core");
    t.require(bi.at("normal").passed, label + ": normal flag");
    t.require(bi.at("even-tempered").passed, label + ": even-tempered flag");
    t.require(jordan::check_rho_identity(base, e.op("rho"), d1), label + ": rho identity with rho X = QXQ");
  }

  const auto doc = wb::findings_document();
  const auto& sign = doc.at("example3-sign");
  t.require(sign.contains("sign") && sign.contains("printed_form"), "findings lack the sign verdict");
  t.note("sign " + sign.at("sign").get<std::string>() + " (printed " + sign.at("printed_form").get<std::string>() +
         ")");
}

void criterion4(Tally& t)
{
  const auto gl2 = catalog::gl_assoc(2);
  const CheckReport base_design = jordan::check_design({*gl2.bracket, gl2.triple(), JtsVariant::jacobson});
  t.require(base_design, "gl(2) base design");

  std::size_t middle_pass = 0, middle_total = 0;
  for (const Instance* inst : gl2_instances()) {
    const auto& label = inst->label;
    const CatalogEntry& e = inst->entry;
    for (const char* side : {"R1", "R2"}) {
      const jordan::TripleWithOperator s(e.triple(), e.op(side), JtsVariant::jacobson);
      const TrilinearStructure d = jordan::triple_r(s);
      const BilinearStructure b = lie::bracket_r(*e.bracket, e.op(side));
      t.require(check_jts_identity(d, JtsVariant::jacobson), label + ": jacobson JTS of the derived triple");
      t.require(jordan::check_equivariance(b, d), label + ": equivariance of the derived pair");
      if (base_design.passed)
        t.require(jordan::check_design({b, d, JtsVariant::jacobson}), label + ": design of the derived pair");
      middle_pass += check_jts_identity(d, JtsVariant::middle).passed;
      ++middle_total;
    }
  }
  t.note("middle-variant JTS on derived triples " + std::to_string(middle_pass) + "/" + std::to_string(middle_total));
}

void criterion5(Tally& t)
{
  for (std::size_t n : {3u, 4u}) {
    RationalSampler s(500 + n);
    for (int k = 0; k < 10; ++k) {
      const CatalogEntry e = catalog::example4(n, catalog::random_symmetric(n, s));
      const std::string label = "example4-so" + std::to_string(n) + "#" + std::to_string(k);
      const rrho::RRhoAlgebra a(*e.bracket, e.op("R"), e.op("rho"));
      const CheckReport r = rrho::check_rrho(a);
      t.require(r.at("rrho[rho-homomorphism]"), label + ": rho homomorphism identity");
      t.require(r.at("rrho[mixed]"), label + ": mixed identity");
      t.require(check_jacobi(rrho::bracket_rho(a)), label + ": jacobi of [.,.]_rho");
      const rrho::QuadraticBunch q = rrho::build_bunch(a);
      t.require(rrho::check_gamma_bunch(q), label + ": gamma bunch");
      t.require(rrho::extract_rrho(q) == a, label + ": extract round trip");
    }
  }
}

void criterion6(Tally& t)
{
  for (const auto& [label, e] : multiplication_instances()) {
    const rrho::RRhoAlgebra a = rrho::from_bi_myb(lie::LieBiOperator(*e.bracket, e.op("R1"), e.op("R2")));
    const CheckReport r = rrho::check_rrho(a);
    t.require(r, label + ": Rrho identities");
    t.require(r.at("regular").passed, label + ": regular flag");
  }
}

void criterion7(Tally& t)
{
  for (const auto& [label, e] : multiplication_instances()) {
    const auto p = lie::convert_params(e.op("R1"), e.op("R2"));
    t.require(p.xi == e.op("R2") - e.op("R1"), label + ": xi = R2 - R1");
    const lie::LieWithOperator g(*e.bracket, p.R);
    t.require(lie::check_xi_characterization(g, p.xi), label + ": xi characterization");
    t.require(lie::check_even_tempered_xi(g, p.xi), label + ": even-tempered in (R, xi)");
    const auto back = lie::convert_params(p);
    t.require(back.R1 == e.op("R1") && back.R2 == e.op("R2"), label + ": parameter round trip");
  }

  // Pairs: unrelated random operators, commuting polynomials in the
  // multiplication operators, and the example pairs themselves.
  RationalSampler s(707);
  std::size_t agree_pass = 0, agree_fail = 0;
  for (int k = 0; k < 50; ++k) {
    const CatalogEntry e = catalog::example2(2, catalog::random_matrix(2, s));
    Operator R1, R2;
    switch (k % 3) {
    case 0:
      R1 = s.op(4);
      R2 = s.op(4);
      break;
    case 1:
      R1 = op_polynomial(s.polynomial(1 + k % 2), e.op(k % 2 ? "left" : "right"));
      R2 = op_polynomial(s.polynomial(1), e.op("left"));
      break;
    default:
      R1 = e.op("R1");
      R2 = e.op("R2");
      break;
    }
    const auto p = lie::convert_params(R1, R2);
    const bool a = lie::check_even_tempered(lie::LieBiOperator(*e.bracket, R1, R2)).passed;
    const bool b = lie::check_even_tempered_xi(lie::LieWithOperator(*e.bracket, p.R), p.xi).passed;
    t.require(a == b, "pair " + std::to_string(k) + ": even-tempered flags disagree");
    const auto back = lie::convert_params(p);
    t.require(back.R1 == R1 && back.R2 == R2, "pair " + std::to_string(k) + ": parameter round trip");
    (a ? agree_pass : agree_fail)++;
  }
  t.note("50 pairs: " + std::to_string(agree_pass) + " pass, " + std::to_string(agree_fail) + " fail in both forms");
}

void criterion8(Tally& t)
{
  const auto so3 = catalog::so_n(3);
  const CheckReport fixed = lie::check_myb(*so3.bracket, Operator::diagonal(std::vector<Scalar>{1, 0, 0}));
  t.require(!fixed.passed && fixed.witness && fixed.witness->tuple == std::vector<std::size_t>{1, 2},
            "diag(1,0,0) on so(3) must fail mYB at (1,2)");

  wb::SearchOptions o;
  o.seed = 1;
  o.trials = 50;
  for (const char* target : {"myb-failure", "full-reduced-disagree"}) {
    const wb::RunReport r = wb::search(target, o);
    const auto found = r.findings.at("witnesses_found").get<std::size_t>();
    t.require(found > 0 && r.findings.contains("first_witness"), std::string(target) + ": no witness recorded");
    t.note(std::string(target) + " " + std::to_string(found) + "/" + std::to_string(o.trials));
  }

  std::size_t r0_myb = 0;
  for (const auto& [label, e] : multiplication_instances()) {
    const CheckReport r = lie::probe_r0(lie::LieBiOperator(*e.bracket, e.op("R1"), e.op("R2")));
    t.require(r.at("bracket-coincidence"), label + ": R0 bracket coincidence");
    r0_myb += r.at("R0-mYB").passed;
  }
  t.note("R0 mYB on " + std::to_string(r0_myb) + "/" + std::to_string(multiplication_instances().size()) +
         " gl(n) multiplication instances");
}

void criterion9(Tally& t)
{
  const std::string first = wb::render(wb::findings_report(), wb::ReportFormat::json);
  const std::string second = wb::render(wb::findings_report(), wb::ReportFormat::json);
  t.require(first == second, "findings differ between runs");

  const auto doc = nlohmann::json::parse(first).at("findings");
  for (const char* key : {"example1-operator-readings", "example1-triple", "example3-sign", "jts-variant"})
    t.require(doc.contains(key), std::string("findings lack ") + key);

  const char* path = "acceptance_findings.json";
  {
    std::ofstream out(path, std::ios::binary);
    out << first;
  }
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  t.require(buf.str() == first, "findings file does not read back identically");
  t.note(std::string("written to ") + path + ", sha256 " + wb::sha256_hex(first).substr(0, 16));
}

struct Criterion
{
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Tally&)> run;
};

} // namespace

int main()
{
  const std::vector<Criterion> criteria = {
      {1, "multiplication pairs on gl(n) against XQY-YQX", 10, criterion1},
      {2, "derived bracket Jacobi, polynomial closure, linear bunch", 30, criterion2},
      {3, "triple mYB and derived triple XQYQZ+ZQYQX on gl(2)", 60, criterion3},
      {4, "derived JTS, equivariance, design on gl(2)", 60, criterion4},
      {5, "Rrho identities and bunch round trip on so(n)", 20, criterion5},
      {6, "Rrho from even-tempered bi-mYB, regular", 10, criterion6},
      {7, "xi characterization, conversion, flag agreement", 20, criterion7},
      {8, "negative witnesses and R0 probe", 30, criterion8},
      {9, "findings document deterministic", 60, criterion9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool ok = t.passed() && in_time;
    failures += !ok;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", seconds, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.title << "  [" << t.checked()
              << " checks, " << timing << "]";
    for (const auto& n : t.notes())
      std::cout << "  " << n << ";";
    if (!t.passed())
      std::cout << "  first failure: " << t.failure();
    else if (!in_time)
      std::cout << "  over the time limit";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
