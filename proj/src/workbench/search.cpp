#include "opalg/workbench/search.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "opalg/catalog/catalog.hpp"
#include "opalg/catalog/matrix.hpp"
#include "opalg/core/errors.hpp"
#include "opalg/core/random.hpp"
#include "opalg/jordan/triple.hpp"
#include "opalg/lie/myb.hpp"
#include "opalg/workbench/algebra_file.hpp"

namespace opalg::workbench {

using nlohmann::json;

namespace {

json matrix_json(const catalog::Matrix& m)
{
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.size(); ++c)
      row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json algebra_json(const AlgebraFile& f)
{
  return json::parse(render_algebra_file(f));
}

AlgebraFile with_operators(const catalog::CatalogEntry& base, std::map<std::string, Operator> ops)
{
  AlgebraFile f = from_catalog(base);
  f.operators = std::move(ops);
  return f;
}

/// One sampled instance: the report that decides it, whether it is a
/// witness, and what to embed if it is.
struct Trial
{
  CheckReport report;
  bool witness = false;
  bool applicable = true;
  json parameters;
  AlgebraFile algebra;
};

using TrialFn = std::function<Trial(RationalSampler&)>;

TrialFn r0_not_myb(std::size_t n, const CheckOptions& opts)
{
  auto base = std::make_shared<catalog::CatalogEntry>(catalog::gl_assoc(n));
  return [base, n, opts](RationalSampler& s) {
    const catalog::Matrix Q = catalog::random_matrix(n, s);
    auto ops = catalog::mult_operators(*base, Q);
    const lie::LieBiOperator g(*base->bracket, ops.at("right"), ops.at("left"), opts);
    Trial t;
    t.report = lie::probe_r0(g, opts);
    t.witness = !t.report.at("R0-mYB").passed;
    t.parameters = {{"Q", matrix_json(Q)}};
    ops.emplace("R1", ops.at("right"));
    ops.emplace("R2", ops.at("left"));
    t.algebra = with_operators(*base, std::move(ops));
    return t;
  };
}

TrialFn non_even_tempered_r1_eq_r2(std::size_t n, const CheckOptions& opts)
{
  auto base = std::make_shared<catalog::CatalogEntry>(catalog::gl_assoc(n));
  auto count = std::make_shared<std::size_t>(0);
  return [base, count, n, opts](RationalSampler& s) {
    const catalog::Matrix Q = catalog::random_matrix(n, s);
    const auto ops = catalog::mult_operators(*base, Q);
    // Alternate between the two multiplication operators.
    const char* side = (*count)++ % 2 == 0 ? "right" : "left";
    const Operator& R = ops.at(side);
    const lie::LieBiOperator g(*base->bracket, R, R, opts);
    Trial t;
    t.report = lie::check_even_tempered(g, opts);
    t.witness = !t.report.passed;
    t.parameters = {{"Q", matrix_json(Q)}, {"operator", side}};
    t.algebra = with_operators(*base, {{"R", R}, {"R1", R}, {"R2", R}});
    return t;
  };
}

TrialFn non_even_tempered_diagonal(std::size_t n, const CheckOptions& opts)
{
  auto base = std::make_shared<catalog::CatalogEntry>(catalog::so_n(n));
  return [base, opts](RationalSampler& s) {
    const std::size_t d = base->dim;
    // Two values per instance so that repeated eigenvalues, which mYB
    // needs on a diagonal, occur often.
    const Scalar a = s.next(), b = s.next();
    std::vector<Scalar> diag;
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 0; i < d; ++i)
      diag.push_back(coin(s.engine()) ? a : b);
    const Operator R = Operator::diagonal(diag);
    Trial t;
    json entries = json::array();
    for (const auto& x : diag)
      entries.push_back(x.str());
    t.parameters = {{"diagonal", entries}};
    t.algebra = with_operators(*base, {{"R", R}, {"R1", R}, {"R2", R}});
    CheckReport myb = lie::check_myb(*base->bracket, R, opts);
    if (!myb.passed) {
      t.applicable = false;
      t.report = std::move(myb);
      return t;
    }
    t.report = lie::check_even_tempered(lie::LieBiOperator(*base->bracket, R, R, opts), opts);
    t.witness = !t.report.passed;
    return t;
  };
}

TrialFn non_normal_triple(std::size_t n, const CheckOptions& opts)
{
  auto base = std::make_shared<catalog::CatalogEntry>(catalog::gl_assoc(n));
  return [base, n, opts](RationalSampler& s) {
    const catalog::Matrix Q = catalog::random_matrix(n, s);
    const auto ops = catalog::mult_operators(*base, Q);
    const Operator& R = ops.at("right");
    Trial t;
    t.report = jordan::check_triple_bi_myb(base->triple(), R, R, opts);
    t.applicable = t.report.at("core").passed;
    t.witness = t.applicable && !t.report.at("normal").passed;
    t.parameters = {{"Q", matrix_json(Q)}, {"operator", "right"}};
    t.algebra = with_operators(*base, {{"R1", R}, {"R2", R}});
    return t;
  };
}

TrialFn example4_nonfactorizable(std::size_t n, const CheckOptions& opts)
{
  auto base = std::make_shared<catalog::CatalogEntry>(catalog::so_n(n));
  return [base, n, opts](RationalSampler& s) {
    std::vector<Scalar> q;
    for (std::size_t i = 0; i < n; ++i)
      q.push_back(s.next());
    const catalog::Matrix Q = catalog::Matrix::diagonal(q);
    const auto ops = catalog::mult_operators(*base, Q);
    const Operator& R = ops.at("R");
    const Operator& rho = ops.at("rho");
    const auto& real = *base->realization;
    const std::size_t d = base->dim;

    // For diagonal Q every basis element is a common eigenvector: the
    // element with pivot (r,c) has R-eigenvalue q_r + q_c and rho-eigenvalue
    // q_r q_c. A split assigns one root to R1 and the other to R2.
    std::vector<std::pair<Scalar, Scalar>> roots;
    for (std::size_t k = 0; k < d; ++k) {
      const auto [r, c] = real.pivot[k];
      roots.emplace_back(q[r], q[c]);
      const Vector e = Vector::basis(d, k);
      if (R(e) != (q[r] + q[c]) * e || rho(e) != (q[r] * q[c]) * e)
        throw Error("basis element is not an eigenvector of R and rho");
    }
    std::set<std::vector<Scalar>> seen;
    std::vector<CheckReport> candidates;
    json splits = json::array();
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      std::vector<Scalar> d1, d2;
      for (std::size_t k = 0; k < d; ++k) {
        const bool flip = (mask >> k) & 1;
        d1.push_back(flip ? roots[k].second : roots[k].first);
        d2.push_back(flip ? roots[k].first : roots[k].second);
      }
      if (!seen.insert(d1).second)
        continue;
      const Operator R1 = Operator::diagonal(d1), R2 = Operator::diagonal(d2);
      CheckReport r = lie::check_bi_myb(lie::LieBiOperator(*base->bracket, R1, R2, opts), opts);
      r.identity = "bi-myb[split " + std::to_string(mask) + "]";
      if (r.passed)
        splits.push_back(mask);
      candidates.push_back(std::move(r));
    }
    Trial t;
    t.report = aggregate("factorizations", std::move(candidates));
    // Any passing split makes the instance factorizable.
    t.witness = splits.empty();
    json qs = json::array();
    for (const auto& x : q)
      qs.push_back(x.str());
    t.parameters = {{"Q_diagonal", qs}, {"candidates", seen.size()}, {"bi_myb_splits", splits}};
    t.algebra = with_operators(*base, ops);
    return t;
  };
}

TrialFn myb_failure(std::size_t n, const CheckOptions& opts)
{
  auto base = std::make_shared<catalog::CatalogEntry>(catalog::so_n(n));
  return [base, opts](RationalSampler& s) {
    std::vector<Scalar> diag;
    for (std::size_t i = 0; i < base->dim; ++i)
      diag.push_back(s.next());
    const Operator R = Operator::diagonal(diag);
    Trial t;
    t.report = lie::check_myb(*base->bracket, R, opts);
    t.witness = !t.report.passed;
    json entries = json::array();
    for (const auto& x : diag)
      entries.push_back(x.str());
    t.parameters = {{"diagonal", entries}};
    t.algebra = with_operators(*base, {{"R", R}});
    return t;
  };
}

TrialFn full_reduced_disagree(std::size_t n, const CheckOptions& opts)
{
  auto base = std::make_shared<catalog::CatalogEntry>(catalog::gl_assoc(n));
  return [base, opts](RationalSampler& s) {
    const Operator R = s.op(base->dim);
    const TrilinearStructure& t3 = base->triple();
    Trial t;
    CheckReport modes = check_structures_equal("triple-r-modes", jordan::triple_r_full(t3, R),
                                               jordan::triple_r_reduced_unchecked(t3, R));
    t.witness = !modes.passed;
    t.report = aggregate("full-vs-reduced",
                         {std::move(modes), informational(jordan::check_triple_myb(t3, R, opts))});
    t.parameters = json::object();
    t.algebra = with_operators(*base, {{"R", R}});
    return t;
  };
}

struct TargetInfo
{
  std::size_t default_n;
  const char* family;
  TrialFn (*make)(std::size_t, const CheckOptions&);
};

const std::map<std::string, TargetInfo, std::less<>>& targets()
{
  static const std::map<std::string, TargetInfo, std::less<>> table{
      {"r0-not-myb", {2, "gl(n), R1 X = XQ, R2 X = QX, random Q", r0_not_myb}},
      {"non-even-tempered-r1-eq-r2", {2, "gl(n), R1 = R2 = X -> XQ or QX, random Q", non_even_tempered_r1_eq_r2}},
      {"non-even-tempered-diagonal-R", {3, "so(n), R1 = R2 = diagonal R passing mYB", non_even_tempered_diagonal}},
      {"non-normal-triple", {2, "gl(n), XYZ+ZYX, R1 = R2 = X -> XQ, random Q", non_normal_triple}},
      {"example4-nonfactorizable",
       {3, "so(n), R X = QX+XQ, rho X = QXQ, random diagonal Q, eigen-root splits", example4_nonfactorizable}},
      {"myb-failure", {3, "so(n), random diagonal R", myb_failure}},
      {"full-reduced-disagree", {2, "gl(n), XYZ+ZYX, random R", full_reduced_disagree}},
  };
  return table;
}

} // namespace

std::vector<std::string> search_targets()
{
  std::vector<std::string> out;
  for (const auto& [name, info] : targets())
    out.push_back(name);
  return out;
}

std::vector<std::string> theorem_targets()
{
  return {"myb-derived-jacobi",     "polynomial-closure",   "example2-bi-myb",       "xi-characterization",
          "triple-derived-jts",     "triple-intertwining",  "full-reduced-agree",    "rrho-bunch",
          "bunch-round-trip",       "example3-normal"};
}

RunReport search(std::string_view target, const SearchOptions& opts)
{
  const auto theorems = theorem_targets();
  if (std::find(theorems.begin(), theorems.end(), target) != theorems.end())
    throw Error("target is a theorem, not a claim: " + std::string(target));
  const auto it = targets().find(target);
  if (it == targets().end())
    throw Error("unknown search target '" + std::string(target) + "'");
  if (opts.trials < 1)
    throw Error("search needs at least one trial");
  if (opts.entry_bound < 1)
    throw Error("entry bound must be positive");

  const TargetInfo& info = it->second;
  const std::size_t n = opts.dim ? opts.dim : info.default_n;
  const TrialFn trial = info.make(n, opts.check);
  RationalSampler sampler(opts.seed, opts.entry_bound);

  std::size_t found = 0, applicable = 0;
  json first;
  for (std::size_t i = 0; i < opts.trials; ++i) {
    Trial t = trial(sampler);
    applicable += t.applicable;
    if (!t.witness)
      continue;
    if (found++ == 0)
      first = {{"trial", i},
               {"parameters", t.parameters},
               {"algebra", algebra_json(t.algebra)},
               {"report", to_json(t.report)}};
  }

  RunReport report;
  report.command = "search " + std::string(target);
  report.input = info.family;
  const json params = {{"target", target}, {"seed", opts.seed}, {"trials", opts.trials}, {"n", n},
                       {"entry_bound", opts.entry_bound}};
  report.input_digest = sha256_hex(params.dump());
  report.findings = params;
  report.findings["family"] = info.family;
  report.findings["applicable_trials"] = applicable;
  report.findings["witnesses_found"] = found;
  if (found)
    report.findings["first_witness"] = std::move(first);
  else
    report.findings["summary"] = "none found in " + std::to_string(opts.trials) + " trials";
  return report;
}

} // namespace opalg::workbench
