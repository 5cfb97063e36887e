#include "opalg/lie/myb.hpp"

#include <sstream>

#include "opalg/core/errors.hpp"

namespace opalg::lie {

namespace {

std::string describe(const CheckReport& r)
{
  std::ostringstream os;
  os << r.identity;
  if (r.witness && !r.witness->tuple.empty()) {
    os << " fails at (";
    for (std::size_t i = 0; i < r.witness->tuple.size(); ++i)
      os << (i ? "," : "") << r.witness->tuple[i];
    os << "), residual " << r.witness->residual;
  }
  return os.str();
}

/// Images of the basis vectors under an operator.
std::vector<Vector> columns(const Operator& op)
{
  std::vector<Vector> out;
  for (std::size_t c = 0; c < op.dim(); ++c)
    out.push_back(op.column(c));
  return out;
}

std::vector<Vector> basis(std::size_t n)
{
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(Vector::basis(n, i));
  return out;
}

} // namespace

void require_lie(const BilinearStructure& b, const CheckOptions& opts)
{
  const CheckReport r = check_lie(b, opts);
  if (!r.passed)
    throw PreconditionViolation("bracket is not a Lie bracket: " +
                                describe(r.subchecks[0].passed ? r.subchecks[1] : r.subchecks[0]));
}

LieWithOperator::LieWithOperator(BilinearStructure bracket, Operator R, const CheckOptions& opts)
  : m_bracket(std::move(bracket)), m_R(std::move(R))
{
  require_same_dim(m_R.dim(), m_bracket.dim(), "operator");
  require_lie(m_bracket, opts);
}

LieBiOperator::LieBiOperator(BilinearStructure bracket, Operator R1, Operator R2,
                             const CheckOptions& opts)
  : m_bracket(std::move(bracket)), m_R1(std::move(R1)), m_R2(std::move(R2))
{
  require_same_dim(m_R1.dim(), m_bracket.dim(), "operator R1");
  require_same_dim(m_R2.dim(), m_bracket.dim(), "operator R2");
  require_lie(m_bracket, opts);
}

BilinearStructure bracket_r(const BilinearStructure& b, const Operator& R)
{
  require_same_dim(R.dim(), b.dim(), "operator");
  const auto e = basis(b.dim());
  const auto Re = columns(R);
  return BilinearStructure::tabulate(b.dim(), [&](const BilinearStructure::Index& t) {
    const auto [i, j] = t;
    return b(Re[i], e[j]) + b(e[i], Re[j]) - R(b.product(t));
  });
}

CheckReport check_myb(const BilinearStructure& b, const Operator& R, const CheckOptions& opts)
{
  require_same_dim(R.dim(), b.dim(), "operator");
  const auto e = basis(b.dim());
  const auto Re = columns(R);
  const Operator R2 = R * R;
  return check_identity("myb", b.dim(), 2,
                        [&](std::span<const std::size_t> t) {
                          const std::size_t i = t[0], j = t[1];
                          return R(b(Re[i], e[j]) + b(e[i], Re[j])) - b(Re[i], Re[j]) -
                                 R2(b.product({i, j}));
                        },
                        opts);
}

CheckReport check_derivation(const BilinearStructure& b, const Operator& D, const CheckOptions& opts)
{
  require_same_dim(D.dim(), b.dim(), "operator");
  const auto e = basis(b.dim());
  const auto De = columns(D);
  return check_identity("derivation", b.dim(), 2,
                        [&](std::span<const std::size_t> t) {
                          const std::size_t i = t[0], j = t[1];
                          return D(b.product({i, j})) - b(De[i], e[j]) - b(e[i], De[j]);
                        },
                        opts);
}

CheckReport check_polynomial_closure(const LieWithOperator& g, std::span<const Scalar> f,
                                     const CheckOptions& opts)
{
  const CheckReport base = check_myb(g, opts);
  if (!base.passed)
    throw PreconditionViolation("polynomial closure requires an mYB operator: " + describe(base));
  CheckReport r = check_myb(g.bracket(), op_polynomial(f, g.R()), opts);
  r.identity = "polynomial-closure";
  return r;
}

CheckReport check_bi_myb(const LieBiOperator& g, const CheckOptions& opts)
{
  const Operator& R1 = g.R1();
  const Operator& R2 = g.R2();
  CheckReport commuting = check_operators_equal("commuting", R1 * R2, R2 * R1);
  CheckReport myb1 = check_myb(g.bracket(), R1, opts);
  myb1.identity = "myb[R1]";
  CheckReport myb2 = check_myb(g.bracket(), R2, opts);
  myb2.identity = "myb[R2]";
  CheckReport same = check_structures_equal("identical-brackets", bracket_r(g.bracket(), R1),
                                            bracket_r(g.bracket(), R2));
  return aggregate("bi-myb", {std::move(commuting), std::move(myb1), std::move(myb2), std::move(same)});
}

CheckReport check_even_tempered(const LieBiOperator& g, const CheckOptions& opts)
{
  const BilinearStructure& b = g.bracket();
  const std::size_t n = b.dim();
  const auto e = basis(n);
  const auto R1e = columns(g.R1());
  const auto R2e = columns(g.R2());
  const Operator rho = g.R1() * g.R2();
  const BilinearStructure mixed = BilinearStructure::tabulate(n, [&](const auto& t) {
    const auto [i, j] = t;
    return b(R1e[i], R2e[j]) + b(R2e[i], R1e[j]) - rho(b.product(t));
  });

  std::vector<CheckReport> subs;
  int which = 1;
  for (const Operator* Ri : {&g.R1(), &g.R2()}) {
    const BilinearStructure squared = bracket_r(b, (*Ri) * (*Ri));
    subs.push_back(check_identity("even-tempered[R" + std::to_string(which++) + "^2]", n, 2,
                                  [&](std::span<const std::size_t> t) {
                                    return mixed.product({t[0], t[1]}) - squared.product({t[0], t[1]});
                                  },
                                  opts));
  }
  return aggregate("even-tempered", std::move(subs));
}

CheckReport check_xi_characterization(const LieWithOperator& g, const Operator& xi,
                                      const CheckOptions& opts)
{
  require_same_dim(xi.dim(), g.dim(), "xi");
  const BilinearStructure& b = g.bracket();
  const Operator& R = g.R();
  const std::size_t n = g.dim();

  CheckReport derivation = check_derivation(b, xi, opts);
  derivation.identity = "xi-derivation";

  CheckReport commutes = check_operators_equal("xi-commutes-R", xi * R, R * xi);

  const Operator S = R * xi;
  const BilinearStructure bracket_s = bracket_r(b, S);
  const auto xie = columns(xi);
  CheckReport s_identity = check_identity("xi-S-identity", n, 2,
                                          [&](std::span<const std::size_t> t) {
                                            return b(xie[t[0]], xie[t[1]]) - bracket_s.product({t[0], t[1]});
                                          },
                                          opts);

  CheckReport bi = check_bi_myb(LieBiOperator(b, R, R + xi, opts), opts);
  bi.identity = "bi-myb[R,R+xi]";

  CheckReport derivation_r = check_derivation(bracket_r(b, R), xi, opts);
  derivation_r.identity = "xi-derivation[bracket_R]";

  return aggregate("xi-characterization", {std::move(derivation), std::move(commutes),
                                           std::move(s_identity), std::move(bi),
                                           std::move(derivation_r)});
}

CheckReport check_even_tempered_xi(const LieWithOperator& g, const Operator& xi,
                                   const CheckOptions& opts)
{
  require_same_dim(xi.dim(), g.dim(), "xi");
  const BilinearStructure& b = g.bracket();
  const std::size_t n = g.dim();
  const auto e = basis(n);
  const auto Re = columns(g.R());
  const auto R2e = columns(g.R() * g.R());
  const auto xie = columns(xi);
  const Operator Rxi = g.R() * xi;
  return check_identity("even-tempered-xi", n, 2,
                        [&](std::span<const std::size_t> t) {
                          const std::size_t i = t[0], j = t[1];
                          Vector lhs = b(Re[i], xie[j]) + b(xie[i], Re[j]) - Rxi(b.product({i, j}));
                          Vector rhs = b(R2e[i], e[j]) + b(e[i], R2e[j]);
                          rhs.add_scaled(Scalar(-2), b(Re[i], Re[j]));
                          return lhs - rhs;
                        },
                        opts);
}

CheckReport probe_r0(const LieBiOperator& g, const CheckOptions& opts)
{
  const CheckReport bi = check_bi_myb(g, opts);
  if (!bi.passed)
    throw PreconditionViolation("R0 probe requires a bi-mYB algebra: " + describe(bi));
  const Operator R0 = Scalar(1, 2) * (g.R1() + g.R2());
  CheckReport coincidence = check_structures_equal(
      "bracket-coincidence", bracket_r(g.bracket(), R0), bracket_r(g.bracket(), g.R1()));
  CheckReport r0_myb = check_myb(g.bracket(), R0, opts);
  r0_myb.identity = "R0-mYB";
  return aggregate("r0-probe", {std::move(coincidence), informational(std::move(r0_myb))});
}

XiParams convert_params(const Operator& R1, const Operator& R2)
{
  require_same_dim(R2.dim(), R1.dim(), "operator pair");
  return {R1, R2 - R1};
}

BiParams convert_params(const XiParams& params)
{
  require_same_dim(params.xi.dim(), params.R.dim(), "operator pair");
  return {params.R, params.R + params.xi};
}

} // namespace opalg::lie
