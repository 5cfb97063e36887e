#include "opalg/rrho/bunch.hpp"

#include "opalg/core/errors.hpp"

namespace opalg::rrho {

namespace {

std::vector<Vector> basis(std::size_t n)
{
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(Vector::basis(n, i));
  return out;
}

std::vector<Vector> columns(const Operator& op)
{
  std::vector<Vector> out;
  for (std::size_t c = 0; c < op.dim(); ++c)
    out.push_back(op.column(c));
  return out;
}

} // namespace

RRhoAlgebra::RRhoAlgebra(BilinearStructure bracket, Operator R, Operator rho, const CheckOptions& opts)
  : m_bracket(std::move(bracket)), m_R(std::move(R)), m_rho(std::move(rho))
{
  require_same_dim(m_R.dim(), m_bracket.dim(), "operator R");
  require_same_dim(m_rho.dim(), m_bracket.dim(), "operator rho");
  lie::require_lie(m_bracket, opts);
}

BilinearStructure bracket_rho(const BilinearStructure& b, const Operator& R, const Operator& rho)
{
  require_same_dim(R.dim(), b.dim(), "operator R");
  require_same_dim(rho.dim(), b.dim(), "operator rho");
  const auto e = basis(b.dim());
  const auto Re = columns(R);
  const auto rhoe = columns(rho);
  const BilinearStructure tangent = lie::bracket_r(b, R);
  return BilinearStructure::tabulate(b.dim(), [&](const BilinearStructure::Index& t) {
    const auto [i, j] = t;
    Vector v = b(rhoe[i], e[j]) + b(e[i], rhoe[j]) - rho(b.product(t));
    v += b(Re[i], Re[j]);
    v -= R(tangent.product(t));
    return v;
  });
}

CheckReport check_rrho(const RRhoAlgebra& a, const CheckOptions& opts)
{
  const BilinearStructure& b = a.bracket();
  const Operator& R = a.R();
  const Operator& rho = a.rho();
  const std::size_t n = a.dim();
  const auto e = basis(n);
  const auto Re = columns(R);
  const auto rhoe = columns(rho);
  const BilinearStructure tangent = lie::bracket_r(b, R);
  const BilinearStructure quadratic = bracket_rho(b, R, rho);

  CheckReport first = check_identity("rrho[rho-homomorphism]", n, 2,
                                     [&](std::span<const std::size_t> t) {
                                       return rho(quadratic.product({t[0], t[1]})) -
                                              b(rhoe[t[0]], rhoe[t[1]]);
                                     },
                                     opts);
  CheckReport second = check_identity("rrho[mixed]", n, 2,
                                      [&](std::span<const std::size_t> t) {
                                        const std::size_t i = t[0], j = t[1];
                                        return R(quadratic.product({i, j})) + rho(tangent.product({i, j})) -
                                               b(Re[i], rhoe[j]) - b(rhoe[i], Re[j]);
                                      },
                                      opts);
  CheckReport regular = check_identity("regular", n, 2,
                                       [&](std::span<const std::size_t> t) {
                                         const std::size_t i = t[0], j = t[1];
                                         Vector v = R(tangent.product({i, j}));
                                         v.add_scaled(Scalar(-2), b(rhoe[i], e[j]) + b(e[i], rhoe[j]));
                                         return v;
                                       },
                                       opts);
  return aggregate("rrho", {std::move(first), std::move(second), informational(std::move(regular))});
}

RRhoAlgebra from_bi_myb(const lie::LieBiOperator& g, const CheckOptions& opts)
{
  if (!lie::check_bi_myb(g, opts).passed)
    throw PreconditionViolation("from_bi_myb requires a bi-mYB algebra");
  if (!lie::check_even_tempered(g, opts).passed)
    throw PreconditionViolation("from_bi_myb requires an even-tempered bi-mYB algebra");
  return RRhoAlgebra(g.bracket(), g.R1() + g.R2(), g.R1() * g.R2(), opts);
}

QuadraticBunch::QuadraticBunch(std::array<BilinearStructure, 3> brackets, std::array<Operator, 3> maps,
                               const CheckOptions& opts)
  : m_brackets(std::move(brackets)), m_maps(std::move(maps))
{
  const std::size_t n = m_brackets[0].dim();
  for (const auto& b : m_brackets)
    require_same_dim(b.dim(), n, "bunch bracket");
  for (const auto& m : m_maps)
    require_same_dim(m.dim(), n, "bunch map");
  lie::require_lie(m_brackets[0], opts);
}

BilinearStructure QuadraticBunch::bracket_at(const Scalar& t) const
{
  return m_brackets[0] + t * m_brackets[1] + (t * t) * m_brackets[2];
}

Operator QuadraticBunch::map_at(const Scalar& t) const
{
  return m_maps[0] + t * m_maps[1] + (t * t) * m_maps[2];
}

QuadraticBunch QuadraticBunch::with_bracket(std::size_t degree, BilinearStructure b) const
{
  auto brackets = m_brackets;
  brackets.at(degree) = std::move(b);
  return QuadraticBunch(std::move(brackets), m_maps);
}

QuadraticBunch build_bunch(const RRhoAlgebra& a, const CheckOptions& opts)
{
  return QuadraticBunch({a.bracket(), lie::bracket_r(a.bracket(), a.R()), bracket_rho(a)},
                        {Operator::identity(a.dim()), a.R(), a.rho()}, opts);
}

CheckReport check_gamma_bunch(const QuadraticBunch& q, const CheckOptions& opts)
{
  const std::size_t n = q.dim();
  const BilinearStructure& base = q.bracket(0);
  std::array<std::vector<Vector>, 3> images;
  for (std::size_t d = 0; d < 3; ++d)
    images[d] = columns(q.map(d));
  const auto e = basis(n);

  std::vector<CheckReport> subs;
  for (std::size_t d = 1; d < 3; ++d) {
    CheckReport r = check_antisymmetry(q.bracket(d), opts);
    r.identity = "antisymmetry[b" + std::to_string(d) + "]";
    subs.push_back(std::move(r));
  }

  for (std::size_t degree = 0; degree <= 4; ++degree) {
    subs.push_back(check_identity(
        "homomorphism[deg " + std::to_string(degree) + "]", n, 2,
        [&](std::span<const std::size_t> t) {
          Vector v(n);
          for (std::size_t a = 0; a < 3; ++a) {
            if (degree < a || degree - a > 2)
              continue;
            const std::size_t c = degree - a;
            v += q.map(a)(q.bracket(c).product({t[0], t[1]}));
            v -= base(images[a][t[0]], images[c][t[1]]);
          }
          return v;
        },
        opts));
  }

  for (std::size_t degree = 0; degree <= 4; ++degree) {
    subs.push_back(check_identity(
        "jacobiator[deg " + std::to_string(degree) + "]", n, 3,
        [&](std::span<const std::size_t> t) {
          const Vector &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
          Vector v(n);
          for (std::size_t a = 0; a < 3; ++a) {
            if (degree < a || degree - a > 2)
              continue;
            const BilinearStructure& outer = q.bracket(a);
            const BilinearStructure& inner = q.bracket(degree - a);
            v += outer(inner(x, y), z);
            v += outer(inner(y, z), x);
            v += outer(inner(z, x), y);
          }
          return v;
        },
        opts));
  }
  return aggregate("gamma-bunch", std::move(subs));
}

RRhoAlgebra extract_rrho(const QuadraticBunch& q, const CheckOptions& opts)
{
  if (q.map(0) != Operator::identity(q.dim()))
    throw PreconditionViolation("extract_rrho requires the constant map coefficient to be the identity");
  if (!check_gamma_bunch(q, opts).passed)
    throw PreconditionViolation("extract_rrho requires a bunch passing the homomorphism check");

  RRhoAlgebra a(q.bracket(0), q.map(1), q.map(2), opts);
  const CheckReport tangent = check_structures_equal("tangent-coefficient", q.bracket(1),
                                                     lie::bracket_r(a.bracket(), a.R()));
  if (!tangent.passed)
    throw CoefficientMismatch("first-order bracket coefficient differs from [.,.]_R", *tangent.witness);
  const CheckReport quadratic = check_structures_equal("quadratic-coefficient", q.bracket(2), bracket_rho(a));
  if (!quadratic.passed)
    throw CoefficientMismatch("second-order bracket coefficient differs from [.,.]_rho", *quadratic.witness);
  return a;
}

} // namespace opalg::rrho
