#include "opalg/jordan/triple.hpp"

#include "opalg/core/errors.hpp"

namespace opalg::jordan {

namespace {

using Index3 = TrilinearStructure::Index;

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

CheckReport mark(CheckReport r, const TripleWithOperator& s)
{
  if (!s.base_verified())
    r.markers.emplace_back(kBaseUnverified);
  return r;
}

/// Equality of two tensors as a named identity check.
CheckReport tensors_equal(std::string name, const TrilinearStructure& a, const TrilinearStructure& b)
{
  return check_structures_equal(std::move(name), a, b);
}

/// <X,Y,Z>  with Y -> mid(Y):  <X, mid Y, Z>
TrilinearStructure middle_substituted(const TrilinearStructure& t, const Operator& mid)
{
  const auto e = basis(t.dim());
  const auto me = columns(mid);
  return TrilinearStructure::tabulate(t.dim(), [&](const Index3& i) { return t(e[i[0]], me[i[1]], e[i[2]]); });
}

/// <AX,Y,BZ> + <BX,Y,AZ> - C<X,Y,Z>
TrilinearStructure outer_symmetrized(const TrilinearStructure& t, const Operator& A, const Operator& B,
                                     const Operator& C)
{
  const auto e = basis(t.dim());
  const auto Ae = columns(A);
  const auto Be = columns(B);
  return TrilinearStructure::tabulate(t.dim(), [&](const Index3& i) {
    return t(Ae[i[0]], e[i[1]], Be[i[2]]) + t(Be[i[0]], e[i[1]], Ae[i[2]]) - C(t.product(i));
  });
}

} // namespace

TripleWithOperator::TripleWithOperator(TrilinearStructure triple, Operator R, JtsVariant variant,
                                       const CheckOptions& opts)
  : m_triple(std::move(triple)), m_R(std::move(R)), m_variant(variant), m_verified(true)
{
  require_same_dim(m_R.dim(), m_triple.dim(), "operator");
  const CheckReport r = check_jts_identity(m_triple, variant, opts);
  if (!r.passed)
    throw PreconditionViolation("triple product fails " + r.identity +
                                "; construct with unchecked() to proceed anyway");
}

TripleWithOperator TripleWithOperator::unchecked(TrilinearStructure triple, Operator R,
                                                 JtsVariant variant)
{
  require_same_dim(R.dim(), triple.dim(), "operator");
  TripleWithOperator s;
  s.m_triple = std::move(triple);
  s.m_R = std::move(R);
  s.m_variant = variant;
  s.m_verified = false;
  return s;
}

CheckReport check_equivariance(const BilinearStructure& b, const TrilinearStructure& t,
                               const CheckOptions& opts)
{
  require_same_dim(t.dim(), b.dim(), "triple");
  const std::size_t n = b.dim();
  const auto e = basis(n);
  return check_identity("equivariance", n, 4,
                        [&](std::span<const std::size_t> i) {
                          const Vector &a = e[i[0]], &x = e[i[1]], &y = e[i[2]], &z = e[i[3]];
                          return b(a, t(x, y, z)) - t(b(a, x), y, z) - t(x, b(a, y), z) -
                                 t(x, y, b(a, z));
                        },
                        opts);
}

CheckReport check_design_condition(const BilinearStructure& b, const TrilinearStructure& t,
                                   const CheckOptions& opts)
{
  require_same_dim(t.dim(), b.dim(), "triple");
  const std::size_t n = b.dim();
  const auto e = basis(n);
  return check_identity("design-condition", n, 4,
                        [&](std::span<const std::size_t> i) {
                          const std::array<const Vector*, 2> A{&e[i[0]], &e[i[1]]};
                          const std::array<const Vector*, 2> X{&e[i[2]], &e[i[3]]};
                          Vector sum(n);
                          for (int s = 0; s < 2; ++s)
                            for (int u = 0; u < 2; ++u) {
                              const Vector &a1 = *A[s], &a2 = *A[1 - s];
                              const Vector &x1 = *X[u], &x2 = *X[1 - u];
                              sum += b(a1, t(x1, a2, x2));
                              sum += b(x1, t(a1, x2, a2));
                            }
                          return sum;
                        },
                        opts);
}

CheckReport check_design(const DesignCandidate& d, const CheckOptions& opts)
{
  return aggregate("design", {check_jts_identity(d.triple, d.variant, opts),
                              check_equivariance(d.bracket, d.triple, opts),
                              check_design_condition(d.bracket, d.triple, opts)});
}

CheckReport check_triple_myb(const TrilinearStructure& t, const Operator& R, const CheckOptions& opts)
{
  require_same_dim(R.dim(), t.dim(), "operator");
  const std::size_t n = t.dim();
  const auto e = basis(n);
  const auto Re = columns(R);
  const Operator R2 = R * R;
  return check_identity("triple-myb", n, 3,
                        [&](std::span<const std::size_t> i) {
                          const Vector &x = e[i[0]], &y = e[i[1]], &z = e[i[2]];
                          const Vector &rx = Re[i[0]], &rz = Re[i[2]];
                          return R(t(rx, y, z) + t(x, y, rz)) - t(rx, y, rz) -
                                 R2(t.product({i[0], i[1], i[2]}));
                        },
                        opts);
}

CheckReport check_triple_myb(const TripleWithOperator& s, const CheckOptions& opts)
{
  return mark(check_triple_myb(s.triple(), s.R(), opts), s);
}

TrilinearStructure triple_r_full(const TrilinearStructure& t, const Operator& R)
{
  require_same_dim(R.dim(), t.dim(), "operator");
  const auto e = basis(t.dim());
  const auto Re = columns(R);
  const Operator R2 = R * R;
  return TrilinearStructure::tabulate(t.dim(), [&](const Index3& i) {
    const Vector &x = e[i[0]], &y = e[i[1]], &z = e[i[2]];
    const Vector &rx = Re[i[0]], &ry = Re[i[1]], &rz = Re[i[2]];
    Vector v = t(x, ry, rz) + t(rx, y, rz) + t(rx, ry, z);
    v -= R(t(rx, y, z) + t(x, ry, z) + t(x, y, rz));
    v += R2(t.product(i));
    return v;
  });
}

TrilinearStructure triple_r_reduced_unchecked(const TrilinearStructure& t, const Operator& R)
{
  require_same_dim(R.dim(), t.dim(), "operator");
  const auto e = basis(t.dim());
  const auto Re = columns(R);
  return TrilinearStructure::tabulate(t.dim(), [&](const Index3& i) {
    const Vector &x = e[i[0]], &z = e[i[2]];
    const Vector &rx = Re[i[0]], &ry = Re[i[1]], &rz = Re[i[2]];
    return t(rx, ry, z) + t(x, ry, rz) - R(t(x, ry, z));
  });
}

TrilinearStructure triple_r(const TripleWithOperator& s, TripleMode mode, const CheckOptions& opts)
{
  if (mode == TripleMode::full)
    return triple_r_full(s.triple(), s.R());
  const CheckReport r = check_triple_myb(s.triple(), s.R(), opts);
  if (!r.passed)
    throw PreconditionViolation("reduced derived triple requires the triple mYB identity");
  return triple_r_reduced_unchecked(s.triple(), s.R());
}

CheckReport check_triple_intertwining(const TripleWithOperator& s, const CheckOptions& opts)
{
  if (!check_triple_myb(s.triple(), s.R(), opts).passed)
    throw PreconditionViolation("intertwining check requires the triple mYB identity");
  const TrilinearStructure& t = s.triple();
  const Operator& R = s.R();
  const TrilinearStructure derived = triple_r_full(t, R);
  const auto Re = columns(R);
  return mark(check_identity("triple-intertwining", t.dim(), 3,
                             [&](std::span<const std::size_t> i) {
                               return R(derived.product({i[0], i[1], i[2]})) -
                                      t(Re[i[0]], Re[i[1]], Re[i[2]]);
                             },
                             opts),
              s);
}

CheckReport check_triple_bi_myb(const TrilinearStructure& t, const Operator& R1, const Operator& R2,
                                const CheckOptions& opts)
{
  require_same_dim(R1.dim(), t.dim(), "operator R1");
  require_same_dim(R2.dim(), t.dim(), "operator R2");
  const std::size_t n = t.dim();
  const Operator rho = R1 * R2;

  CheckReport myb1 = check_triple_myb(t, R1, opts);
  myb1.identity = "triple-myb[R1]";
  CheckReport myb2 = check_triple_myb(t, R2, opts);
  myb2.identity = "triple-myb[R2]";
  const TrilinearStructure derived1 = triple_r_full(t, R1);
  const TrilinearStructure derived2 = triple_r_full(t, R2);
  CheckReport core = aggregate("core", {check_operators_equal("commuting", R1 * R2, R2 * R1),
                                        std::move(myb1), std::move(myb2),
                                        tensors_equal("identical-triples", derived1, derived2)});

  // Normal chain: <X,rY,Z> = <R1X,Y,R2Z> + <R2X,Y,R1Z> - r<X,Y,Z> = reduced(R1) = reduced(R2).
  const TrilinearStructure middle = middle_substituted(t, rho);
  const TrilinearStructure reduced1 = triple_r_reduced_unchecked(t, R1);
  const TrilinearStructure reduced2 = triple_r_reduced_unchecked(t, R2);
  CheckReport normal = aggregate(
      "normal", {tensors_equal("normal[outer]", middle, outer_symmetrized(t, R1, R2, rho)),
                 tensors_equal("normal[R1]", middle, reduced1),
                 tensors_equal("normal[R2]", middle, reduced2)});

  // Even-tempered chain, with the middle argument rY throughout.
  const auto e = basis(n);
  const auto R1e = columns(R1);
  const auto R2e = columns(R2);
  const auto rhoe = columns(rho);
  const TrilinearStructure lhs = TrilinearStructure::tabulate(n, [&](const Index3& i) {
    return t(R1e[i[0]], rhoe[i[1]], R2e[i[2]]) + t(R2e[i[0]], rhoe[i[1]], R1e[i[2]]) -
           rho(middle.product(i));
  });
  const TrilinearStructure lhs_printed = TrilinearStructure::tabulate(n, [&](const Index3& i) {
    return t(R1e[i[0]], rhoe[i[1]], R2e[i[2]]) + t(R2e[i[0]], rhoe[i[1]], R2e[i[2]]) -
           rho(middle.product(i));
  });
  const TrilinearStructure squared1 = triple_r_reduced_unchecked(t, R1 * R1);
  const TrilinearStructure squared2 = triple_r_reduced_unchecked(t, R2 * R2);
  CheckReport even = aggregate("even-tempered",
                               {tensors_equal("even-tempered[R1^2]", lhs, squared1),
                                tensors_equal("even-tempered[R2^2]", lhs, squared2)});
  CheckReport even_printed = aggregate(
      "even-tempered[as-printed]", {tensors_equal("even-tempered[as-printed,R1^2]", lhs_printed, squared1),
                                    tensors_equal("even-tempered[as-printed,R2^2]", lhs_printed, squared2)});

  CheckReport short_form = tensors_equal("normal-short-form", derived1, middle);
  CheckReport consistency;
  consistency.identity = "normal-consistency";
  consistency.passed = normal.passed == short_form.passed;
  if (!consistency.passed)
    consistency.witness = normal.passed ? short_form.witness : normal.witness;

  return aggregate("triple-bi-myb",
                   {std::move(core), informational(std::move(normal)), informational(std::move(even)),
                    informational(std::move(even_printed)), informational(std::move(short_form)),
                    informational(std::move(consistency))});
}

CheckReport check_triple_bi_myb_xi(const TrilinearStructure& t, const Operator& R, const Operator& xi,
                                   const CheckOptions& opts)
{
  require_same_dim(xi.dim(), R.dim(), "xi");
  return check_triple_bi_myb(t, R, R + xi, opts);
}

CheckReport check_rho_identity(const TrilinearStructure& t, const Operator& rho,
                               const std::optional<TrilinearStructure>& derived,
                               const CheckOptions& opts)
{
  require_same_dim(rho.dim(), t.dim(), "operator");
  const std::size_t n = t.dim();
  const auto e = basis(n);
  const auto re = columns(rho);
  std::vector<CheckReport> subs;
  subs.push_back(check_identity("rho-identity", n, 3,
                                [&](std::span<const std::size_t> i) {
                                  return t(re[i[0]], e[i[1]], re[i[2]]) -
                                         rho(t(e[i[0]], re[i[1]], e[i[2]]));
                                },
                                opts));
  if (derived) {
    require_same_dim(derived->dim(), n, "derived triple");
    subs.push_back(check_identity("rho-identity[derived]", n, 3,
                                  [&](std::span<const std::size_t> i) {
                                    return rho(derived->product({i[0], i[1], i[2]})) -
                                           t(re[i[0]], e[i[1]], re[i[2]]);
                                  },
                                  opts));
  }
  return aggregate("rho", std::move(subs));
}

} // namespace opalg::jordan
