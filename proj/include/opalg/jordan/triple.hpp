#pragma once

#include <optional>

#include "opalg/core/check.hpp"
#include "opalg/core/operator.hpp"
#include "opalg/core/structure.hpp"

namespace opalg::jordan {

/// Marker attached to reports on triple systems whose base identity was not verified.
inline constexpr const char* kBaseUnverified = "base-JTS-unverified";

/**
 * A trilinear product with one operator. The product is validated against
 * the chosen JTS identity on construction unless built with unchecked(),
 * in which case every report derived from it carries kBaseUnverified.
 */
class TripleWithOperator
{
public:
  TripleWithOperator(TrilinearStructure triple, Operator R, JtsVariant variant,
                     const CheckOptions& opts = {});

  static TripleWithOperator unchecked(TrilinearStructure triple, Operator R, JtsVariant variant);

  const TrilinearStructure& triple() const { return m_triple; }
  const Operator& R() const { return m_R; }
  JtsVariant variant() const { return m_variant; }
  bool base_verified() const { return m_verified; }
  std::size_t dim() const { return m_triple.dim(); }

private:
  TripleWithOperator() = default;

  TrilinearStructure m_triple;
  Operator m_R;
  JtsVariant m_variant = JtsVariant::jacobson;
  bool m_verified = false;
};

/// A Lie bracket and a trilinear product proposed as a design. Nothing is
/// assumed beyond the components being well-formed.
struct DesignCandidate
{
  BilinearStructure bracket;
  TrilinearStructure triple;
  JtsVariant variant = JtsVariant::jacobson;
};

/// ad_A is a derivation of the triple:
/// [A,<X,Y,Z>] = <[A,X],Y,Z> + <X,[A,Y],Z> + <X,Y,[A,Z]> on all basis 4-tuples.
CheckReport check_equivariance(const BilinearStructure& bracket, const TrilinearStructure& triple,
                               const CheckOptions& opts = {});

/**
 * [A,<X,A,X>] + [X,<A,X,A>] = 0 for all A, X.
 *
 * The expression has degree two in each of A and X, so it vanishes
 * identically iff its full polarization does; the polarized 4-linear form
 * is swept over basis tuples (a1, a2, x1, x2).
 */
CheckReport check_design_condition(const BilinearStructure& bracket, const TrilinearStructure& triple,
                                   const CheckOptions& opts = {});

/// JTS identity + equivariance + design condition.
CheckReport check_design(const DesignCandidate& d, const CheckOptions& opts = {});

/// R<RX,Y,Z> + R<X,Y,RZ> = <RX,Y,RZ> + R^2<X,Y,Z>
CheckReport check_triple_myb(const TrilinearStructure& triple, const Operator& R,
                             const CheckOptions& opts = {});
CheckReport check_triple_myb(const TripleWithOperator& s, const CheckOptions& opts = {});

enum class TripleMode
{
  full,
  reduced,
};

/**
 * Derived triple.
 *
 * full:    <X,RY,RZ> + <RX,Y,RZ> + <RX,RY,Z> - R<RX,Y,Z> - R<X,RY,Z> - R<X,Y,RZ> + R^2<X,Y,Z>
 * reduced: <RX,RY,Z> + <X,RY,RZ> - R<X,RY,Z>
 *
 * The two agree whenever the triple mYB identity holds; reduced mode throws
 * PreconditionViolation otherwise.
 */
TrilinearStructure triple_r(const TripleWithOperator& s, TripleMode mode = TripleMode::reduced,
                            const CheckOptions& opts = {});

/// The full seven-term derived triple with no precondition.
TrilinearStructure triple_r_full(const TrilinearStructure& triple, const Operator& R);
/// The three-term expression, evaluated regardless of the mYB identity.
TrilinearStructure triple_r_reduced_unchecked(const TrilinearStructure& triple, const Operator& R);

/// R<X,Y,Z>_R = <RX,RY,RZ>. Requires the triple mYB identity.
CheckReport check_triple_intertwining(const TripleWithOperator& s, const CheckOptions& opts = {});

/**
 * Two operators on a triple system. Sub-reports:
 *  - "core": commuting, triple-mYB for each, identical derived triples (asserted);
 *  - "normal": <X,rY,Z> equals <R1X,Y,R2Z> + <R2X,Y,R1Z> - r<X,Y,Z> and both
 *    reduced derived triples, r = R1R2;
 *  - "even-tempered": <R1X,rY,R2Z> + <R2X,rY,R1Z> - r<X,rY,Z> equals the
 *    three-term expression <SX,SY,Z> + <X,SY,SZ> - S<X,SY,Z> for S = R1^2 and S = R2^2;
 *  - "even-tempered[as-printed]": same with <R2X,rY,R2Z> as second term;
 *  - "normal-short-form": derived triple of R1 equals <X,rY,Z>;
 *  - "normal-consistency": normal and normal-short-form agree.
 * Only "core" is asserted; the rest are informational flags.
 */
CheckReport check_triple_bi_myb(const TrilinearStructure& triple, const Operator& R1,
                                const Operator& R2, const CheckOptions& opts = {});

/// The same check written with R = R1 and xi = R2 - R1.
CheckReport check_triple_bi_myb_xi(const TrilinearStructure& triple, const Operator& R,
                                   const Operator& xi, const CheckOptions& opts = {});

/// <rX,Y,rZ> = r<X,rY,Z>; with a derived triple supplied, also r<X,Y,Z>_r = <rX,Y,rZ>.
CheckReport check_rho_identity(const TrilinearStructure& triple, const Operator& rho,
                               const std::optional<TrilinearStructure>& derived = std::nullopt,
                               const CheckOptions& opts = {});

} // namespace opalg::jordan
