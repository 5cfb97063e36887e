#pragma once

#include <span>

#include "opalg/core/check.hpp"
#include "opalg/core/operator.hpp"
#include "opalg/core/structure.hpp"

namespace opalg::lie {

/// A Lie bracket together with one operator. The bracket is checked for
/// antisymmetry and Jacobi on construction; the operator is unconstrained.
class LieWithOperator
{
public:
  LieWithOperator(BilinearStructure bracket, Operator R, const CheckOptions& opts = {});

  const BilinearStructure& bracket() const { return m_bracket; }
  const Operator& R() const { return m_R; }
  std::size_t dim() const { return m_bracket.dim(); }

private:
  BilinearStructure m_bracket;
  Operator m_R;
};

/// A Lie bracket with two operators. Commutation is a checked predicate.
class LieBiOperator
{
public:
  LieBiOperator(BilinearStructure bracket, Operator R1, Operator R2, const CheckOptions& opts = {});

  const BilinearStructure& bracket() const { return m_bracket; }
  const Operator& R1() const { return m_R1; }
  const Operator& R2() const { return m_R2; }
  std::size_t dim() const { return m_bracket.dim(); }

private:
  BilinearStructure m_bracket;
  Operator m_R1;
  Operator m_R2;
};

/// Throws PreconditionViolation (carrying the failing witness) unless `b` is a Lie bracket.
void require_lie(const BilinearStructure& b, const CheckOptions& opts = {});

/// [X,Y]_R = [RX,Y] + [X,RY] - R[X,Y]
BilinearStructure bracket_r(const BilinearStructure& bracket, const Operator& R);
inline BilinearStructure bracket_r(const LieWithOperator& g) { return bracket_r(g.bracket(), g.R()); }

/// R[RX,Y] + R[X,RY] = [RX,RY] + R^2[X,Y] on all basis pairs.
CheckReport check_myb(const BilinearStructure& bracket, const Operator& R, const CheckOptions& opts = {});
inline CheckReport check_myb(const LieWithOperator& g, const CheckOptions& opts = {})
{
  return check_myb(g.bracket(), g.R(), opts);
}

/// D[X,Y] = [DX,Y] + [X,DY] on all basis pairs.
CheckReport check_derivation(const BilinearStructure& bracket, const Operator& D,
                             const CheckOptions& opts = {});

/// mYB for f(R). Throws PreconditionViolation unless (g, R) itself is mYB.
CheckReport check_polynomial_closure(const LieWithOperator& g, std::span<const Scalar> f,
                                     const CheckOptions& opts = {});

/// Commuting R1, R2; both mYB; identical derived brackets.
CheckReport check_bi_myb(const LieBiOperator& g, const CheckOptions& opts = {});

/// [R1X,R2Y] + [R2X,R1Y] - R1R2[X,Y] equals [Ri^2 X,Y] + [X,Ri^2 Y] - Ri^2[X,Y] for i = 1, 2.
CheckReport check_even_tempered(const LieBiOperator& g, const CheckOptions& opts = {});

/**
 * Characterization of bi-mYB pairs (R, R + xi):
 *  - xi is a derivation of [.,.];
 *  - xi R = R xi;
 *  - [xi X, xi Y] = [SX,Y] + [X,SY] - S[X,Y] with S = R xi;
 *  - (g, R, R + xi) is bi-mYB;
 *  - xi is a derivation of [.,.]_R as well.
 */
CheckReport check_xi_characterization(const LieWithOperator& g, const Operator& xi,
                                      const CheckOptions& opts = {});

/// [RX,xiY] + [xiX,RY] - R xi[X,Y] = [R^2X,Y] - 2[RX,RY] + [X,R^2Y]
CheckReport check_even_tempered_xi(const LieWithOperator& g, const Operator& xi,
                                   const CheckOptions& opts = {});

/// Midpoint R0 = (R1 + R2)/2. Reports the asserted coincidence [.,.]_R0 = [.,.]_R1
/// and, informationally, whether (g, R0) is mYB. Throws PreconditionViolation
/// unless g is bi-mYB.
CheckReport probe_r0(const LieBiOperator& g, const CheckOptions& opts = {});

struct XiParams
{
  Operator R;
  Operator xi;
};

struct BiParams
{
  Operator R1;
  Operator R2;
};

/// (R1, R2) -> (R = R1, xi = R2 - R1)
XiParams convert_params(const Operator& R1, const Operator& R2);
/// (R, xi) -> (R1 = R, R2 = R + xi)
BiParams convert_params(const XiParams& params);

} // namespace opalg::lie
