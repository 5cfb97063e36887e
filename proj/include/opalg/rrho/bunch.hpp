#pragma once

#include <array>

#include "opalg/core/check.hpp"
#include "opalg/core/errors.hpp"
#include "opalg/core/operator.hpp"
#include "opalg/core/structure.hpp"
#include "opalg/lie/myb.hpp"

namespace opalg::rrho {

/// Lie bracket with a pair of operators (R, rho). The bracket is validated
/// on construction; the two defining identities are checked, not assumed.
class RRhoAlgebra
{
public:
  RRhoAlgebra(BilinearStructure bracket, Operator R, Operator rho, const CheckOptions& opts = {});

  const BilinearStructure& bracket() const { return m_bracket; }
  const Operator& R() const { return m_R; }
  const Operator& rho() const { return m_rho; }
  std::size_t dim() const { return m_bracket.dim(); }

  friend bool operator==(const RRhoAlgebra&, const RRhoAlgebra&) = default;

private:
  BilinearStructure m_bracket;
  Operator m_R;
  Operator m_rho;
};

/// [X,Y]_rho = [rhoX,Y] + [X,rhoY] - rho[X,Y] + [RX,RY] - R[X,Y]_R
BilinearStructure bracket_rho(const BilinearStructure& bracket, const Operator& R, const Operator& rho);
inline BilinearStructure bracket_rho(const RRhoAlgebra& a)
{
  return bracket_rho(a.bracket(), a.R(), a.rho());
}

/**
 * The two defining identities
 *   rho[X,Y]_rho = [rhoX,rhoY]
 *   R[X,Y]_rho + rho[X,Y]_R = [RX,rhoY] + [rhoX,RY]
 * plus the informational "regular" flag R[X,Y]_R = 2([rhoX,Y] + [X,rhoY]).
 */
CheckReport check_rrho(const RRhoAlgebra& a, const CheckOptions& opts = {});

/// R = R1 + R2, rho = R1 R2. Throws PreconditionViolation unless g is an
/// even-tempered bi-mYB algebra.
RRhoAlgebra from_bi_myb(const lie::LieBiOperator& g, const CheckOptions& opts = {});

/**
 * Quadratic family of brackets b0 + t b1 + t^2 b2 together with maps
 * r0 + t r1 + t^2 r2. b0 is validated as a Lie bracket on construction.
 */
class QuadraticBunch
{
public:
  QuadraticBunch(std::array<BilinearStructure, 3> brackets, std::array<Operator, 3> maps,
                 const CheckOptions& opts = {});

  const BilinearStructure& bracket(std::size_t degree) const { return m_brackets.at(degree); }
  const Operator& map(std::size_t degree) const { return m_maps.at(degree); }
  std::size_t dim() const { return m_brackets[0].dim(); }

  BilinearStructure bracket_at(const Scalar& t) const;
  Operator map_at(const Scalar& t) const;

  /// Copy with one bracket coefficient replaced (b0 is re-validated).
  QuadraticBunch with_bracket(std::size_t degree, BilinearStructure b) const;

private:
  std::array<BilinearStructure, 3> m_brackets;
  std::array<Operator, 3> m_maps;
};

/// Brackets ([.,.], [.,.]_R, [.,.]_rho), maps (1, R, rho).
QuadraticBunch build_bunch(const RRhoAlgebra& a, const CheckOptions& opts = {});

/**
 * Homomorphism identity R_t[X,Y]_t = [R_tX, R_tY]_0 and the Jacobi identity
 * of [.,.]_t, each compared coefficientwise in t for degrees 0..4, plus
 * antisymmetry of b1 and b2.
 */
CheckReport check_gamma_bunch(const QuadraticBunch& q, const CheckOptions& opts = {});

struct CoefficientMismatch : Error
{
  CoefficientMismatch(const std::string& what, Witness w) : Error(what), witness(std::move(w)) {}
  Witness witness;
};

/// Reads (b0, r1, r2) back as an Rrho-algebra and confirms that b1, b2 are the
/// brackets it generates. Throws PreconditionViolation unless the bunch passes
/// check_gamma_bunch with r0 = identity; CoefficientMismatch if b1/b2 disagree.
RRhoAlgebra extract_rrho(const QuadraticBunch& q, const CheckOptions& opts = {});

} // namespace opalg::rrho
