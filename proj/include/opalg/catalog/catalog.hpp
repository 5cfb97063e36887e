#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/catalog/matrix.hpp"
#include "opalg/core/operator.hpp"
#include "opalg/core/structure.hpp"

namespace opalg::catalog {

enum class Family
{
  so,
  gl,
  custom,
};

/**
 * A concrete algebra with named operators and, where relevant, candidate
 * triple products. Construction validates the advertised base structure
 * (Lie bracket, and the jacobson JTS identity for every triple except
 * those listed in `candidate_triples`). Operator properties are recorded in `expectations`
 * as claims to be checked, never assumed.
 */
struct CatalogEntry
{
  std::string name;
  Family family = Family::custom;
  std::string provenance;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::optional<BilinearStructure> bracket;
  std::map<std::string, TrilinearStructure> triples;
  std::string primary_triple;
  /// Triples offered as candidates and not validated at construction.
  std::vector<std::string> candidate_triples;
  std::map<std::string, Operator> operators;
  std::vector<std::string> expectations;
  std::optional<MatrixRealization> realization;
  /// Present for entries built from an n x n matrix Q.
  std::optional<Matrix> q;

  const TrilinearStructure& triple(std::string_view key = {}) const;
  const Operator& op(std::string_view key) const;
};

/// so(n): basis E_ij - E_ji (i < j, lexicographic), bracket = commutator.
/// For n = 3 the basis is (E_32 - E_23, E_13 - E_31, E_21 - E_12) so that
/// [e_a, e_b] = e_c cyclically (cross-product form).
CatalogEntry so_n(std::size_t n);

/// Full matrix algebra gl(n): basis E_ij (row-major), commutator bracket and
/// triple <X,Y,Z> = XYZ + ZYX.
CatalogEntry gl_assoc(std::size_t n);

/**
 * Operators induced by multiplication with Q.
 *
 * gl(n): "right" X -> XQ, "left" X -> QX, "R" = left + right, "rho" X -> QXQ,
 * "R0" = (left + right)/2, "xi" = left - right.
 * so(n): Q must be symmetric; only "R" X -> QX + XQ and "rho" X -> QXQ.
 */
std::map<std::string, Operator> mult_operators(const CatalogEntry& entry, const Matrix& Q);

/**
 * so(3) with a symmetric form G and a fixed X0.
 * Triples: "two-term" <X,Y>Z + <Y,Z>X and "standard" <X,Y>Z + <Y,Z>X - <X,Z>Y.
 * Operators: "Ra" X -> <X0,X> X0 and "Rb" X -> [X0,X].
 * Throws Error if G is not symmetric or is degenerate.
 */
CatalogEntry example1_candidates(const Vector& x0, const Matrix& form);

/// gl(n) with the multiplication operators of Q: R1 = "right", R2 = "left".
CatalogEntry example2(std::size_t n, const Matrix& Q);

/// so(n) with R X = QX + XQ and rho X = QXQ for symmetric Q.
CatalogEntry example4(std::size_t n, const Matrix& Q);

/**
 * Named lookup, e.g. "so?n=4", "gl?n=2", "example2-gl2?q=diag:1,2",
 * "example4-so3?q=symmetric:7", "example1-so3?x0=0,0,1&form=diag:1,1,1".
 * Q specs: diag:a,b,..  rows:a,b;c,d  random:SEED  symmetric:SEED.
 * Throws Error for unknown names or malformed parameters.
 */
CatalogEntry lookup(std::string_view name);

/// Names accepted by lookup() (base names, without parameters).
std::vector<std::string> catalog_names();

/// Parses a Q spec for an n x n matrix.
Matrix parse_q(std::string_view spec, std::size_t n);

} // namespace opalg::catalog
