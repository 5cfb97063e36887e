#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opalg/catalog/matrix.hpp"
#include "opalg/core/check.hpp"
#include "opalg/core/structure.hpp"

// Brute-force oracles built from matrix products and free associative
// expansions only. Nothing here goes through the structure-tensor evaluation
// path; results are packed into tensors purely for comparison.
namespace opalg::catalog::oracle {

/// Noncommutative polynomial: words over single-character letters.
class WordPoly
{
public:
  WordPoly() = default;
  static WordPoly letter(char c);

  const std::map<std::string, Scalar>& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }

  WordPoly& operator+=(const WordPoly& o);
  WordPoly& operator-=(const WordPoly& o);
  WordPoly& operator*=(const Scalar& s);

  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  friend WordPoly operator*(const Scalar& s, WordPoly a) { return a *= s; }
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b);

  friend bool operator==(const WordPoly&, const WordPoly&) = default;

  /// e.g. "xqyqz + zqyqx"
  std::string str() const;

private:
  void add(const std::string& word, const Scalar& c);

  std::map<std::string, Scalar> m_terms;
};

/// <a,b,c> = abc + cba
WordPoly jordan(const WordPoly& a, const WordPoly& b, const WordPoly& c);

/**
 * Residual (lhs - rhs) of the five-variable identity for the triple
 * abc + cba. Letters follow the tuple order of check_jts_identity:
 * middle uses x,a,z,b,y; jacobson uses a,b,x,y,z.
 */
WordPoly jts_residual(JtsVariant variant);
std::vector<char> jts_letters(JtsVariant variant);

/// True when the residual vanishes in the free associative algebra.
bool associative_triple_satisfies(JtsVariant variant);

/// Derived triple of abc+cba for X -> Xq ("right") or X -> qX ("left"),
/// full seven-term or reduced three-term form, over letters x,y,z,q.
WordPoly derived_triple_words(bool right, bool reduced);

/// Triple mYB residual R<RX,Y,Z> + R<X,Y,RZ> - <RX,Y,RZ> - R^2<X,Y,Z> for X -> Xq or X -> qX.
WordPoly triple_myb_residual_words(bool right);

/// Substitutes matrices for letters and sums the products.
Matrix evaluate(const WordPoly& p, const std::map<char, Matrix>& values, std::size_t n);

/// Tensor of (X,Y) -> p(x=X, y=Y, q=Q) on a matrix realization.
BilinearStructure bilinear_from_words(const MatrixRealization& real, const WordPoly& p, const Matrix& Q);
/// Tensor of (X,Y,Z) -> p(x=X, y=Y, z=Z, q=Q) on a matrix realization.
TrilinearStructure trilinear_from_words(const MatrixRealization& real, const WordPoly& p, const Matrix& Q);

/// Commutator XY - YX by matrix multiplication.
BilinearStructure commutator(const MatrixRealization& real);
/// XQY - YQX by matrix multiplication.
BilinearStructure xqy_minus_yqx(const MatrixRealization& real, const Matrix& Q);

/// Lexicographically smallest basis 5-tuple at which the JTS residual of
/// XYZ+ZYX is nonzero, evaluated with matrices; nullopt if none.
std::optional<Witness> jts_first_failure(const MatrixRealization& real, JtsVariant variant);

/**
 * First- and second-order coefficients of the bracket family
 * [X,Y]_t = R_t^{-1}[R_t X, R_t Y] with R_t X = X + t(QX+XQ) + t^2 QXQ,
 * obtained by evaluating at sampled t (matrix inverse of 1 + tQ) and
 * interpolating. A third sample confirms the family is quadratic; throws
 * Error otherwise.
 */
struct BunchCoefficients
{
  BilinearStructure first;
  BilinearStructure second;
};
BunchCoefficients conjugation_bunch(const MatrixRealization& real, const Matrix& Q);

} // namespace opalg::catalog::oracle
