#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "opalg/core/operator.hpp"
#include "opalg/core/random.hpp"
#include "opalg/core/scalar.hpp"

namespace opalg::catalog {

/// Dense n x n matrix of rationals: the concrete associative algebra the
/// catalog examples live in.
class Matrix
{
public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : m_n(n), m_a(n * n) {}
  Matrix(std::size_t n, std::vector<Scalar> row_major);

  static Matrix identity(std::size_t n);
  static Matrix unit(std::size_t n, std::size_t r, std::size_t c);
  static Matrix diagonal(std::span<const Scalar> d);
  static Matrix from_operator(const Operator& op);

  std::size_t size() const { return m_n; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_a[r * m_n + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return m_a[r * m_n + c]; }

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  Operator to_operator() const { return Operator(m_n, m_a); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t m_n = 0;
  std::vector<Scalar> m_a;
};

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Matrix random_matrix(std::size_t n, RationalSampler& sampler);
Matrix random_symmetric(std::size_t n, RationalSampler& sampler);

/**
 * A Lie/Jordan structure realized inside n x n matrices: the basis as
 * matrices and a way back from a matrix in their span to coordinates.
 *
 * Coordinates are read at pivot positions: basis element k has entry
 * `pivot_sign[k]` at `pivot[k]` and every other basis element is zero there.
 */
struct MatrixRealization
{
  std::size_t n = 0;
  std::vector<Matrix> basis;
  std::vector<std::pair<std::size_t, std::size_t>> pivot;
  std::vector<Scalar> pivot_sign;

  std::size_t dim() const { return basis.size(); }
  Matrix element(const Vector& coords) const;
  /// Throws Error if m is not in the span of the basis.
  Vector coordinates(const Matrix& m) const;
};

} // namespace opalg::catalog
