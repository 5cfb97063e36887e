#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "opalg/core/vector.hpp"

namespace opalg {

/// Square matrix acting on coordinates: y_r = sum_c entry(r, c) x_c.
class Operator
{
public:
  Operator() = default;
  /// Zero operator.
  explicit Operator(std::size_t dim);
  /// Row-major entries; throws DimensionMismatch unless entries.size() == dim*dim.
  Operator(std::size_t dim, std::vector<Scalar> entries);

  static Operator identity(std::size_t dim);
  static Operator scalar(std::size_t dim, const Scalar& c);
  static Operator diagonal(std::span<const Scalar> diag);
  /// Operator whose c-th column is image(e_c).
  static Operator from_images(std::size_t dim, const std::function<Vector(const Vector&)>& image);

  std::size_t dim() const { return m_dim; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_entries[r * m_dim + c]; }
  std::span<const Scalar> entries() const { return m_entries; }

  Vector apply(const Vector& x) const;
  Vector operator()(const Vector& x) const { return apply(x); }
  /// Image of the c-th basis vector.
  Vector column(std::size_t c) const;

  bool is_zero() const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const Scalar& s);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Scalar& s, Operator a) { return a *= s; }
  /// Composition: (a*b)(x) = a(b(x)).
  friend Operator operator*(const Operator& a, const Operator& b);

  friend bool operator==(const Operator&, const Operator&) = default;

private:
  std::size_t m_dim = 0;
  std::vector<Scalar> m_entries;
};

/// Coefficients f_0, f_1, ... of f(x) = sum f_k x^k.
using Polynomial = std::vector<Scalar>;

/// f(R) = sum f_k R^k with R^0 the identity.
Operator op_polynomial(std::span<const Scalar> f, const Operator& R);

/// Coefficients of f*g.
Polynomial poly_multiply(std::span<const Scalar> f, std::span<const Scalar> g);

} // namespace opalg
