#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "opalg/core/scalar.hpp"

namespace opalg {

/// Dense coordinate vector with respect to a fixed basis.
class Vector
{
public:
  Vector() = default;
  explicit Vector(std::size_t dim) : m_coords(dim) {}
  Vector(std::initializer_list<Scalar> coords) : m_coords(coords) {}
  explicit Vector(std::vector<Scalar> coords) : m_coords(std::move(coords)) {}

  static Vector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return m_coords.size(); }
  const Scalar& operator[](std::size_t i) const { return m_coords[i]; }
  Scalar& operator[](std::size_t i) { return m_coords[i]; }

  std::span<const Scalar> coords() const { return m_coords; }

  bool is_zero() const;

  /// this += factor * other
  void add_scaled(const Scalar& factor, const Vector& other);

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend Vector operator-(Vector v) { return v *= Scalar(-1); }

  friend bool operator==(const Vector&, const Vector&) = default;

private:
  std::vector<Scalar> m_coords;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);

} // namespace opalg
