#include "opalg/core/vector.hpp"

#include <ostream>

#include "opalg/core/errors.hpp"

namespace opalg {

Vector Vector::basis(std::size_t dim, std::size_t index)
{
  if (index >= dim)
    throw DimensionMismatch("basis index out of range");
  Vector v(dim);
  v[index] = Scalar(1);
  return v;
}

bool Vector::is_zero() const
{
  for (const auto& c : m_coords)
    if (!c.is_zero())
      return false;
  return true;
}

void Vector::add_scaled(const Scalar& factor, const Vector& other)
{
  require_same_dim(other.dim(), dim(), "vector add");
  if (factor.is_zero())
    return;
  for (std::size_t i = 0; i < m_coords.size(); ++i)
    m_coords[i].add_product(factor, other[i]);
}

Vector& Vector::operator+=(const Vector& o)
{
  require_same_dim(o.dim(), dim(), "vector add");
  for (std::size_t i = 0; i < m_coords.size(); ++i)
    if (!o[i].is_zero())
      m_coords[i] += o[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
  require_same_dim(o.dim(), dim(), "vector subtract");
  for (std::size_t i = 0; i < m_coords.size(); ++i)
    if (!o[i].is_zero())
      m_coords[i] -= o[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s)
{
  for (auto& c : m_coords)
    c *= s;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Vector& v)
{
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i)
    os << (i ? ", " : "") << v[i];
  return os << ')';
}

} // namespace opalg
