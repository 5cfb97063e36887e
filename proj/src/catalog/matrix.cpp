#include "opalg/catalog/matrix.hpp"

#include "opalg/core/errors.hpp"

namespace opalg::catalog {

Matrix::Matrix(std::size_t n, std::vector<Scalar> row_major) : m_n(n), m_a(std::move(row_major))
{
  require_same_dim(m_a.size(), n * n, "matrix entries");
}

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t r, std::size_t c)
{
  Matrix m(n);
  m(r, c) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> d)
{
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_operator(const Operator& op)
{
  return Matrix(op.dim(), std::vector<Scalar>(op.entries().begin(), op.entries().end()));
}

Matrix Matrix::transpose() const
{
  Matrix t(m_n);
  for (std::size_t r = 0; r < m_n; ++r)
    for (std::size_t c = 0; c < m_n; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_symmetric() const
{
  return *this == transpose();
}

bool Matrix::is_zero() const
{
  for (const auto& x : m_a)
    if (!x.is_zero())
      return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
  require_same_dim(o.m_n, m_n, "matrix add");
  for (std::size_t i = 0; i < m_a.size(); ++i)
    m_a[i] += o.m_a[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
  require_same_dim(o.m_n, m_n, "matrix subtract");
  for (std::size_t i = 0; i < m_a.size(); ++i)
    m_a[i] -= o.m_a[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
  for (auto& x : m_a)
    x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
  require_same_dim(b.m_n, a.m_n, "matrix product");
  const std::size_t n = a.m_n;
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& ark = a(r, k);
      if (ark.is_zero())
        continue;
      for (std::size_t c = 0; c < n; ++c)
        out(r, c).add_product(ark, b(k, c));
    }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m)
{
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      return std::nullopt;
    if (pivot != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    const Scalar scale = Scalar(1) / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero())
        continue;
      const Scalar factor = -a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c).add_product(factor, a(col, c));
        inv(r, c).add_product(factor, inv(col, c));
      }
    }
  }
  return inv;
}

Matrix random_matrix(std::size_t n, RationalSampler& sampler)
{
  Matrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = sampler.next();
  return m;
}

Matrix random_symmetric(std::size_t n, RationalSampler& sampler)
{
  Matrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      m(r, c) = m(c, r) = sampler.next();
  return m;
}

Matrix MatrixRealization::element(const Vector& coords) const
{
  require_same_dim(coords.dim(), dim(), "coordinates");
  Matrix m(n);
  for (std::size_t k = 0; k < dim(); ++k)
    if (!coords[k].is_zero())
      m += coords[k] * basis[k];
  return m;
}

Vector MatrixRealization::coordinates(const Matrix& m) const
{
  require_same_dim(m.size(), n, "matrix");
  Vector v(dim());
  for (std::size_t k = 0; k < dim(); ++k)
    v[k] = m(pivot[k].first, pivot[k].second) / pivot_sign[k];
  if (element(v) != m)
    throw Error("matrix is not in the span of the realization basis");
  return v;
}

} // namespace opalg::catalog
