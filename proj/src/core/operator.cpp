#include "opalg/core/operator.hpp"

#include "opalg/core/errors.hpp"

namespace opalg {

Operator::Operator(std::size_t dim) : m_dim(dim), m_entries(dim * dim) {}

Operator::Operator(std::size_t dim, std::vector<Scalar> entries)
  : m_dim(dim), m_entries(std::move(entries))
{
  require_same_dim(m_entries.size(), dim * dim, "operator entries");
}

Operator Operator::identity(std::size_t dim)
{
  return scalar(dim, Scalar(1));
}

Operator Operator::scalar(std::size_t dim, const Scalar& c)
{
  Operator op(dim);
  for (std::size_t i = 0; i < dim; ++i)
    op.m_entries[i * dim + i] = c;
  return op;
}

Operator Operator::diagonal(std::span<const Scalar> diag)
{
  Operator op(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    op.m_entries[i * diag.size() + i] = diag[i];
  return op;
}

Operator Operator::from_images(std::size_t dim,
                               const std::function<Vector(const Vector&)>& image)
{
  Operator op(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const Vector col = image(Vector::basis(dim, c));
    require_same_dim(col.dim(), dim, "operator image");
    for (std::size_t r = 0; r < dim; ++r)
      op.m_entries[r * dim + c] = col[r];
  }
  return op;
}

Vector Operator::apply(const Vector& x) const
{
  require_same_dim(x.dim(), m_dim, "operator argument");
  Vector y(m_dim);
  for (std::size_t c = 0; c < m_dim; ++c) {
    if (x[c].is_zero())
      continue;
    for (std::size_t r = 0; r < m_dim; ++r)
      y[r].add_product(m_entries[r * m_dim + c], x[c]);
  }
  return y;
}

Vector Operator::column(std::size_t c) const
{
  Vector v(m_dim);
  for (std::size_t r = 0; r < m_dim; ++r)
    v[r] = m_entries[r * m_dim + c];
  return v;
}

bool Operator::is_zero() const
{
  for (const auto& e : m_entries)
    if (!e.is_zero())
      return false;
  return true;
}

Operator& Operator::operator+=(const Operator& o)
{
  require_same_dim(o.m_dim, m_dim, "operator add");
  for (std::size_t i = 0; i < m_entries.size(); ++i)
    m_entries[i] += o.m_entries[i];
  return *this;
}

Operator& Operator::operator-=(const Operator& o)
{
  require_same_dim(o.m_dim, m_dim, "operator subtract");
  for (std::size_t i = 0; i < m_entries.size(); ++i)
    m_entries[i] -= o.m_entries[i];
  return *this;
}

Operator& Operator::operator*=(const Scalar& s)
{
  for (auto& e : m_entries)
    e *= s;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b)
{
  require_same_dim(b.m_dim, a.m_dim, "operator composition");
  const std::size_t n = a.m_dim;
  Operator out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& ark = a.m_entries[r * n + k];
      if (ark.is_zero())
        continue;
      for (std::size_t c = 0; c < n; ++c)
        out.m_entries[r * n + c].add_product(ark, b.m_entries[k * n + c]);
    }
  return out;
}

Operator op_polynomial(std::span<const Scalar> f, const Operator& R)
{
  // Horner: f(R) = f0 + R(f1 + R(f2 + ...))
  Operator acc(R.dim());
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = R * acc;
    acc += Operator::scalar(R.dim(), f[k]);
  }
  return acc;
}

Polynomial poly_multiply(std::span<const Scalar> f, std::span<const Scalar> g)
{
  if (f.empty() || g.empty())
    return {};
  Polynomial out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j].add_product(f[i], g[j]);
  return out;
}

} // namespace opalg
