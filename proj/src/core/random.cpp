#include "opalg/core/random.hpp"

#include "opalg/core/errors.hpp"

namespace opalg {

RationalSampler::RationalSampler(std::uint64_t seed, int bound) : m_rng(seed), m_bound(bound)
{
  if (bound < 1)
    throw Error("entry bound must be at least 1");
}

Scalar RationalSampler::next()
{
  std::uniform_int_distribution<long> num(-m_bound, m_bound);
  std::uniform_int_distribution<long> den(1, m_bound);
  const long p = num(m_rng);
  const long q = den(m_rng);
  return Scalar(p, q);
}

Scalar RationalSampler::next_nonzero()
{
  for (;;) {
    Scalar s = next();
    if (!s.is_zero())
      return s;
  }
}

Operator RationalSampler::op(std::size_t dim)
{
  std::vector<Scalar> entries;
  entries.reserve(dim * dim);
  for (std::size_t i = 0; i < dim * dim; ++i)
    entries.push_back(next());
  return Operator(dim, std::move(entries));
}

Polynomial RationalSampler::polynomial(std::size_t degree)
{
  Polynomial f;
  for (std::size_t k = 0; k < degree; ++k)
    f.push_back(next());
  f.push_back(next_nonzero());
  return f;
}

} // namespace opalg
