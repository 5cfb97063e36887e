#pragma once

#include <cstdint>
#include <random>

#include "opalg/core/operator.hpp"
#include "opalg/core/scalar.hpp"

namespace opalg {

/// Seeded source of small rationals p/q with |p| <= bound and 1 <= q <= bound.
class RationalSampler
{
public:
  explicit RationalSampler(std::uint64_t seed, int bound = 3);

  Scalar next();
  /// Like next() but never zero.
  Scalar next_nonzero();
  Operator op(std::size_t dim);
  /// Polynomial of exactly the given degree (nonzero leading coefficient).
  Polynomial polynomial(std::size_t degree);
  int bound() const { return m_bound; }

  std::mt19937_64& engine() { return m_rng; }

private:
  std::mt19937_64 m_rng;
  int m_bound;
};

} // namespace opalg
