#pragma once

#include <initializer_list>
#include <vector>

#include "doctest.h"
#include "opalg/catalog/catalog.hpp"
#include "opalg/catalog/matrix.hpp"
#include "opalg/core/check.hpp"

namespace testing {

inline opalg::catalog::Matrix diag(std::initializer_list<long> d)
{
  std::vector<opalg::Scalar> v;
  for (long x : d)
    v.push_back(opalg::Scalar(x));
  return opalg::catalog::Matrix::diagonal(v);
}

inline opalg::catalog::Matrix rows(std::size_t n, std::initializer_list<long> entries)
{
  std::vector<opalg::Scalar> v;
  for (long x : entries)
    v.push_back(opalg::Scalar(x));
  return opalg::catalog::Matrix(n, v);
}

inline std::vector<std::size_t> tuple_of(const opalg::CheckReport& r)
{
  REQUIRE(r.witness.has_value());
  return r.witness->tuple;
}

/// Index of E_ij in the row-major gl(n) basis.
inline std::size_t E(std::size_t n, std::size_t i, std::size_t j)
{
  return (i - 1) * n + (j - 1);
}

} // namespace testing
