#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "opalg/core/errors.hpp"
#include "opalg/core/vector.hpp"

namespace opalg {

/**
 * Structure-constant tensor of a multilinear product V^Arity -> V.
 *
 * The product of basis vectors (e_i1, ..., e_iArity) is stored sparsely,
 * keyed by the flattened index tuple; an absent key is the zero vector.
 * No algebraic property (antisymmetry, Jacobi, ...) is implied by the type:
 * those are checked predicates.
 */
template <std::size_t Arity>
class MultilinearStructure
{
public:
  using Index = std::array<std::size_t, Arity>;

  MultilinearStructure() = default;

  /// Zero product.
  explicit MultilinearStructure(std::size_t dim) : m_dim(dim), m_table(flat_size(dim)) {}

  MultilinearStructure(std::size_t dim, const std::map<Index, Vector>& products)
    : MultilinearStructure(dim)
  {
    for (const auto& [idx, v] : products)
      set(idx, v);
  }

  /// Builds the tensor from the value of the product on each basis tuple.
  static MultilinearStructure tabulate(std::size_t dim,
                                       const std::function<Vector(const Index&)>& product)
  {
    MultilinearStructure s(dim);
    Index idx{};
    const std::size_t total = flat_size(dim);
    for (std::size_t flat = 0; flat < total; ++flat) {
      unflatten(dim, flat, idx);
      s.set(idx, product(idx));
    }
    return s;
  }

  std::size_t dim() const { return m_dim; }

  /// Product of basis vectors as a dense coordinate vector.
  Vector product(const Index& idx) const
  {
    Vector out(m_dim);
    for (const auto& t : m_table[flatten(idx)])
      out[t.index] = t.coeff;
    return out;
  }

  bool product_is_zero(const Index& idx) const { return m_table[flatten(idx)].empty(); }

  template <typename... Vs>
    requires(sizeof...(Vs) == Arity)
  Vector operator()(const Vs&... args) const
  {
    return apply({&args...});
  }

  /// result_l = sum over index tuples of x1_i1 * ... * xA_iA * c(i1..iA)_l
  Vector apply(const std::array<const Vector*, Arity>& args) const
  {
    for (const Vector* a : args)
      require_same_dim(a->dim(), m_dim, "multilinear argument");
    // Nonzero coordinates of each argument.
    std::array<std::vector<std::size_t>, Arity> support;
    for (std::size_t a = 0; a < Arity; ++a) {
      for (std::size_t i = 0; i < m_dim; ++i)
        if (!(*args[a])[i].is_zero())
          support[a].push_back(i);
      if (support[a].empty())
        return Vector(m_dim);
    }
    Vector out(m_dim);
    Index idx{};
    Scalar coeff;
    accumulate(args, support, 0, 0, Scalar(1), idx, out, coeff);
    return out;
  }

  /// Copy with the product of one basis tuple replaced.
  MultilinearStructure with_product(const Index& idx, const Vector& v) const
  {
    MultilinearStructure copy = *this;
    copy.set(idx, v);
    return copy;
  }

  /// Nonzero products in lexicographic index order.
  std::map<Index, Vector> products() const
  {
    std::map<Index, Vector> out;
    Index idx{};
    for (std::size_t flat = 0; flat < m_table.size(); ++flat) {
      if (m_table[flat].empty())
        continue;
      unflatten(m_dim, flat, idx);
      out.emplace(idx, product(idx));
    }
    return out;
  }

  std::size_t nonzero_count() const
  {
    std::size_t n = 0;
    for (const auto& col : m_table)
      n += col.size();
    return n;
  }

  bool is_zero() const { return nonzero_count() == 0; }

  MultilinearStructure& operator+=(const MultilinearStructure& o) { return combine(o, Scalar(1)); }
  MultilinearStructure& operator-=(const MultilinearStructure& o) { return combine(o, Scalar(-1)); }
  MultilinearStructure& operator*=(const Scalar& s)
  {
    if (s.is_zero()) {
      for (auto& col : m_table)
        col.clear();
      return *this;
    }
    for (auto& col : m_table)
      for (auto& t : col)
        t.coeff *= s;
    return *this;
  }

  friend MultilinearStructure operator+(MultilinearStructure a, const MultilinearStructure& b) { return a += b; }
  friend MultilinearStructure operator-(MultilinearStructure a, const MultilinearStructure& b) { return a -= b; }
  friend MultilinearStructure operator*(const Scalar& s, MultilinearStructure a) { return a *= s; }

  friend bool operator==(const MultilinearStructure& a, const MultilinearStructure& b)
  {
    return a.m_dim == b.m_dim && a.m_table == b.m_table;
  }

private:
  struct Term
  {
    std::uint32_t index;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };
  using Column = std::vector<Term>;

  static std::size_t flat_size(std::size_t dim)
  {
    std::size_t n = 1;
    for (std::size_t a = 0; a < Arity; ++a)
      n *= dim;
    return n;
  }

  std::size_t flatten(const Index& idx) const
  {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < Arity; ++a) {
      if (idx[a] >= m_dim)
        throw DimensionMismatch("basis index out of range");
      flat = flat * m_dim + idx[a];
    }
    return flat;
  }

  static void unflatten(std::size_t dim, std::size_t flat, Index& idx)
  {
    for (std::size_t a = Arity; a-- > 0;) {
      idx[a] = flat % dim;
      flat /= dim;
    }
  }

  void set(const Index& idx, const Vector& v)
  {
    require_same_dim(v.dim(), m_dim, "structure product");
    Column& col = m_table[flatten(idx)];
    col.clear();
    for (std::size_t k = 0; k < m_dim; ++k)
      if (!v[k].is_zero())
        col.push_back({static_cast<std::uint32_t>(k), v[k]});
  }

  MultilinearStructure& combine(const MultilinearStructure& o, const Scalar& factor)
  {
    require_same_dim(o.m_dim, m_dim, "structure combination");
    Index idx{};
    for (std::size_t flat = 0; flat < m_table.size(); ++flat) {
      if (o.m_table[flat].empty())
        continue;
      unflatten(m_dim, flat, idx);
      Vector v = product(idx);
      for (const auto& t : o.m_table[flat])
        v[t.index].add_product(factor, t.coeff);
      set(idx, v);
    }
    return *this;
  }

  void accumulate(const std::array<const Vector*, Arity>& args,
                  const std::array<std::vector<std::size_t>, Arity>& support, std::size_t slot,
                  std::size_t flat, const Scalar& weight, Index& idx, Vector& out,
                  Scalar& scratch) const
  {
    if (slot == Arity) {
      for (const auto& t : m_table[flat]) {
        scratch = weight;
        scratch *= t.coeff;
        out[t.index] += scratch;
      }
      return;
    }
    for (std::size_t i : support[slot]) {
      idx[slot] = i;
      accumulate(args, support, slot + 1, flat * m_dim + i, weight * (*args[slot])[i], idx, out,
                 scratch);
    }
  }

  std::size_t m_dim = 0;
  std::vector<Column> m_table;
};

using BilinearStructure = MultilinearStructure<2>;
using TrilinearStructure = MultilinearStructure<3>;

inline Vector apply_bilinear(const BilinearStructure& b, const Vector& x, const Vector& y)
{
  return b(x, y);
}

inline Vector apply_trilinear(const TrilinearStructure& t, const Vector& x, const Vector& y,
                              const Vector& z)
{
  return t(x, y, z);
}

} // namespace opalg
