#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace opalg {

/// Exact rational number in canonical form (reduced, positive denominator).
class Scalar
{
public:
  Scalar() = default;
  Scalar(long value) : m_value(value) {}
  Scalar(long numerator, long denominator);
  explicit Scalar(const mpq_class& value);

  /// Parses "p" or "p/q". Non-canonical input ("2/4", "1/-2", "+3", "0/5")
  /// is rejected when `require_canonical` is set.
  static Scalar parse(std::string_view text, bool require_canonical = true);

  std::string str() const;

  bool is_zero() const { return sgn(m_value) == 0; }
  int sign() const { return sgn(m_value); }

  const mpq_class& value() const { return m_value; }

  Scalar operator-() const { return Scalar(mpq_class(-m_value)); }
  Scalar& operator+=(const Scalar& o) { m_value += o.m_value; return *this; }
  Scalar& operator-=(const Scalar& o) { m_value -= o.m_value; return *this; }
  Scalar& operator*=(const Scalar& o) { m_value *= o.m_value; return *this; }
  Scalar& operator/=(const Scalar& o);

  /// this += a*b without temporaries.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.m_value == b.m_value; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
  {
    const int c = cmp(a.m_value, b.m_value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class m_value;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace opalg
