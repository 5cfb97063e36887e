#include "opalg/core/scalar.hpp"

#include <cctype>
#include <ostream>

#include "opalg/core/errors.hpp"

namespace opalg {

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Scalar::Scalar(long numerator, long denominator)
{
  if (denominator == 0)
    throw ArithmeticError("zero denominator");
  m_value = mpq_class(numerator, denominator);
  m_value.canonicalize();
}

Scalar::Scalar(const mpq_class& value) : m_value(value)
{
  m_value.canonicalize();
}

Scalar Scalar::parse(std::string_view text, bool require_canonical)
{
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || (!require_canonical && body.front() == '+')))
    body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed scalar '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  if (text.front() == '-')
    n = -n;
  Scalar s(mpq_class(n, d));
  if (require_canonical && s.str() != text)
    throw ParseError("scalar '" + std::string(text) + "' is not in reduced form (expected '" +
                     s.str() + "')");
  return s;
}

std::string Scalar::str() const
{
  return m_value.get_str(10);
}

Scalar& Scalar::operator/=(const Scalar& o)
{
  if (o.is_zero())
    throw ArithmeticError("division by zero");
  m_value /= o.m_value;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
  if (a.is_zero() || b.is_zero())
    return;
  m_value += a.m_value * b.m_value;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
  return os << s.str();
}

} // namespace opalg
