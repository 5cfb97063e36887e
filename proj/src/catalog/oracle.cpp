#include "opalg/catalog/oracle.hpp"

#include <sstream>

#include "opalg/core/errors.hpp"

namespace opalg::catalog::oracle {

WordPoly WordPoly::letter(char c)
{
  WordPoly p;
  p.m_terms.emplace(std::string(1, c), Scalar(1));
  return p;
}

void WordPoly::add(const std::string& word, const Scalar& c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = m_terms.emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      m_terms.erase(it);
  }
}

WordPoly& WordPoly::operator+=(const WordPoly& o)
{
  for (const auto& [w, c] : o.m_terms)
    add(w, c);
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o)
{
  for (const auto& [w, c] : o.m_terms)
    add(w, -c);
  return *this;
}

WordPoly& WordPoly::operator*=(const Scalar& s)
{
  if (s.is_zero()) {
    m_terms.clear();
    return *this;
  }
  for (auto& [w, c] : m_terms)
    c *= s;
  return *this;
}

WordPoly operator*(const WordPoly& a, const WordPoly& b)
{
  WordPoly out;
  for (const auto& [wa, ca] : a.m_terms)
    for (const auto& [wb, cb] : b.m_terms)
      out.add(wa + wb, ca * cb);
  return out;
}

std::string WordPoly::str() const
{
  if (m_terms.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : m_terms) {
    const bool negative = c.sign() < 0;
    const Scalar mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (mag != Scalar(1))
      os << mag << '*';
    os << w;
    first = false;
  }
  return os.str();
}

WordPoly jordan(const WordPoly& a, const WordPoly& b, const WordPoly& c)
{
  return a * b * c + c * b * a;
}

std::vector<char> jts_letters(JtsVariant variant)
{
  if (variant == JtsVariant::middle)
    return {'x', 'a', 'z', 'b', 'y'};
  return {'a', 'b', 'x', 'y', 'z'};
}

WordPoly jts_residual(JtsVariant variant)
{
  const WordPoly a = WordPoly::letter('a'), b = WordPoly::letter('b'), x = WordPoly::letter('x'),
                 y = WordPoly::letter('y'), z = WordPoly::letter('z');
  if (variant == JtsVariant::middle)
    return jordan(x, jordan(a, z, b), y) - jordan(jordan(x, a, y), b, z) -
           jordan(jordan(y, a, z), b, x) + jordan(jordan(x, b, y), a, z);
  return jordan(a, b, jordan(x, y, z)) - jordan(jordan(a, b, x), y, z) + jordan(x, jordan(b, a, y), z) -
         jordan(x, y, jordan(a, b, z));
}

bool associative_triple_satisfies(JtsVariant variant)
{
  return jts_residual(variant).is_zero();
}

namespace {

WordPoly multiply_by_q(const WordPoly& w, bool right)
{
  const WordPoly q = WordPoly::letter('q');
  return right ? w * q : q * w;
}

} // namespace

WordPoly derived_triple_words(bool right, bool reduced)
{
  const WordPoly x = WordPoly::letter('x'), y = WordPoly::letter('y'), z = WordPoly::letter('z');
  const auto R = [&](const WordPoly& w) { return multiply_by_q(w, right); };
  if (reduced)
    return jordan(R(x), R(y), z) + jordan(x, R(y), R(z)) - R(jordan(x, R(y), z));
  return jordan(x, R(y), R(z)) + jordan(R(x), y, R(z)) + jordan(R(x), R(y), z) - R(jordan(R(x), y, z)) -
         R(jordan(x, R(y), z)) - R(jordan(x, y, R(z))) + R(R(jordan(x, y, z)));
}

WordPoly triple_myb_residual_words(bool right)
{
  const WordPoly x = WordPoly::letter('x'), y = WordPoly::letter('y'), z = WordPoly::letter('z');
  const auto R = [&](const WordPoly& w) { return multiply_by_q(w, right); };
  return R(jordan(R(x), y, z)) + R(jordan(x, y, R(z))) - jordan(R(x), y, R(z)) - R(R(jordan(x, y, z)));
}

Matrix evaluate(const WordPoly& p, const std::map<char, Matrix>& values, std::size_t n)
{
  Matrix sum(n);
  for (const auto& [word, coeff] : p.terms()) {
    Matrix prod = Matrix::identity(n);
    for (char c : word) {
      const auto it = values.find(c);
      if (it == values.end())
        throw Error(std::string("no value for letter '") + c + "'");
      prod = prod * it->second;
    }
    sum += coeff * prod;
  }
  return sum;
}

BilinearStructure bilinear_from_words(const MatrixRealization& real, const WordPoly& p, const Matrix& Q)
{
  return BilinearStructure::tabulate(real.dim(), [&](const BilinearStructure::Index& t) {
    return real.coordinates(evaluate(p, {{'x', real.basis[t[0]]}, {'y', real.basis[t[1]]}, {'q', Q}}, real.n));
  });
}

TrilinearStructure trilinear_from_words(const MatrixRealization& real, const WordPoly& p, const Matrix& Q)
{
  return TrilinearStructure::tabulate(real.dim(), [&](const TrilinearStructure::Index& t) {
    return real.coordinates(evaluate(
        p, {{'x', real.basis[t[0]]}, {'y', real.basis[t[1]]}, {'z', real.basis[t[2]]}, {'q', Q}}, real.n));
  });
}

BilinearStructure commutator(const MatrixRealization& real)
{
  return BilinearStructure::tabulate(real.dim(), [&](const BilinearStructure::Index& t) {
    const Matrix& X = real.basis[t[0]];
    const Matrix& Y = real.basis[t[1]];
    return real.coordinates(X * Y - Y * X);
  });
}

BilinearStructure xqy_minus_yqx(const MatrixRealization& real, const Matrix& Q)
{
  return BilinearStructure::tabulate(real.dim(), [&](const BilinearStructure::Index& t) {
    const Matrix& X = real.basis[t[0]];
    const Matrix& Y = real.basis[t[1]];
    return real.coordinates(X * Q * Y - Y * Q * X);
  });
}

std::optional<Witness> jts_first_failure(const MatrixRealization& real, JtsVariant variant)
{
  const WordPoly residual = jts_residual(variant);
  const std::vector<char> letters = jts_letters(variant);
  const std::size_t d = real.dim();
  std::vector<std::size_t> tuple(5, 0);
  for (;;) {
    std::map<char, Matrix> values;
    for (std::size_t s = 0; s < 5; ++s)
      values.emplace(letters[s], real.basis[tuple[s]]);
    const Matrix m = evaluate(residual, values, real.n);
    if (!m.is_zero())
      return Witness{tuple, real.coordinates(m)};
    // Lexicographic successor.
    std::size_t s = 5;
    while (s > 0 && ++tuple[s - 1] == d)
      tuple[--s] = 0;
    if (s == 0)
      return std::nullopt;
  }
}

BunchCoefficients conjugation_bunch(const MatrixRealization& real, const Matrix& Q)
{
  const std::size_t n = real.n;
  const Matrix one = Matrix::identity(n);

  struct Sample
  {
    Scalar t;
    Matrix p_inv;
  };
  std::vector<Sample> samples;
  for (long num : {1L, 2L, -1L, 3L, -2L, 5L, -3L, 7L}) {
    const Scalar t(num);
    const Matrix P = one + t * Q;
    if (auto inv = inverse(P))
      samples.push_back({t, *inv});
    if (samples.size() == 3)
      break;
  }
  if (samples.size() < 3)
    throw Error("could not find three invertible samples of 1 + tQ");

  const auto Rt = [&](const Scalar& t, const Matrix& X) { return X + t * (Q * X + X * Q) + (t * t) * (Q * X * Q); };

  // f_t(X,Y) = R_t^{-1}[R_t X, R_t Y] - [X,Y], with R_t^{-1} M = P^{-1} M P^{-1}.
  const auto f = [&](const Sample& s, const Matrix& X, const Matrix& Y) {
    const Matrix P = one + s.t * Q;
    const Matrix A = Rt(s.t, X), B = Rt(s.t, Y);
    if (A != P * X * P)
      throw Error("R_t is not conjugation by 1 + tQ");
    return s.p_inv * (A * B - B * A) * s.p_inv - (X * Y - Y * X);
  };

  const Sample &s1 = samples[0], &s2 = samples[1], &s3 = samples[2];
  BunchCoefficients out{BilinearStructure(real.dim()), BilinearStructure(real.dim())};
  std::map<BilinearStructure::Index, Vector> first, second;
  for (std::size_t i = 0; i < real.dim(); ++i)
    for (std::size_t j = 0; j < real.dim(); ++j) {
      const Matrix &X = real.basis[i], &Y = real.basis[j];
      // f_t = t b1 + t^2 b2  =>  f_t / t = b1 + t b2
      const Matrix g1 = (Scalar(1) / s1.t) * f(s1, X, Y);
      const Matrix g2 = (Scalar(1) / s2.t) * f(s2, X, Y);
      const Matrix b2 = (Scalar(1) / (s2.t - s1.t)) * (g2 - g1);
      const Matrix b1 = g1 - s1.t * b2;
      const Matrix g3 = (Scalar(1) / s3.t) * f(s3, X, Y);
      if (g3 != b1 + s3.t * b2)
        throw Error("bracket family is not quadratic in t");
      first.emplace(BilinearStructure::Index{i, j}, real.coordinates(b1));
      second.emplace(BilinearStructure::Index{i, j}, real.coordinates(b2));
    }
  out.first = BilinearStructure(real.dim(), first);
  out.second = BilinearStructure(real.dim(), second);
  return out;
}

} // namespace opalg::catalog::oracle
