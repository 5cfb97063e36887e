#include "doctest.h"

#include "opalg/catalog/catalog.hpp"
#include "opalg/catalog/oracle.hpp"
#include "opalg/core/errors.hpp"
#include "opalg/core/random.hpp"
#include "support.hpp"

using namespace opalg;
namespace oracle = catalog::oracle;
using testing::E;

TEST_SUITE("so(n)")
{
  TEST_CASE("so(3) uses the cross-product basis")
  {
    const auto e = catalog::so_n(3);
    REQUIRE(e.dim == 3);
    const BilinearStructure& b = *e.bracket;
    CHECK(b.product({0, 1}) == Vector::basis(3, 2));
    CHECK(b.product({1, 2}) == Vector::basis(3, 0));
    CHECK(b.product({2, 0}) == Vector::basis(3, 1));
    CHECK(b.product({1, 0}) == -Vector::basis(3, 2));
  }

  TEST_CASE("brackets agree with matrix commutators")
  {
    for (std::size_t n : {2u, 3u, 4u, 5u}) {
      const auto e = catalog::so_n(n);
      CHECK(e.dim == n * (n - 1) / 2);
      CHECK(*e.bracket == oracle::commutator(*e.realization));
      CHECK(e.basis_names.size() == e.dim);
    }
    CHECK_THROWS_AS(catalog::so_n(1), Error);
  }
}

TEST_SUITE("gl(n)")
{
  TEST_CASE("bracket and triple agree with matrix products")
  {
    for (std::size_t n : {1u, 2u, 3u}) {
      const auto e = catalog::gl_assoc(n);
      CHECK(e.dim == n * n);
      CHECK(*e.bracket == oracle::commutator(*e.realization));
      const auto x = oracle::WordPoly::letter('x'), y = oracle::WordPoly::letter('y'),
                 z = oracle::WordPoly::letter('z');
      CHECK(e.triple() == oracle::trilinear_from_words(*e.realization, oracle::jordan(x, y, z),
                                                       catalog::Matrix::identity(n)));
    }
  }

  TEST_CASE("E12 E21 + E21 E12 products")
  {
    const auto e = catalog::gl_assoc(2);
    // <E12, E21, E12> = E12 E21 E12 + E12 E21 E12 = 2 E12
    CHECK(e.triple().product({E(2, 1, 2), E(2, 2, 1), E(2, 1, 2)}) == Scalar(2) * Vector::basis(4, E(2, 1, 2)));
    CHECK(e.bracket->product({E(2, 1, 2), E(2, 2, 1)}) ==
          Vector::basis(4, E(2, 1, 1)) - Vector::basis(4, E(2, 2, 2)));
  }
}

TEST_SUITE("multiplication operators")
{
  TEST_CASE("gl(2) operators act by matrix products")
  {
    const auto e = catalog::gl_assoc(2);
    const catalog::Matrix Q = testing::rows(2, {1, 2, 3, 4});
    const auto ops = catalog::mult_operators(e, Q);
    const auto& real = *e.realization;
    for (std::size_t k = 0; k < 4; ++k) {
      const catalog::Matrix& X = real.basis[k];
      CHECK(ops.at("right").column(k) == real.coordinates(X * Q));
      CHECK(ops.at("left").column(k) == real.coordinates(Q * X));
      CHECK(ops.at("rho").column(k) == real.coordinates(Q * X * Q));
      CHECK(ops.at("R").column(k) == real.coordinates(Q * X + X * Q));
      CHECK(ops.at("xi").column(k) == real.coordinates(Q * X - X * Q));
    }
    CHECK(ops.at("R0") == Scalar(1, 2) * ops.at("R"));
  }

  TEST_CASE("so(n) requires a symmetric Q")
  {
    const auto e = catalog::so_n(3);
    CHECK_THROWS_AS(catalog::mult_operators(e, testing::rows(3, {1, 1, 0, 0, 1, 0, 0, 0, 1})), Error);
    const auto ops = catalog::mult_operators(e, testing::diag({1, 2, 3}));
    CHECK(ops.size() == 2);
    CHECK(ops.count("R") == 1);
    CHECK(ops.count("rho") == 1);
    CHECK_THROWS_AS(catalog::mult_operators(e, testing::diag({1, 2})), DimensionMismatch);
  }
}

TEST_SUITE("so(3) form candidates")
{
  TEST_CASE("operators for X0 = L3")
  {
    const auto e = catalog::lookup("example1-so3?x0=0,0,1&form=diag:1,1,1");
    CHECK(e.op("Ra").column(2) == Vector::basis(3, 2));
    CHECK(e.op("Ra").column(0).is_zero());
    CHECK(e.op("Rb").column(0) == Vector::basis(3, 1));
    CHECK(e.op("Rb").column(2).is_zero());
  }

  TEST_CASE("triples for the identity form")
  {
    const auto e = catalog::lookup("example1-so3");
    // <X,Y>Z + <Y,Z>X at (L1, L1, L2) = L2
    CHECK(e.triple("two-term").product({0, 0, 1}) == Vector::basis(3, 1));
    // the standard triple also subtracts <X,Z>Y: (L1, L2, L1) gives -L2
    CHECK(e.triple("standard").product({0, 1, 0}) == -Vector::basis(3, 1));
    CHECK_THROWS_AS(e.triple("other"), Error);
  }

  TEST_CASE("form validation")
  {
    CHECK_THROWS_AS(catalog::lookup("example1-so3?form=diag:1,0,1"), Error);
    CHECK_THROWS_AS(catalog::lookup("example1-so3?form=rows:1,1,0;0,1,0;0,0,1"), Error);
    CHECK_THROWS_AS(catalog::lookup("example1-so3?x0=1,2"), Error);
  }
}

TEST_SUITE("Q specs")
{
  TEST_CASE("diag and rows")
  {
    CHECK(catalog::parse_q("diag:1,2", 2) == testing::diag({1, 2}));
    CHECK(catalog::parse_q("rows:1,2;3,4", 2) == testing::rows(2, {1, 2, 3, 4}));
    CHECK(catalog::parse_q("diag:1/2,-3", 2)(0, 0) == Scalar(1, 2));
  }

  TEST_CASE("seeded specs are deterministic")
  {
    CHECK(catalog::parse_q("random:5", 3) == catalog::parse_q("random:5", 3));
    CHECK(catalog::parse_q("random:5", 3) != catalog::parse_q("random:6", 3));
    CHECK(catalog::parse_q("symmetric:7", 4).is_symmetric());
  }

  TEST_CASE("malformed specs")
  {
    for (const char* s : {"diag:1", "rows:1,2;3", "rows:1;2", "pentagonal:3", "diag", "random:x", "diag:1,a"})
      CHECK_THROWS_AS(catalog::parse_q(s, 2), Error);
  }
}

TEST_SUITE("lookup")
{
  TEST_CASE("every listed name resolves")
  {
    for (std::string name : catalog::catalog_names()) {
      const auto pos = name.find("=N");
      if (pos != std::string::npos)
        name.replace(pos, 2, "=3");
      CHECK_NOTHROW(catalog::lookup(name));
    }
  }

  TEST_CASE("sizes and parameters")
  {
    CHECK(catalog::lookup("so?n=4").dim == 6);
    CHECK(catalog::lookup("so5").dim == 10);
    CHECK(catalog::lookup("gl3").dim == 9);
    const auto e = catalog::lookup("example2-gl2?q=diag:1,2");
    CHECK(e.name == "example2-gl2?q=diag:1,2");
    CHECK(*e.q == testing::diag({1, 2}));
    CHECK(catalog::lookup("example3-gl2").name == "example3-gl2");
    CHECK(catalog::lookup("example4-so4?q=symmetric:3").q->is_symmetric());
    CHECK(catalog::lookup("example1-so3?triple=standard").primary_triple == "standard");
  }

  TEST_CASE("unknown names and malformed parameters")
  {
    CHECK_THROWS_AS(catalog::lookup("sl2"), Error);
    CHECK_THROWS_AS(catalog::lookup("so?n"), Error);
    CHECK_THROWS_AS(catalog::lookup("example4-so3?q=rows:1,2,0;0,1,0;0,0,1"), Error);
    CHECK_THROWS_AS(catalog::lookup("gl2").op("right"), Error);
  }
}
