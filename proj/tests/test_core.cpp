#include "doctest.h"

#include "opalg/catalog/catalog.hpp"
#include "opalg/catalog/oracle.hpp"
#include "opalg/core/check.hpp"
#include "opalg/core/errors.hpp"
#include "opalg/core/random.hpp"
#include "support.hpp"

using namespace opalg;
using testing::E;

TEST_SUITE("scalar")
{
  TEST_CASE("canonical parsing")
  {
    CHECK(Scalar::parse("3") == Scalar(3));
    CHECK(Scalar::parse("-3/2") == Scalar(-3, 2));
    CHECK(Scalar::parse("0") == Scalar(0));
    CHECK(Scalar(4, -6).str() == "-2/3");
    CHECK(Scalar(0, 5).str() == "0");

    for (const char* bad : {"2/4", "3/-2", "0/1", "1/1", "+1", "", "1/", "/2", "1.5", "1/0", " 1", "-0", "007"})
      CHECK_THROWS_AS(Scalar::parse(bad), ParseError);
  }

  TEST_CASE("non-canonical input accepted only on request")
  {
    CHECK(Scalar::parse("2/4", false) == Scalar(1, 2));
    CHECK_THROWS_AS(Scalar::parse("1/0", false), ParseError);
  }

  TEST_CASE("exact arithmetic")
  {
    const Scalar a(1, 3), b(-5, 7);
    CHECK(a + b == Scalar(-8, 21));
    CHECK(a * b == Scalar(-5, 21));
    CHECK(a / b == Scalar(-7, 15));
    CHECK(a - a == Scalar(0));
    CHECK_THROWS_AS(a / Scalar(0), ArithmeticError);
    CHECK_THROWS_AS(Scalar(1, 0), ArithmeticError);
  }

  TEST_CASE("parse of render round-trips")
  {
    RationalSampler s(99, 50);
    for (int i = 0; i < 500; ++i) {
      const Scalar x = s.next() * s.next() + s.next();
      CHECK(Scalar::parse(x.str()) == x);
    }
  }
}

TEST_SUITE("operator")
{
  TEST_CASE("polynomial of an operator")
  {
    RationalSampler s(5);
    const Operator R = s.op(4);
    CHECK(op_polynomial(Polynomial{Scalar(0), Scalar(1)}, R) == R);
    CHECK(op_polynomial(Polynomial{Scalar(1)}, R) == Operator::identity(4));
    CHECK(op_polynomial(Polynomial{}, R) == Operator(4));
  }

  TEST_CASE("f(R) g(R) = (fg)(R)")
  {
    RationalSampler s(17);
    for (int i = 0; i < 20; ++i) {
      const Operator R = s.op(3);
      const Polynomial f = s.polynomial(i % 4), g = s.polynomial((i + 1) % 4);
      CHECK(op_polynomial(poly_multiply(f, g), R) == op_polynomial(f, R) * op_polynomial(g, R));
    }
  }

  TEST_CASE("1 + R/2 for right multiplication on gl(2)")
  {
    const auto Q = testing::diag({1, 2});
    const auto e = catalog::example2(2, Q);
    const Operator f = op_polynomial(Polynomial{Scalar(1), Scalar(1, 2)}, e.op("right"));
    const auto& real = *e.realization;
    const catalog::Matrix half_q = catalog::Matrix::identity(2) + Scalar(1, 2) * Q;
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(f.column(k) == real.coordinates(real.basis[k] * half_q));
  }

  TEST_CASE("composition is associative")
  {
    RationalSampler s(3);
    const Operator a = s.op(3), b = s.op(3), c = s.op(3);
    CHECK((a * b) * c == a * (b * c));
    const Vector x{Scalar(1), Scalar(-2), Scalar(1, 3)};
    CHECK((a * b)(x) == a(b(x)));
  }

  TEST_CASE("dimension checks")
  {
    CHECK_THROWS_AS(Operator(2, {Scalar(1)}), DimensionMismatch);
    CHECK_THROWS_AS(Operator::identity(2) + Operator::identity(3), DimensionMismatch);
  }
}

TEST_SUITE("structures")
{
  TEST_CASE("so(3) cross product and gl(2) commutator evaluation")
  {
    const auto so3 = catalog::so_n(3);
    CHECK(apply_bilinear(*so3.bracket, Vector::basis(3, 0), Vector::basis(3, 1)) == Vector::basis(3, 2));
    CHECK(apply_bilinear(*so3.bracket, Vector(3), Vector::basis(3, 1)).is_zero());

    const auto gl2 = catalog::gl_assoc(2);
    const Vector got = apply_bilinear(*gl2.bracket, Vector::basis(4, E(2, 1, 2)), Vector::basis(4, E(2, 2, 1)));
    CHECK(got == Vector{Scalar(1), Scalar(0), Scalar(0), Scalar(-1)});
  }

  TEST_CASE("trilinear evaluation")
  {
    const auto gl2 = catalog::gl_assoc(2);
    const Vector e11 = Vector::basis(4, 0);
    CHECK(apply_trilinear(gl2.triple(), e11, e11, e11) == Scalar(2) * e11);
    CHECK(apply_trilinear(gl2.triple(), e11, Vector(4), e11).is_zero());

    const auto ex1 = catalog::lookup("example1-so3");
    const Vector e1 = Vector::basis(3, 0), e2 = Vector::basis(3, 1);
    CHECK(apply_trilinear(ex1.triple("two-term"), e1, e1, e2) == e2);
  }

  TEST_CASE("evaluation is exactly multilinear")
  {
    RationalSampler s(2024);
    const auto gl2 = catalog::gl_assoc(2);
    const auto rand_vec = [&] {
      Vector v(4);
      for (std::size_t i = 0; i < 4; ++i)
        v[i] = s.next();
      return v;
    };
    for (int i = 0; i < 25; ++i) {
      const Vector x = rand_vec(), x2 = rand_vec(), y = rand_vec(), z = rand_vec();
      const Scalar a = s.next(), b = s.next();
      const Vector mix = a * x + b * x2;
      CHECK(apply_bilinear(*gl2.bracket, mix, y) ==
            a * apply_bilinear(*gl2.bracket, x, y) + b * apply_bilinear(*gl2.bracket, x2, y));
      CHECK(apply_trilinear(gl2.triple(), y, mix, z) ==
            a * apply_trilinear(gl2.triple(), y, x, z) + b * apply_trilinear(gl2.triple(), y, x2, z));
    }
  }

  TEST_CASE("dimension mismatch")
  {
    const auto so3 = catalog::so_n(3);
    CHECK_THROWS_AS(apply_bilinear(*so3.bracket, Vector(2), Vector(3)), DimensionMismatch);
  }
}

TEST_SUITE("identity checks")
{
  TEST_CASE("antisymmetry")
  {
    CHECK(check_antisymmetry(*catalog::so_n(3).bracket).passed);
    CHECK(check_antisymmetry(*catalog::gl_assoc(3).bracket).passed);

    const BilinearStructure bad = BilinearStructure(3).with_product({0, 0}, Vector::basis(3, 1));
    const CheckReport r = check_antisymmetry(bad);
    CHECK_FALSE(r.passed);
    CHECK(testing::tuple_of(r) == std::vector<std::size_t>{0, 0});
    CHECK(r.tuples_evaluated == 1);
  }

  TEST_CASE("jacobi")
  {
    CHECK(check_jacobi(*catalog::gl_assoc(2).bracket).passed);

    // [e0,e1] = e0, [e1,e2] = e1, [e0,e2] = 0, antisymmetric completion.
    std::map<BilinearStructure::Index, Vector> c;
    c[{0, 1}] = Vector::basis(3, 0);
    c[{1, 0}] = -Vector::basis(3, 0);
    c[{1, 2}] = Vector::basis(3, 1);
    c[{2, 1}] = -Vector::basis(3, 1);
    const BilinearStructure b(3, c);
    CHECK(check_antisymmetry(b).passed);
    const CheckReport r = check_jacobi(b);
    CHECK_FALSE(r.passed);
    CHECK(testing::tuple_of(r) == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.witness->residual == -Vector::basis(3, 0));
  }

  TEST_CASE("zero triple satisfies both JTS variants")
  {
    const TrilinearStructure zero(4);
    CHECK(check_jts_identity(zero, JtsVariant::middle).passed);
    CHECK(check_jts_identity(zero, JtsVariant::jacobson).passed);
  }

  TEST_CASE("XYZ+ZYX on gl(2): variants against the word and matrix oracles")
  {
    const auto gl2 = catalog::gl_assoc(2);
    const CheckReport jac = check_jts_identity(gl2.triple(), JtsVariant::jacobson);
    CHECK(jac.passed);
    CHECK(jac.tuples_evaluated == 1024);
    CHECK(catalog::oracle::associative_triple_satisfies(JtsVariant::jacobson));

    const CheckReport mid = check_jts_identity(gl2.triple(), JtsVariant::middle);
    CHECK_FALSE(mid.passed);
    CHECK_FALSE(catalog::oracle::associative_triple_satisfies(JtsVariant::middle));
    const auto oracle_witness = catalog::oracle::jts_first_failure(*gl2.realization, JtsVariant::middle);
    REQUIRE(oracle_witness.has_value());
    CHECK(*mid.witness == *oracle_witness);
    // Frozen after the oracle run.
    CHECK(mid.witness->tuple == std::vector<std::size_t>{0, 0, 0, 0, 1});
    CHECK(mid.witness->residual == Vector{Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  }

  TEST_CASE("reports do not depend on the number of threads")
  {
    RationalSampler s(8);
    const auto gl2 = catalog::gl_assoc(2);
    // Perturb one entry deep in the tensor so that many tuples pass first.
    const TrilinearStructure t = gl2.triple().with_product({3, 2, 1}, Vector{s.next_nonzero(), 0, 0, 0});
    const CheckReport one = check_jts_identity(t, JtsVariant::jacobson, {.force = false, .threads = 1});
    for (unsigned threads : {2u, 3u, 8u, 0u}) {
      const CheckReport many = check_jts_identity(t, JtsVariant::jacobson, {.force = false, .threads = threads});
      CHECK(many == one);
    }
    CHECK(check_jts_identity(t, JtsVariant::jacobson) == one);
    CHECK_FALSE(one.passed);
  }

  TEST_CASE("witness is the lexicographically smallest failing tuple")
  {
    const CheckReport r = check_identity("probe", 5, 3, [](std::span<const std::size_t> t) {
      Vector v(1);
      if ((t[0] == 3 && t[1] == 1) || (t[0] == 4 && t[2] == 0))
        v[0] = Scalar(t[2] + 1);
      return v;
    });
    CHECK(r.witness->tuple == std::vector<std::size_t>{3, 1, 0});
    CHECK(r.tuples_evaluated == 3 * 25 + 5 + 1);
  }

  TEST_CASE("dimension guard")
  {
    const TrilinearStructure t9(9);
    CHECK_THROWS_AS(check_jts_identity(t9, JtsVariant::jacobson), GuardExceeded);
    CHECK(check_jts_identity(t9, JtsVariant::jacobson, {.force = true}).passed);
    CHECK_NOTHROW(enforce_guard(8, 5, {}));
    CHECK_NOTHROW(enforce_guard(12, 4, {}));
    CHECK_THROWS_AS(enforce_guard(13, 4, {}), GuardExceeded);
    CHECK_NOTHROW(enforce_guard(40, 3, {}));
  }

  TEST_CASE("aggregation ignores informational sub-reports")
  {
    CheckReport bad = skipped("x", "test");
    CheckReport ok;
    ok.identity = "ok";
    const CheckReport a = aggregate("a", {ok, informational(bad)});
    CHECK(a.passed);
    CHECK_FALSE(a.witness.has_value());
    const CheckReport b = aggregate("b", {ok, bad});
    CHECK_FALSE(b.passed);
    CHECK(b.witness.has_value());
    CHECK(b.find("x") != nullptr);
    CHECK_THROWS_AS(b.at("missing"), std::out_of_range);
  }

  TEST_CASE("passed iff no witness")
  {
    const auto so3 = catalog::so_n(3);
    for (const auto& r : {check_lie(*so3.bracket), check_antisymmetry(BilinearStructure(2).with_product({1, 1}, Vector{1, 0}))}) {
      CHECK(r.passed == !r.witness.has_value());
      for (const auto& s : r.subchecks)
        CHECK(s.passed == !s.witness.has_value());
    }
  }

  TEST_CASE("variant names")
  {
    CHECK(parse_jts_variant("middle") == JtsVariant::middle);
    CHECK(to_string(JtsVariant::jacobson) == "jacobson");
    CHECK_THROWS_AS(parse_jts_variant("classical"), ParseError);
  }
}
