#include "doctest.h"

#include "opalg/catalog/catalog.hpp"
#include "opalg/catalog/oracle.hpp"
#include "opalg/core/errors.hpp"
#include "opalg/core/random.hpp"
#include "opalg/jordan/triple.hpp"
#include "support.hpp"

using namespace opalg;
using jordan::TripleMode;
using jordan::TripleWithOperator;
namespace oracle = catalog::oracle;

namespace {

const catalog::CatalogEntry& gl2_mult()
{
  static const auto e = catalog::example2(2, testing::diag({1, 2}));
  return e;
}

Operator transpose_gl2()
{
  const auto& real = *gl2_mult().realization;
  return Operator::from_images(4, [&](const Vector& x) { return real.coordinates(real.element(x).transpose()); });
}

bool symmetric_outer(const TrilinearStructure& t)
{
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t.product({i, j, k}) != t.product({k, j, i}))
          return false;
  return true;
}

} // namespace

TEST_CASE("triple constructor validates the JTS identity")
{
  const auto so3 = catalog::lookup("example1-so3?x0=0,0,1&form=diag:1,1,1");
  CHECK_THROWS_AS(TripleWithOperator(so3.triple("two-term"), Operator(3), JtsVariant::middle), PreconditionViolation);
  const auto s = TripleWithOperator::unchecked(so3.triple("two-term"), Operator(3), JtsVariant::middle);
  CHECK_FALSE(s.base_verified());
  const CheckReport r = jordan::check_triple_myb(s);
  CHECK(std::find(r.markers.begin(), r.markers.end(), jordan::kBaseUnverified) != r.markers.end());
  CHECK(TripleWithOperator(gl2_mult().triple(), gl2_mult().op("R1"), JtsVariant::jacobson).base_verified());
}

TEST_SUITE("design")
{
  TEST_CASE("gl(2) with XYZ + ZYX")
  {
    const auto& e = gl2_mult();
    CHECK(jordan::check_equivariance(*e.bracket, e.triple()).passed);
    CHECK(jordan::check_design_condition(*e.bracket, e.triple()).passed);
    CHECK(jordan::check_design({*e.bracket, e.triple(), JtsVariant::jacobson}).passed);
  }

  TEST_CASE("so(3) with invariant and non-invariant forms")
  {
    const auto inv = catalog::lookup("example1-so3?x0=0,0,1&form=diag:1,1,1");
    CHECK(jordan::check_equivariance(*inv.bracket, inv.triple("standard")).passed);
    const auto skew = catalog::lookup("example1-so3?x0=0,0,1&form=diag:1,2,3");
    const CheckReport r = jordan::check_equivariance(*skew.bracket, skew.triple("standard"));
    CHECK_FALSE(r.passed);
    CHECK(r.witness->tuple.size() == 4);
  }

  TEST_CASE("a random triple breaks equivariance")
  {
    RationalSampler s(8);
    const auto& e = gl2_mult();
    const TrilinearStructure t = TrilinearStructure::tabulate(4, [&](const std::array<std::size_t, 3>&) {
      return Vector{s.next(), s.next(), s.next(), s.next()};
    });
    CHECK_FALSE(jordan::check_equivariance(*e.bracket, t).passed);
  }
}

TEST_SUITE("triple myb")
{
  TEST_CASE("multiplication operators on gl(2)")
  {
    const auto& e = gl2_mult();
    for (const char* side : {"right", "left"})
      CHECK(jordan::check_triple_myb(e.triple(), e.op(side)).passed);
  }

  TEST_CASE("matches the free associative residual")
  {
    CHECK(oracle::triple_myb_residual_words(true).is_zero());
    CHECK(oracle::triple_myb_residual_words(false).is_zero());
  }

  TEST_CASE("transpose fails")
  {
    const CheckReport r = jordan::check_triple_myb(gl2_mult().triple(), transpose_gl2());
    CHECK_FALSE(r.passed);
    CHECK(r.witness->tuple.size() == 3);
  }

  TEST_CASE("scalar operators pass")
  {
    for (long c : {0L, 1L, -3L})
      CHECK(jordan::check_triple_myb(gl2_mult().triple(), Operator::scalar(4, Scalar(c))).passed);
  }
}

TEST_SUITE("derived triple")
{
  TEST_CASE("reduced form equals XQYQZ + ZQYQX")
  {
    const auto& e = gl2_mult();
    const auto& real = *e.realization;
    const auto x = oracle::WordPoly::letter('x'), y = oracle::WordPoly::letter('y'),
               z = oracle::WordPoly::letter('z'), q = oracle::WordPoly::letter('q');
    const TrilinearStructure plus = oracle::trilinear_from_words(real, x * q * y * q * z + z * q * y * q * x, *e.q);
    for (const char* side : {"R1", "R2"}) {
      const TripleWithOperator s(e.triple(), e.op(side), JtsVariant::jacobson);
      CHECK(jordan::triple_r(s, TripleMode::reduced) == plus);
      CHECK(jordan::triple_r(s, TripleMode::full) == plus);
    }
  }

  TEST_CASE("word expansions agree with the tensor path")
  {
    RationalSampler s(5);
    const auto e = catalog::example2(2, catalog::random_matrix(2, s));
    const auto& real = *e.realization;
    for (bool right : {true, false}) {
      const Operator& R = e.op(right ? "right" : "left");
      CHECK(oracle::trilinear_from_words(real, oracle::derived_triple_words(right, false), *e.q) ==
            jordan::triple_r_full(e.triple(), R));
      CHECK(oracle::trilinear_from_words(real, oracle::derived_triple_words(right, true), *e.q) ==
            jordan::triple_r_reduced_unchecked(e.triple(), R));
    }
  }

  TEST_CASE("reduced mode requires the triple mYB identity")
  {
    const TripleWithOperator s(gl2_mult().triple(), transpose_gl2(), JtsVariant::jacobson);
    CHECK_THROWS_AS(jordan::triple_r(s, TripleMode::reduced), PreconditionViolation);
    CHECK_NOTHROW(jordan::triple_r(s, TripleMode::full));
  }

  TEST_CASE("derived triple is a JTS and outer-symmetric")
  {
    RationalSampler s(21);
    for (int i = 0; i < 3; ++i) {
      const auto e = catalog::example2(2, catalog::random_matrix(2, s));
      for (const char* side : {"R1", "R2"}) {
        const TripleWithOperator t(e.triple(), e.op(side), JtsVariant::jacobson);
        const TrilinearStructure d = jordan::triple_r(t);
        CHECK(check_jts_identity(d, JtsVariant::jacobson).passed);
        CHECK(symmetric_outer(d));
        CHECK(jordan::triple_r(t, TripleMode::full) == d);
      }
    }
  }

  TEST_CASE("intertwining")
  {
    const auto& e = gl2_mult();
    for (const char* side : {"R1", "R2"})
      CHECK(jordan::check_triple_intertwining(TripleWithOperator(e.triple(), e.op(side), JtsVariant::jacobson))
                .passed);
    CHECK_THROWS_AS(
        jordan::check_triple_intertwining(TripleWithOperator(e.triple(), transpose_gl2(), JtsVariant::jacobson)),
        PreconditionViolation);
  }
}

TEST_SUITE("triple bi-myb")
{
  TEST_CASE("left and right multiplication on gl(2)")
  {
    const auto& e = gl2_mult();
    const CheckReport r = jordan::check_triple_bi_myb(e.triple(), e.op("R1"), e.op("R2"));
    CHECK(r.passed);
    CHECK(r.at("core").passed);
    CHECK(r.at("normal").passed);
    CHECK(r.at("normal").informational);
    CHECK(r.at("even-tempered").passed);
    // The variant with R2 in both outer slots does not hold here.
    CHECK_FALSE(r.at("even-tempered[as-printed]").passed);
  }

  TEST_CASE("identity pair")
  {
    const auto& e = gl2_mult();
    const Operator id = Operator::identity(4);
    const CheckReport r = jordan::check_triple_bi_myb(e.triple(), id, id);
    CHECK(r.passed);
    CHECK(r.at("core").passed);
  }

  TEST_CASE("xi form agrees")
  {
    const auto& e = gl2_mult();
    const Operator xi = e.op("R2") - e.op("R1");
    CHECK(jordan::check_triple_bi_myb_xi(e.triple(), e.op("R1"), xi).passed);
    CHECK_FALSE(jordan::check_triple_bi_myb(e.triple(), e.op("R1"), transpose_gl2()).passed);
  }
}

TEST_SUITE("rho identity")
{
  TEST_CASE("rho X = QXQ on gl(2)")
  {
    const auto& e = gl2_mult();
    const TrilinearStructure derived =
        jordan::triple_r(TripleWithOperator(e.triple(), e.op("R1"), JtsVariant::jacobson));
    const CheckReport r = jordan::check_rho_identity(e.triple(), e.op("rho"), derived);
    CHECK(r.passed);
    CHECK(r.at("rho-identity[derived]").passed);
  }

  TEST_CASE("random rho fails")
  {
    RationalSampler s(44);
    const CheckReport r = jordan::check_rho_identity(gl2_mult().triple(), s.op(4));
    CHECK_FALSE(r.passed);
    CHECK(r.witness->tuple.size() == 3);
  }
}
