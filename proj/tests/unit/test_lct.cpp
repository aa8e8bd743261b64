#include <doctest.h>

#include "helpers.hpp"
#include "lctk/errors.hpp"
#include "lctk/factor.hpp"
#include "lctk/lct.hpp"

using namespace lctk;
using namespace lctk::test;

namespace {

Rational exact_value(const Polynomial& f) {
  const LctResult r = lct_exact(f);
  REQUIRE(r.certificate.conclusion == Conclusion::Exact);
  REQUIRE(r.bounds);
  REQUIRE(r.bounds->exact);
  CHECK(r.certificate.value == r.bounds->lower);
  CHECK_FALSE(replay(r.certificate));
  return r.bounds->lower;
}

CertificationContext small_context(const Rational& tau) {
  CertificationContext ctx;
  ctx.n = 4;
  ctx.m = 1;
  ctx.ell = 1;
  ctx.v = 1;
  ctx.sigma = Rational(1);
  ctx.lambda = Rational(1);
  ctx.tau = tau;
  ctx.K = 1;
  return ctx;
}

}  // namespace

TEST_SUITE("lct") {
  TEST_CASE("quasi-homogeneous minimum formula") {
    CHECK(lct_quasihomogeneous(P("x^2 + y^3"), WeightVector{3, 2}) == Q("5/6"));
    CHECK(lct_quasihomogeneous(P("x^3 + 2*x^2*y^2 + x*y^4"), WeightVector{2, 1}) == Q("1/2"));
    CHECK(lct_quasihomogeneous(P("x^5 + 2*x^4*y^2 + x^3*y^4"), WeightVector{2, 1}) == Q("3/10"));
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) {
        const Polynomial m = P("x^" + std::to_string(a) + "*y^" + std::to_string(b));
        CHECK(lct_quasihomogeneous(m, WeightVector{1, 1}) == std::min(Rational(1, a), Rational(1, b)));
      }
    const FactorSummary s{1, 0, {2}};
    CHECK(qh_minimum(s, WeightVector{2, 1}, 6) == Q("1/2"));
  }

  TEST_CASE("two-sided bounds") {
    const auto cusp = kollar_bounds(P("x^2 + y^3"), WeightVector{3, 2});
    REQUIRE(cusp);
    CHECK(cusp->lower == Q("5/6"));
    CHECK(cusp->upper == Q("5/6"));
    CHECK(cusp->exact);

    const auto degenerate = kollar_bounds(P("x^2 + 2*x*y^2 + y^4 + y^5"), WeightVector{2, 1});
    REQUIRE(degenerate);
    CHECK(degenerate->upper == Q("3/4"));
    CHECK(degenerate->lower == Q("1/2"));
    CHECK_FALSE(degenerate->exact);

    const auto nc = kollar_bounds(P("x*y"), WeightVector{1, 1});
    REQUIRE(nc);
    CHECK(nc->lower == Rational(1));
    CHECK(nc->upper == Rational(1));

    CHECK_FALSE(kollar_bounds(P("1 + x"), WeightVector{1, 1}));
  }

  TEST_CASE("exact thresholds") {
    CHECK(exact_value(P("x^2 + y^3")) == Q("5/6"));
    CHECK(exact_value(P("x^2 + 2*x*y^2 + y^4 + y^5")) == Q("7/10"));
    CHECK(exact_value(P("x^3 + 2*x^2*y^2 + x*y^4")) == Q("1/2"));
    CHECK(exact_value(P("x*y")) == Rational(1));
    CHECK(exact_value(P("x^3*y^5")) == Q("1/5"));
    CHECK(exact_value(P("x^2 - 2*y^4")) == Q("3/4"));
    CHECK(exact_value(P("x^4 + 2*x^2*y^2 + y^4 + y^7")) == Q("1/2"));
    CHECK(exact_value(P("x^2 + y^2")) == Rational(1));
    CHECK(exact_value(P("x")) == Rational(1));
    CHECK(exact_value(P("x^3 + y^4")) == Q("7/12"));
  }

  TEST_CASE("the shifted cusp records a shift step") {
    const LctResult r = lct_exact(P("x^2 + 2*x*y^2 + y^4 + y^5"));
    REQUIRE(r.certificate.steps.size() == 3);
    CHECK(r.certificate.steps[0].kind == StepKind::DiagonalEdge);
    CHECK(r.certificate.steps[1].kind == StepKind::Shift);
    REQUIRE(r.certificate.steps[1].shift);
    CHECK(r.certificate.steps[1].shift->beta == 2);
    CHECK(r.certificate.steps[2].weights == WeightVector{5, 2});
  }

  TEST_CASE("inputs without a singularity") {
    const LctResult r = lct_exact(P("1 + x"));
    CHECK(r.certificate.conclusion == Conclusion::NoSingularity);
    CHECK_FALSE(r.bounds);
    CHECK_THROWS_AS(lct_exact(Polynomial()), ZeroPolynomialError);
  }

  TEST_CASE("product forms agree with the expanded polynomial") {
    const ProductForm h = product({{"x + y^2", 2}, {"x", 1}});
    CHECK(lct_exact(h).certificate.value == Q("1/2"));
    const ProductForm g = product({{"x^2 + y^3", 1}, {"y", 1}});
    CHECK(lct_exact(g).certificate.value == lct_exact(g.expand()).certificate.value);
  }

  TEST_CASE("product certification against a target") {
    const LctCertificate smooth = lct_product_certify(product({{"x", 1}}), 0, small_context(Q("1/2")));
    CHECK(smooth.conclusion == Conclusion::Certified);
    CHECK(smooth.value == Q("1/2"));
    CHECK_FALSE(replay(smooth));

    const LctCertificate triple = lct_product_certify(product({{"x", 3}}), 0, small_context(Q("1/2")));
    CHECK(triple.conclusion == Conclusion::Refuted);
    CHECK(triple.value == Q("1/3"));

    CertificationContext low = small_context(Q("1/2"));
    low.n = 3;
    CHECK(lct_product_certify(product({{"x", 1}}), 0, low).conclusion == Conclusion::Inconclusive);
    CHECK_THROWS_AS(lct_product_certify(product({{"x", 1}}), 0, small_context(Rational(0))), DomainError);
    CHECK_THROWS_AS(lct_product_certify(product({{"x", 1}}), 3, small_context(Q("1/2"))), DomainError);
  }

  TEST_CASE("replay rejects tampered certificates") {
    LctResult r = lct_exact(P("x^2 + 2*x*y^2 + y^4 + y^5"));
    REQUIRE_FALSE(replay(r.certificate));
    LctCertificate bad = r.certificate;
    bad.steps.back().evaluated_min = Q("3/4");
    CHECK(replay(bad));
    LctCertificate bad_shift = r.certificate;
    bad_shift.steps[1].shift->beta = 0;
    CHECK(replay(bad_shift));
  }

  TEST_CASE("step and conclusion names") {
    for (StepKind k : {StepKind::DiagonalEdge, StepKind::VerticalCase, StepKind::HorizontalCase, StepKind::CaseA,
                       StepKind::CaseB, StepKind::CaseC, StepKind::Shift})
      CHECK(step_kind_from_string(to_string(k)) == k);
    for (Conclusion c : {Conclusion::Certified, Conclusion::Exact, Conclusion::Refuted, Conclusion::Inconclusive,
                         Conclusion::NoSingularity})
      CHECK(conclusion_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(step_kind_from_string("nonsense"), ParseError);
  }
}
