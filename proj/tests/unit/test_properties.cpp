#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "lctk/factor.hpp"
#include "lctk/lct.hpp"
#include "lctk/newton.hpp"

using namespace lctk;
using namespace lctk::test;

namespace {

/// Random bivariate polynomial with small coefficients and exponents.
Polynomial random_poly(std::mt19937_64& rng, int max_terms, int max_exp, bool through_origin) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<int> coef(-4, 4);
  Polynomial p;
  while (p.is_zero()) {
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
      std::uint32_t s = expo(rng), t = expo(rng);
      if (through_origin && s == 0 && t == 0) s = 1;
      int c = coef(rng);
      if (c == 0) c = 1;
      p.add_term({s, t}, Rational(c, 1 + static_cast<int>(rng() % 3)));
    }
  }
  return p;
}

WeightVector random_weights(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 7);
  return WeightVector{d(rng), d(rng)};
}

Polynomial swap_coords(const Polynomial& p) { return swap_variables(p); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("leading terms, multiplicities and polygons multiply") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 500; ++i) {
      const Polynomial p = random_poly(rng, 5, 6, false);
      const Polynomial q = random_poly(rng, 5, 6, false);
      const WeightVector w = random_weights(rng);
      const Polynomial pq = p * q;
      CHECK(weighted_leading_term(pq, w) == weighted_leading_term(p, w) * weighted_leading_term(q, w));
      CHECK(weighted_multiplicity(pq, w) == weighted_multiplicity(p, w) + weighted_multiplicity(q, w));
      CHECK(polygon_of(pq) == minkowski_sum(polygon_of(p), polygon_of(q)));
    }
  }

  TEST_CASE("product forms agree with their expansion") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
      ProductForm h;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < k; ++j) h.append(random_poly(rng, 3, 4, false), 1 + rng() % 3);
      const WeightVector w = random_weights(rng);
      const Polynomial e = h.expand();
      CHECK(product_leading_term(h, w).expand() == weighted_leading_term(e, w));
      CHECK(weighted_multiplicity(h, w) == weighted_multiplicity(e, w));
      CHECK(polygon_of(h) == polygon_of(e));
    }
  }

  TEST_CASE("bounds sandwich the exact threshold") {
    std::mt19937_64 rng(4242);
    int exact_runs = 0;
    for (int i = 0; i < 200; ++i) {
      const Polynomial f = random_poly(rng, 4, 5, true);
      const LctResult r = lct_exact(f);
      if (r.certificate.conclusion != Conclusion::Exact) continue;
      ++exact_runs;
      CHECK_FALSE(replay(r.certificate));
      const Rational c = r.certificate.value;
      CHECK(c > Rational(0));
      CHECK(c <= Rational(1));
      for (int k = 0; k < 3; ++k) {
        const WeightVector w = random_weights(rng);
        const auto b = kollar_bounds(f, w);
        REQUIRE(b);
        CHECK(b->lower <= c);
        CHECK(c <= b->upper);
      }
    }
    CHECK(exact_runs > 150);
  }

  TEST_CASE("invariance under scaling, swapping and powers") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 80; ++i) {
      const Polynomial f = random_poly(rng, 4, 4, true);
      const LctResult base = lct_exact(f);
      if (base.certificate.conclusion != Conclusion::Exact) continue;
      const Rational c = base.certificate.value;
      CHECK(lct_exact(f * Rational(-7, 3)).certificate.value == c);
      CHECK(lct_exact(swap_coords(f)).certificate.value == c);
      const LctResult sq = lct_exact(pow(f, 2));
      if (sq.certificate.conclusion == Conclusion::Exact) CHECK(sq.certificate.value == c / Rational(2));
      ProductForm h;
      h.append(f, 3);
      const LctResult cube = lct_exact(h);
      if (cube.certificate.conclusion == Conclusion::Exact) CHECK(cube.certificate.value == c / Rational(3));
    }
  }

  TEST_CASE("analytic coordinate changes preserve the threshold") {
    std::mt19937_64 rng(31337);
    int compared = 0;
    for (int i = 0; i < 80; ++i) {
      const Polynomial f = random_poly(rng, 4, 4, true);
      const LctResult base = lct_exact(f);
      if (base.certificate.conclusion != Conclusion::Exact) continue;
      const int beta = 1 + static_cast<int>(rng() % 3);
      const Polynomial g = P(std::to_string(1 + rng() % 3) + "*y^" + std::to_string(beta));
      const Polynomial shifted = shift_substitute(f, 0, g);
      CHECK(shift_substitute(shifted, 0, -g) == f);
      const LctResult moved = lct_exact(shifted);
      if (moved.certificate.conclusion != Conclusion::Exact) continue;
      ++compared;
      CHECK(moved.certificate.value == base.certificate.value);
    }
    CHECK(compared > 40);
  }

  TEST_CASE("quasi-homogeneous factorizations expand back") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 150; ++i) {
      const WeightVector w = random_weights(rng);
      Polynomial p;
      const std::int64_t d = w[0] * w[1] * (1 + static_cast<int>(rng() % 3));
      for (std::int64_t s = 0; s * w[0] <= d; ++s)
        if ((d - s * w[0]) % w[1] == 0 && rng() % 2)
          p.add_term({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>((d - s * w[0]) / w[1])},
                     Rational(static_cast<long>(rng() % 9) - 4));
      if (p.is_zero()) continue;
      const QhFactorization q = quasihomog_factor(p, w);
      CHECK(q.expand() == p);
      for (const auto& f : q.factors) CHECK(is_quasi_homogeneous(f.poly, w));
    }
  }

  TEST_CASE("certified targets are never above the threshold") {
    std::mt19937_64 rng(2718);
    const char* pool[] = {"x", "y", "x + y^2", "x^2 + y^3", "x + y", "x*y + y^4", "x^3 + y^2", "x - y^3"};
    int certified = 0;
    for (int i = 0; i < 150; ++i) {
      ProductForm h;
      h.append(P("x + y^5"), 1 + rng() % 3);
      const int k = static_cast<int>(rng() % 4);
      for (int j = 0; j < k; ++j) h.append(P(pool[rng() % 8]), 1 + rng() % 3);
      CertificationContext ctx;
      ctx.n = 4;
      ctx.m = 1;
      ctx.ell = 1;
      ctx.v = 1 + static_cast<std::int64_t>(rng() % 4);
      ctx.sigma = Rational(1 + static_cast<long>(rng() % 6));
      ctx.lambda = Rational(1);
      ctx.tau = Rational(1, 1 + static_cast<long>(rng() % 12));
      ctx.K = static_cast<std::int64_t>(h.factors()[0].mult);
      const LctCertificate cert = lct_product_certify(h, 0, ctx);
      CHECK_FALSE(replay(cert));
      const LctResult truth = lct_exact(h.expand());
      if (truth.certificate.conclusion != Conclusion::Exact) continue;
      const Rational c = truth.certificate.value;
      if (cert.conclusion == Conclusion::Certified) {
        ++certified;
        CHECK(c >= ctx.tau);
      } else if (cert.conclusion == Conclusion::Refuted) {
        CHECK(cert.value < ctx.tau);
        CHECK(c <= cert.value);
      }
    }
    CHECK(certified > 0);
  }
}
