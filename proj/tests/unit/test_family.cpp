#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "lctk/errors.hpp"
#include "lctk/family.hpp"
#include "lctk/newton.hpp"

using namespace lctk;
using namespace lctk::test;

namespace {
FamilyInstance y5_instance() { return make_instance(4, P("y^5"), P("0")); }
}  // namespace

TEST_SUITE("family") {
  TEST_CASE("instances") {
    const FamilyInstance a = y5_instance();
    CHECK(a.g == P("x + y^5"));
    CHECK(a.nu == 5);
    const FamilyInstance b = make_instance(4, P("0"), P("y^9"));
    CHECK(b.g == P("x + y^9"));
    CHECK(b.nu == 9);
    CHECK_THROWS_AS(make_instance(4, P("x*y^4"), P("0")), DomainError);
    CHECK_THROWS_AS(make_instance(4, P("y^4"), P("0")), DomainError);
    CHECK_THROWS_AS(make_instance(0, P("y"), P("y")), DomainError);
    CHECK(quasi_smooth_necessary(4, P("x*y^4"), P("y^9 + x^9")));
    CHECK_FALSE(quasi_smooth_necessary(4, P("x*y^4"), P("x^9")));
  }

  TEST_CASE("derived constants") {
    const CertificationContext c = constants(4, 1);
    CHECK(c.lambda == Q("40/39"));
    CHECK(c.ell == 28);
    CHECK(c.v == 124);
    CHECK(c.tau == Q("5/1092"));
    CHECK(c.sigma == Q("768/5"));
    CHECK(c.K == 112);
    CHECK(constants(4, 2).ell == 91);
    CHECK(constants(4, 2).v == 770);
    CHECK(constants(4, 3).tau == Q("1/4446"));
    CHECK(constants(8, 1).sigma == Q("5360/9"));
    for (std::int64_t n = 1; n <= 8; ++n)
      for (std::int64_t m = 1; m <= 5; ++m) CHECK(Rational(static_cast<long>(constants(n, m).v)) < constants(n, m).sigma);
    CHECK_THROWS_AS(constants(0, 1), DomainError);
    CHECK_THROWS_AS(constants(4, 0), DomainError);
  }

  TEST_CASE("canonical basis") {
    const auto basis = canonical_basis(4, 1);
    CHECK(basis.size() == 28);
    std::uint64_t sx = 0, sy = 0;
    std::set<std::uint32_t> degrees;
    for (const auto& b : basis) {
      sx += b.n1;
      sy += b.n2;
      degrees.insert(b.n1 + b.n2);
    }
    CHECK(sx == 124);
    CHECK(sy == 124);
    CHECK(degrees == std::set<std::uint32_t>{0, 4, 8, 12});
    for (std::int64_t m = 1; m <= 4; ++m) {
      std::size_t constant = 0;
      for (const auto& b : canonical_basis(4, m))
        if (b.j == static_cast<std::uint32_t>(3 * m)) {
          ++constant;
          CHECK(b.n1 + b.n2 == 0);
        }
      CHECK(constant == 1);
    }
  }

  TEST_CASE("smooth-locus inequalities") {
    const InequalityReport r4 = smooth_locus_report(4);
    CHECK(r4.passes);
    CHECK(r4.d_max == Rational(1));
    bool tight_d = false;
    for (const auto& c : r4.checks)
      if (c.name == "d_max <= 1") tight_d = c.tight;
    CHECK(tight_d);
    const InequalityReport r3 = smooth_locus_report(3);
    CHECK_FALSE(r3.passes);
    CHECK(r3.d_max == Q("7087/5425"));
    const InequalityReport r100 = smooth_locus_report(100);
    CHECK(r100.passes);
    CHECK(r100.d_max == Q("52607/450575"));
    for (const auto& c : r100.checks) CHECK_FALSE(c.tight);
  }

  TEST_CASE("min-m searches") {
    const MinMSearch nw = newton_claim_min_m(4);
    REQUIRE(nw.m);
    CHECK(*nw.m == 3);
    CHECK(nw.stays_true);
    CHECK(nw.margins.size() == 50);
    CHECK(*newton_claim_min_m(8).m == 6);
    const MinMSearch sg = sigma_claim_min_m(4);
    REQUIRE(sg.m);
    CHECK(*sg.m == 1);
    CHECK(*sigma_claim_min_m(8).m == 1);
    CHECK_FALSE(newton_claim_min_m(4, 2).m);
  }

  TEST_CASE("seeded sampling is deterministic") {
    CHECK(trial_seed(7, 0) == trial_seed(7, 0));
    CHECK(trial_seed(7, 0) != trial_seed(7, 1));
    CHECK(trial_seed(7, 0) != trial_seed(8, 0));
    const auto a = sample_matrix(28, 99);
    CHECK(a == sample_matrix(28, 99));
    CHECK(matrix_hash(a) == matrix_hash(sample_matrix(28, 99)));
    CHECK(matrix_hash(a) != matrix_hash(sample_matrix(28, 100)));
    for (const auto& row : a)
      for (auto v : row) CHECK((v >= -9 && v <= 9));
  }

  TEST_CASE("identity matrix gives the canonical monomials") {
    std::vector<std::vector<std::int64_t>> id(28, std::vector<std::int64_t>(28, 0));
    for (std::size_t i = 0; i < 28; ++i) id[i][i] = 1;
    const auto basis = basis_from_matrix(id, 4, 1);
    ProductForm f;
    for (const auto& p : basis) {
      CHECK(p.size() == 1);
      f.append(p, 1);
    }
    CHECK(polygon_of(f).vertices() == std::vector<LatticePoint>{{124, 124}});
  }

  TEST_CASE("sampled bases satisfy the polygon containment") {
    const CertificationContext ctx = constants(4, 1);
    for (std::uint64_t s = 0; s < 5; ++s) {
      ProductForm f;
      for (const auto& p : sample_basis(ctx, s)) f.append(p, 1);
      CHECK(contains_point(polygon_of(f), Rational(124), Rational(124)));
    }
  }

  TEST_CASE("canonical and adversarial certification") {
    const FamilyInstance inst = y5_instance();
    const CertificationContext ctx = constants(4, 1);
    const TrialResult canon = certify_canonical(inst, ctx);
    CHECK(canon.certificate.conclusion == Conclusion::Certified);
    CHECK(canon.certificate.value == Q("5/1092"));
    CHECK(canon.f_polygon_contains_v);
    CHECK(canon.h_polygon_contains_newton_point);
    CHECK_FALSE(replay(canon.certificate));

    const LctCertificate adv = lct_product_certify(adversarial_product(inst, ctx), 0, ctx);
    CHECK(adv.conclusion == Conclusion::Refuted);
    CHECK(adv.value == Q("3/1120"));
    CHECK(adv.value < ctx.tau);
  }

  TEST_CASE("trials and the aggregate report") {
    const FamilyInstance inst = y5_instance();
    const CertificationContext ctx = constants(4, 1);
    const auto serial = run_trials(inst, ctx, 7, 6, 1);
    const auto parallel = run_trials(inst, ctx, 7, 6, 3);
    REQUIRE(serial.size() == 6);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].index == i);
      CHECK(serial[i].basis_hash == parallel[i].basis_hash);
      CHECK(serial[i].certificate == parallel[i].certificate);
      CHECK(serial[i].certificate.conclusion == Conclusion::Certified);
    }
    const DeltaReport rep = delta_report(inst, 1, serial);
    CHECK(rep.certified == 6);
    CHECK(rep.verdict == "all sampled evidence consistent with delta_2mn >= lambda");
    CHECK_FALSE(rep.caveat.empty());

    CHECK(delta_report(inst, 1, {}).verdict == "inequality suite passes; no trials run");
    const FamilyInstance three = make_instance(3, P("y^4"), P("0"));
    CHECK(delta_report(three, 1, {}).verdict == "out of theorem's hypothesis");
    CHECK_FALSE(delta_report(three, 1, {}).inequalities.passes);
  }
}
