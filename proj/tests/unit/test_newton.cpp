#include <doctest.h>

#include "helpers.hpp"
#include "lctk/errors.hpp"
#include "lctk/newton.hpp"

using namespace lctk;
using namespace lctk::test;

namespace {
std::vector<LatticePoint> pts(std::initializer_list<std::pair<int, int>> list) {
  std::vector<LatticePoint> out;
  for (auto [s, t] : list) out.push_back({s, t});
  return out;
}
}  // namespace

TEST_SUITE("newton") {
  TEST_CASE("vertex chains") {
    CHECK(polygon_of(P("x^2 + y^3")).vertices() == pts({{0, 3}, {2, 0}}));
    CHECK(polygon_of(P("x^2 + x*y + y^2")).vertices() == pts({{0, 2}, {2, 0}}));
    CHECK(polygon_of(P("x^3*y^2")).vertices() == pts({{3, 2}}));
    CHECK(polygon_of(P("x^4 + x^2*y + x*y^2 + y^5 + x^3*y^3")).vertices() == pts({{0, 5}, {1, 2}, {2, 1}, {4, 0}}));
    CHECK(polygon_of(P("x^4 + x^2*y + x*y^3 + y^5")).vertices() == pts({{0, 5}, {2, 1}, {4, 0}}));
    CHECK_THROWS_AS(polygon_of(Polynomial()), ZeroPolynomialError);
  }

  TEST_CASE("constructor validates convexity") {
    CHECK_THROWS_AS(NewtonPolygon(pts({{0, 2}, {1, 1}, {2, 0}})), DomainError);
    CHECK_THROWS_AS(NewtonPolygon(pts({{2, 0}, {0, 2}})), DomainError);
    CHECK_THROWS_AS(NewtonPolygon({}), DomainError);
    CHECK_NOTHROW(NewtonPolygon(pts({{0, 3}, {1, 1}, {3, 0}})));
  }

  TEST_CASE("Minkowski sums") {
    const NewtonPolygon p = polygon_of(P("x^2 + y^3"));
    CHECK(minkowski_sum(p, polygon_of(P("1"))) == p);
    CHECK(minkowski_sum(p, p) == polygon_of(pow(P("x^2 + y^3"), 2)));
    CHECK(scale(polygon_of(P("x")), 7).vertices() == pts({{7, 0}}));
    const ProductForm h = product({{"x + y^3", 2}, {"x^2 + y", 1}, {"x*y", 3}});
    CHECK(polygon_of(h) == polygon_of(h.expand()));
  }

  TEST_CASE("diagonal edge") {
    const Edge e = diagonal_edge(polygon_of(P("x^2 + y^3")));
    CHECK(e.orientation == EdgeOrientation::Sloped);
    CHECK(e.start == LatticePoint{0, 3});
    CHECK(e.end == LatticePoint{2, 0});
    CHECK(e.normal == EdgeNormal{3, 2});
    CHECK_FALSE(e.vertex_crossing);

    CHECK(diagonal_edge(polygon_of(P("x^2 + y^2"))).normal == EdgeNormal{1, 1});

    const Edge v = diagonal_edge(polygon_of(P("x^2 + x*y")));
    CHECK(v.vertex_crossing);
    CHECK(v.start == LatticePoint{1, 1});
    CHECK(v.end == LatticePoint{2, 0});
    CHECK(v.orientation == EdgeOrientation::Sloped);

    const Edge ray = diagonal_edge(polygon_of(P("x^3*y + x^4*y^3")));
    CHECK(ray.orientation == EdgeOrientation::Vertical);
    CHECK(ray.normal == EdgeNormal{1, 0});

    const Edge hor = diagonal_edge(polygon_of(P("x*y^3")));
    CHECK(hor.orientation == EdgeOrientation::Horizontal);

    const Edge corner = diagonal_edge(polygon_of(P("x^2*y^2")));
    CHECK(corner.vertex_crossing);
    CHECK(corner.orientation == EdgeOrientation::Horizontal);
  }

  TEST_CASE("diagonal crossing") {
    CHECK(diagonal_crossing(polygon_of(P("x^2 + y^3"))) == Q("6/5"));
    CHECK(diagonal_crossing(polygon_of(P("x*y"))) == Rational(1));
    for (int a = 1; a <= 6; ++a) CHECK(diagonal_crossing(polygon_of(P("x^" + std::to_string(a) + "*y^" + std::to_string(a)))) == Rational(a));
    CHECK(diagonal_crossing(polygon_of(P("x*y^3"))) == Rational(3));
  }

  TEST_CASE("containment") {
    CHECK(contains_point(polygon_of(P("x*y")), Rational(1), Rational(1)));
    CHECK_FALSE(contains_point(polygon_of(P("x^2 + y^3")), Rational(0), Rational(0)));
    CHECK(contains_point(polygon_of(P("x^2 + y^3")), Q("6/5"), Q("6/5")));
    CHECK_FALSE(contains_point(polygon_of(P("x^2 + y^3")), Q("6/5"), Q("11/10")));
    CHECK(contains_point(polygon_of(P("x^2 + y^3")), Rational(100), Rational(0)));
  }

  TEST_CASE("vertex weights pick out a single vertex") {
    const NewtonPolygon p = polygon_of(P("x^4 + x*y^2 + y^5"));
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      const WeightVector w = vertex_weights(p, i);
      const Polynomial lead = weighted_leading_term(P("x^4 + x*y^2 + y^5"), w);
      CHECK(lead.size() == 1);
    }
    CHECK(vertex_weights(polygon_of(P("x*y")), 0) == WeightVector{1, 1});
  }

  TEST_CASE("svg drawing") {
    const std::string svg = render_svg(polygon_of(P("x^2 + y^3")));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg == render_svg(polygon_of(P("x^2 + y^3"))));
  }
}
