#include "lctk/newton.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "lctk/errors.hpp"

namespace lctk {

namespace {

using i128 = __int128;

// Positive when b turns left of o->a, i.e. a lies strictly below the segment o->b
// for a chain running down and to the right.
i128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<i128>(a.s - o.s) * (b.t - o.t) - static_cast<i128>(a.t - o.t) * (b.s - o.s);
}

EdgeNormal edge_normal(const LatticePoint& a, const LatticePoint& b) {
  std::int64_t wx = a.t - b.t;
  std::int64_t wy = b.s - a.s;
  const std::int64_t g = std::gcd(wx, wy);
  return {wx / g, wy / g};
}

}  // namespace

std::string to_string(EdgeOrientation o) {
  switch (o) {
    case EdgeOrientation::Vertical:
      return "vertical";
    case EdgeOrientation::Horizontal:
      return "horizontal";
    case EdgeOrientation::Sloped:
      return "sloped";
  }
  return "sloped";
}

WeightVector Edge::weights() const {
  if (orientation != EdgeOrientation::Sloped) throw DomainError("unbounded boundary rays carry no weight vector");
  return WeightVector{normal.wx, normal.wy};
}

NewtonPolygon::NewtonPolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("a Newton polygon needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].s < 0 || vertices_[i].t < 0) throw DomainError("Newton polygon vertices must be non-negative");
    if (i > 0 && (vertices_[i].s <= vertices_[i - 1].s || vertices_[i].t >= vertices_[i - 1].t))
      throw DomainError("Newton polygon vertices must increase in s and decrease in t");
    if (i > 1 && cross(vertices_[i - 2], vertices_[i - 1], vertices_[i]) <= 0)
      throw DomainError("Newton polygon vertex chain is not strictly convex");
  }
}

NewtonPolygon NewtonPolygon::from_points(std::vector<LatticePoint> points) {
  if (points.empty()) throw DomainError("a Newton polygon needs at least one point");
  std::sort(points.begin(), points.end());
  std::vector<LatticePoint> stair;
  for (const auto& p : points)
    if (stair.empty() || p.t < stair.back().t) stair.push_back(p);
  std::vector<LatticePoint> hull;
  for (const auto& p : stair) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return NewtonPolygon(std::move(hull));
}

std::vector<Edge> NewtonPolygon::boundary() const {
  std::vector<Edge> out;
  out.push_back({EdgeOrientation::Vertical, vertices_.front(), vertices_.front(), {1, 0}, false});
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    out.push_back({EdgeOrientation::Sloped, vertices_[i], vertices_[i + 1], edge_normal(vertices_[i], vertices_[i + 1]),
                   false});
  out.push_back({EdgeOrientation::Horizontal, vertices_.back(), vertices_.back(), {0, 1}, false});
  return out;
}

NewtonPolygon polygon_of(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  if (p.num_vars() != 2) throw VariableMismatchError("Newton polygons need a bivariate polynomial");
  std::vector<LatticePoint> pts;
  pts.reserve(p.size());
  for (const auto& [e, c] : p.terms()) pts.push_back({e[0], e[1]});
  return NewtonPolygon::from_points(std::move(pts));
}

NewtonPolygon polygon_of(const ProductForm& h) {
  NewtonPolygon acc({{0, 0}});
  for (const auto& f : h.factors()) acc = minkowski_sum(acc, scale(polygon_of(f.poly), f.mult));
  return acc;
}

NewtonPolygon scale(const NewtonPolygon& p, std::uint64_t k) {
  if (k == 0) return NewtonPolygon({{0, 0}});
  std::vector<LatticePoint> v = p.vertices();
  const auto f = static_cast<std::int64_t>(k);
  for (auto& pt : v) {
    pt.s *= f;
    pt.t *= f;
  }
  return NewtonPolygon(std::move(v));
}

NewtonPolygon minkowski_sum(const NewtonPolygon& p, const NewtonPolygon& q) {
  const auto& a = p.vertices();
  const auto& b = q.vertices();
  std::vector<LatticePoint> steps;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) steps.push_back({a[i + 1].s - a[i].s, a[i + 1].t - a[i].t});
  for (std::size_t i = 0; i + 1 < b.size(); ++i) steps.push_back({b[i + 1].s - b[i].s, b[i + 1].t - b[i].t});
  // Steepest first: dt/ds increasing.
  std::stable_sort(steps.begin(), steps.end(), [](const LatticePoint& u, const LatticePoint& v) {
    return static_cast<i128>(u.t) * v.s < static_cast<i128>(v.t) * u.s;
  });
  std::vector<LatticePoint> pts{{a.front().s + b.front().s, a.front().t + b.front().t}};
  for (const auto& d : steps) pts.push_back({pts.back().s + d.s, pts.back().t + d.t});
  return NewtonPolygon::from_points(std::move(pts));
}

Edge diagonal_edge(const NewtonPolygon& p) {
  const auto& v = p.vertices();
  const auto pieces = p.boundary();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t d = v[i].s - v[i].t;
    if (d < 0) continue;
    if (d == 0) {
      Edge e = pieces[i + 1];
      e.vertex_crossing = true;
      return e;
    }
    return pieces[i];  // vertical ray when i == 0, otherwise the edge ending at v[i]
  }
  return pieces.back();
}

Rational diagonal_crossing(const NewtonPolygon& p) {
  const Edge e = diagonal_edge(p);
  if (e.vertex_crossing) return Rational(static_cast<long>(e.start.s));
  switch (e.orientation) {
    case EdgeOrientation::Vertical:
      return Rational(static_cast<long>(e.start.s));
    case EdgeOrientation::Horizontal:
      return Rational(static_cast<long>(e.start.t));
    case EdgeOrientation::Sloped:
      break;
  }
  const Integer c = Integer(static_cast<long>(e.normal.wx)) * static_cast<long>(e.start.s) +
                    Integer(static_cast<long>(e.normal.wy)) * static_cast<long>(e.start.t);
  return Rational(c, Integer(static_cast<long>(e.normal.wx + e.normal.wy)));
}

bool contains_point(const NewtonPolygon& p, const Rational& s, const Rational& t) {
  const auto& v = p.vertices();
  if (s < Rational(static_cast<long>(v.front().s))) return false;
  if (t < Rational(static_cast<long>(v.back().t))) return false;
  for (const auto& e : p.boundary()) {
    if (e.orientation != EdgeOrientation::Sloped) continue;
    const Rational wx(static_cast<long>(e.normal.wx)), wy(static_cast<long>(e.normal.wy));
    const Rational c = wx * Rational(static_cast<long>(e.start.s)) + wy * Rational(static_cast<long>(e.start.t));
    if (wx * s + wy * t < c) return false;
  }
  return true;
}

WeightVector vertex_weights(const NewtonPolygon& p, std::size_t index) {
  const auto pieces = p.boundary();
  if (index + 1 >= pieces.size()) throw DomainError("vertex index out of range");
  const EdgeNormal left = pieces[index].normal;
  const EdgeNormal right = pieces[index + 1].normal;
  return WeightVector{left.wx + right.wx, left.wy + right.wy};
}

std::string render_svg(const NewtonPolygon& p) {
  const auto& v = p.vertices();
  const Rational crossing = diagonal_crossing(p);
  std::int64_t extent = 1;
  for (const auto& pt : v) extent = std::max({extent, pt.s, pt.t});
  const double ext = static_cast<double>(extent) * 1.25 + 1.0;
  const double size = 480, margin = 40, span = size - 2 * margin;
  auto X = [&](double s) { return margin + s / ext * span; };
  auto Y = [&](double t) { return size - margin - t / ext * span; };
  auto fmt = [](double d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", d);
    return std::string(buf);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  os << "  <rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  os << "  <polygon fill=\"#cfe0f3\" stroke=\"#1f4e8c\" stroke-width=\"2\" points=\"";
  os << fmt(X(static_cast<double>(v.front().s))) << "," << fmt(Y(ext)) << " ";
  for (const auto& pt : v) os << fmt(X(static_cast<double>(pt.s))) << "," << fmt(Y(static_cast<double>(pt.t))) << " ";
  os << fmt(X(ext)) << "," << fmt(Y(static_cast<double>(v.back().t))) << " " << fmt(X(ext)) << "," << fmt(Y(ext))
     << "\"/>\n";
  os << "  <line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(X(ext)) << "\" y2=\"" << fmt(Y(0))
     << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(X(0)) << "\" y2=\"" << fmt(Y(ext))
     << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\"" << fmt(X(ext)) << "\" y2=\""
     << fmt(Y(ext)) << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
  for (const auto& pt : v)
    os << "  <circle cx=\"" << fmt(X(static_cast<double>(pt.s))) << "\" cy=\"" << fmt(Y(static_cast<double>(pt.t)))
       << "\" r=\"3\" fill=\"#1f4e8c\"/>\n";
  const double c = crossing.to_double();
  os << "  <circle cx=\"" << fmt(X(c)) << "\" cy=\"" << fmt(Y(c)) << "\" r=\"5\" fill=\"none\" stroke=\"#c0392b\""
     << " stroke-width=\"2\"/>\n";
  os << "  <text x=\"" << fmt(X(c) + 8) << "\" y=\"" << fmt(Y(c) - 8) << "\" font-family=\"monospace\" font-size=\"12\""
     << " fill=\"#c0392b\">(" << crossing.str() << ", " << crossing.str() << ")</text>\n";
  os << "  <text x=\"" << fmt(size - margin) << "\" y=\"" << fmt(size - margin + 20)
     << "\" font-family=\"monospace\" font-size=\"12\">s</text>\n";
  os << "  <text x=\"" << fmt(margin - 20) << "\" y=\"" << fmt(margin)
     << "\" font-family=\"monospace\" font-size=\"12\">t</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace lctk
