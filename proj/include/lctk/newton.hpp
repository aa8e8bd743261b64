#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lctk/polynomial.hpp"

namespace lctk {

/// A point (s, t) of the exponent plane: s counts x, t counts y.
struct LatticePoint {
  std::int64_t s = 0;
  std::int64_t t = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class EdgeOrientation { Vertical, Horizontal, Sloped };

std::string to_string(EdgeOrientation o);

/// Inner normal of a boundary piece. Sloped edges have both entries
/// positive; the unbounded vertical and horizontal rays have (1, 0) and (0, 1).
struct EdgeNormal {
  std::int64_t wx = 0;
  std::int64_t wy = 0;
  friend bool operator==(const EdgeNormal&, const EdgeNormal&) = default;
};

/// A boundary piece of a Newton polygon. The vertical and horizontal pieces
/// are the unbounded rays leaving the first and last vertex; for them
/// `end == start`.
struct Edge {
  EdgeOrientation orientation = EdgeOrientation::Sloped;
  LatticePoint start;
  LatticePoint end;
  EdgeNormal normal;
  /// Set when the line s = t passes through a vertex; `start` is that vertex.
  bool vertex_crossing = false;

  /// The normal as a weight vector; only defined for sloped edges.
  WeightVector weights() const;
};

/// Region conv(support) + R^2_{>=0}, stored as its lower-left vertex chain
/// ordered by increasing s (and so decreasing t).
class NewtonPolygon {
 public:
  /// Throws DomainError unless the points form a strictly convex chain.
  explicit NewtonPolygon(std::vector<LatticePoint> vertices);

  /// Hull of arbitrary points; redundant points are discarded.
  static NewtonPolygon from_points(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  /// Boundary pieces in order: vertical ray, chain edges, horizontal ray.
  std::vector<Edge> boundary() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<LatticePoint> vertices_;
};

NewtonPolygon polygon_of(const Polynomial& p);
/// Minkowski sum of scaled factor polygons; the product is never expanded.
NewtonPolygon polygon_of(const ProductForm& h);

NewtonPolygon minkowski_sum(const NewtonPolygon& p, const NewtonPolygon& q);
/// The k-fold Minkowski sum of p with itself.
NewtonPolygon scale(const NewtonPolygon& p, std::uint64_t k);

/// Boundary piece crossed by the line s = t. When the crossing is a vertex,
/// the piece on the side s >= t is returned and `vertex_crossing` is set.
Edge diagonal_edge(const NewtonPolygon& p);

/// t0 such that (t0, t0) lies on the boundary.
Rational diagonal_crossing(const NewtonPolygon& p);

bool contains_point(const NewtonPolygon& p, const Rational& s, const Rational& t);

/// Weights whose leading face is exactly the given vertex: the sum of the
/// normals of the two boundary pieces meeting there.
WeightVector vertex_weights(const NewtonPolygon& p, std::size_t index);

/// Static SVG drawing with axes, the diagonal, and the crossing point marked.
std::string render_svg(const NewtonPolygon& p);

}  // namespace lctk
