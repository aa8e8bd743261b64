#pragma once

#include <utility>
#include <vector>

#include "lctk/rational.hpp"

// Dense univariate polynomials over Z and Q, and factorization over Q.
// Coefficient i multiplies t^i; representations never carry trailing zeros,
// so the zero polynomial is the empty vector.
namespace lctk::univariate {

using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

int degree(const ZPoly& f);
int degree(const QPoly& f);

QPoly to_rational(const ZPoly& f);

/// Splits f = content * primitive with the primitive part's leading
/// coefficient positive. Throws for the zero polynomial.
std::pair<Rational, ZPoly> content_and_primitive(const QPoly& f);

QPoly derivative(const QPoly& f);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd over Q; gcd(0, 0) is the zero polynomial.
QPoly gcd(const QPoly& a, const QPoly& b);

struct SquarefreePart {
  ZPoly poly;  // primitive, positive leading coefficient, degree >= 1
  unsigned mult;
};

/// Yun's algorithm; the parts are pairwise coprime and square-free.
std::vector<SquarefreePart> squarefree_decomposition(const ZPoly& f);

/// Irreducible factors over Q of a primitive square-free polynomial,
/// each primitive with positive leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

struct Factorization {
  Rational unit;
  std::vector<std::pair<ZPoly, unsigned>> factors;
};

/// f = unit * prod factor^mult with irreducible primitive factors, sorted by
/// degree and then coefficients.
Factorization factor(const QPoly& f);

}  // namespace lctk::univariate
