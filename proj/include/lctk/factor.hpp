#pragma once

#include <cstdint>
#include <vector>

#include "lctk/polynomial.hpp"

namespace lctk {

/// One non-monomial irreducible factor of a quasi-homogeneous polynomial,
/// normalized to be monic in x. It is an irreducible polynomial in
/// x^(x_degree/k), y^(y_degree/k) for its t-degree k.
struct QhFactor {
  Polynomial poly;
  std::uint64_t mult = 1;
  std::uint64_t x_degree = 0;
  std::uint64_t y_degree = 0;
  friend bool operator==(const QhFactor&, const QhFactor&) = default;
};

/// p = unit * x^x_power * y^y_power * prod factor^mult.
struct QhFactorization {
  WeightVector weights{1, 1};
  Rational unit{1};
  std::uint64_t x_power = 0;
  std::uint64_t y_power = 0;
  std::vector<QhFactor> factors;
  /// Weighted degree of p with respect to `weights`.
  std::int64_t weighted_degree = 0;

  Polynomial expand() const;
  /// Largest multiplicity among the non-monomial factors; 0 if there are none.
  std::uint64_t max_factor_mult() const;
};

/// Factors a bivariate polynomial that is quasi-homogeneous for w.
/// Throws NotQuasiHomogeneousError, ZeroPolynomialError.
QhFactorization quasihomog_factor(const Polynomial& p, const WeightVector& w);

/// Factors every (quasi-homogeneous) factor of h and merges equal factors.
QhFactorization quasihomog_factor(const ProductForm& h, const WeightVector& w);

/// Gcd of two bivariate polynomials over Q, normalized with leading
/// coefficient 1 in grlex order. gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Largest multiplicity of an irreducible component through the origin of
/// the curve defined by h; 0 when h does not vanish at the origin.
std::uint64_t max_origin_component_mult(const ProductForm& h);

}  // namespace lctk
