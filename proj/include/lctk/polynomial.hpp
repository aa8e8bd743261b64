#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lctk/rational.hpp"

namespace lctk {

/// Exponents of one monomial, one entry per variable. In the bivariate case
/// the entries are (s, t) for x^s y^t.
using ExponentVector = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Positive integer weights, one per variable.
class WeightVector {
 public:
  WeightVector(std::initializer_list<std::int64_t> weights);
  explicit WeightVector(std::vector<std::int64_t> weights);

  std::size_t size() const { return weights_.size(); }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::int64_t>& values() const { return weights_; }
  std::int64_t sum() const;
  std::int64_t gcd() const { return gcd_; }
  /// The weights divided by their gcd.
  WeightVector primitive() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t gcd_ = 1;
};

/// Sparse polynomial with rational coefficients. Zero coefficients are never
/// stored; iteration follows GrlexLess.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Rational, GrlexLess>;

  explicit Polynomial(std::size_t num_vars = 2) : num_vars_(num_vars) {}

  static Polynomial constant(const Rational& c, std::size_t num_vars = 2);
  static Polynomial monomial(const ExponentVector& e, const Rational& c = Rational(1));
  static Polynomial variable(std::size_t index, std::size_t num_vars = 2);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·x^e, merging with an existing term and dropping zero results.
  void add_term(const ExponentVector& e, const Rational& c);
  Rational coefficient(const ExponentVector& e) const;
  Rational constant_term() const;
  bool vanishes_at_origin() const { return constant_term().is_zero(); }

  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Smallest exponent of `var` over all terms; 0 for the zero polynomial.
  std::uint32_t min_exponent(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form such as "x^2 - 2/3*y^3".
  std::string str() const;

 private:
  void check_same_vars(const Polynomial& o) const;

  std::size_t num_vars_;
  Terms terms_;
};

Polynomial multiply(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, std::uint64_t k);

/// Weight of a single exponent vector.
std::int64_t weight_of(const ExponentVector& e, const WeightVector& w);

/// Lowest weight over the terms of p.
std::int64_t weighted_multiplicity(const Polynomial& p, const WeightVector& w);

/// Sum of the terms of p that attain the weighted multiplicity.
Polynomial weighted_leading_term(const Polynomial& p, const WeightVector& w);

bool is_quasi_homogeneous(const Polynomial& p, const WeightVector& w);

/// p with variable `var` replaced by (x_var + g). g must not involve x_var.
Polynomial shift_substitute(const Polynomial& p, std::size_t var, const Polynomial& g);

/// Exchanges x and y of a bivariate polynomial.
Polynomial swap_variables(const Polynomial& p);

/// Exact quotient p / q; throws DomainError when q does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

/// A polynomial kept as an unexpanded product of powers.
struct ProductFactor {
  Polynomial poly;
  std::uint64_t mult = 1;
  friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

class ProductForm {
 public:
  ProductForm() = default;
  explicit ProductForm(std::vector<ProductFactor> factors);

  const std::vector<ProductFactor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  void append(Polynomial poly, std::uint64_t mult = 1);

  std::size_t num_vars() const;
  /// Total degree of the expanded product.
  std::uint64_t total_degree() const;
  bool vanishes_at_origin() const;
  Polynomial expand() const;

  friend bool operator==(const ProductForm&, const ProductForm&) = default;

 private:
  std::vector<ProductFactor> factors_;
};

/// Factor-wise weighted leading terms; the product is never expanded.
ProductForm product_leading_term(const ProductForm& h, const WeightVector& w);

std::int64_t weighted_multiplicity(const ProductForm& h, const WeightVector& w);

/// Applies shift_substitute to every factor.
ProductForm shift_substitute(const ProductForm& h, std::size_t var, const Polynomial& g);

}  // namespace lctk
