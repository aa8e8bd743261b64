#pragma once

#include <cstdint>
#include <vector>

#include "lctk/polynomial.hpp"

namespace lctk {

/// Weighted projective space P(a_0, ..., a_n).
class WeightedSpace {
 public:
  explicit WeightedSpace(std::vector<std::int64_t> weights);

  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::size_t dimension() const { return weights_.size() - 1; }

  friend bool operator==(const WeightedSpace&, const WeightedSpace&) = default;

 private:
  std::vector<std::int64_t> weights_;
};

struct HypersurfaceClass {
  WeightedSpace ambient;
  std::int64_t degree;
};

/// Every n of the n+1 weights have gcd 1.
bool is_well_formed(const WeightedSpace& space);

struct ConeReduction {
  std::int64_t m = 1;
  WeightedSpace reduced;
};

/// Divides every weight other than the one at `a0_index` by their gcd m.
ConeReduction cone_reduce(const WeightedSpace& space, std::size_t a0_index = 0);

/// degree < sum of weights.
bool fano_check(const HypersurfaceClass& h);

/// Exponent vectors of weighted degree d in lexicographic order.
std::vector<ExponentVector> monomials_of_degree(const WeightedSpace& space, std::int64_t d);

/// Number of monomials of weighted degree d; 0 for negative d.
Integer count_monomials(const WeightedSpace& space, std::int64_t d);

/// count(d) - count(d - degree).
Integer h0_hypersurface(const HypersurfaceClass& h, std::int64_t d);

/// H^2 = degree / prod weights.
Rational intersection_h2(const HypersurfaceClass& h);

/// (c1 H) . (c2 H).
Rational class_pairing(const HypersurfaceClass& h, const Rational& c1, const Rational& c2);

}  // namespace lctk
