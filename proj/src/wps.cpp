#include "lctk/wps.hpp"

#include <numeric>

#include "lctk/errors.hpp"

namespace lctk {

WeightedSpace::WeightedSpace(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw DomainError("a weighted projective space needs at least two weights");
  for (auto w : weights_)
    if (w < 1) throw DomainError("weights must be positive integers");
}

bool is_well_formed(const WeightedSpace& space) {
  const auto& w = space.weights();
  for (std::size_t skip = 0; skip < w.size(); ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != skip) g = std::gcd(g, w[i]);
    if (g != 1) return false;
  }
  return true;
}

ConeReduction cone_reduce(const WeightedSpace& space, std::size_t a0_index) {
  const auto& w = space.weights();
  if (a0_index >= w.size()) throw DomainError("designated index out of range");
  std::int64_t m = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != a0_index) m = std::gcd(m, w[i]);
  std::vector<std::int64_t> r(w);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (i != a0_index) r[i] /= m;
  return {m, WeightedSpace(std::move(r))};
}

bool fano_check(const HypersurfaceClass& h) {
  const auto& w = h.ambient.weights();
  return h.degree < std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

namespace {

void enumerate(const std::vector<std::int64_t>& w, std::size_t i, std::int64_t rest, ExponentVector& cur,
               std::vector<ExponentVector>& out) {
  if (i + 1 == w.size()) {
    if (rest % w[i] == 0) {
      cur[i] = static_cast<std::uint32_t>(rest / w[i]);
      out.push_back(cur);
    }
    return;
  }
  for (std::int64_t e = 0; e * w[i] <= rest; ++e) {
    cur[i] = static_cast<std::uint32_t>(e);
    enumerate(w, i + 1, rest - e * w[i], cur, out);
  }
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(const WeightedSpace& space, std::int64_t d) {
  std::vector<ExponentVector> out;
  if (d < 0) return out;
  ExponentVector cur(space.weights().size(), 0);
  enumerate(space.weights(), 0, d, cur, out);
  return out;
}

Integer count_monomials(const WeightedSpace& space, std::int64_t d) {
  if (d < 0) return 0;
  std::vector<Integer> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (auto w : space.weights())
    for (std::int64_t k = w; k <= d; ++k) ways[static_cast<std::size_t>(k)] += ways[static_cast<std::size_t>(k - w)];
  return ways[static_cast<std::size_t>(d)];
}

Integer h0_hypersurface(const HypersurfaceClass& h, std::int64_t d) {
  if (d < 0) return 0;
  return count_monomials(h.ambient, d) - count_monomials(h.ambient, d - h.degree);
}

Rational intersection_h2(const HypersurfaceClass& h) {
  Integer prod = 1;
  for (auto w : h.ambient.weights()) prod *= static_cast<long>(w);
  return Rational(Integer(static_cast<long>(h.degree)), prod);
}

Rational class_pairing(const HypersurfaceClass& h, const Rational& c1, const Rational& c2) {
  return c1 * c2 * intersection_h2(h);
}

}  // namespace lctk
