#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lctk/lct.hpp"
#include "lctk/polynomial.hpp"
#include "lctk/wps.hpp"

namespace lctk {

/// The surface w = z^2 x + z r_low(x, y) + r_high(x, y) in P(1, 1, n, 2n+1),
/// with r_low of degree n+1 and r_high of degree 2n+1. In the chart z = 1 the
/// curve {w = 0} is the zero set of g = x + r_low + r_high.
struct FamilyInstance {
  std::int64_t n = 0;
  Polynomial r_low;
  Polynomial r_high;
  Polynomial g;
  /// Least exponent with y^nu a term of g.
  std::uint64_t nu = 0;
};

bool quasi_smooth_necessary(std::int64_t n, const Polynomial& r_low, const Polynomial& r_high);

/// Throws DomainError on wrong homogeneity or when neither y^(n+1) nor
/// y^(2n+1) occurs.
FamilyInstance make_instance(std::int64_t n, const Polynomial& r_low, const Polynomial& r_high);

/// The hypersurface Y_n of degree 2n+1 in P(1, 1, n, 2n+1).
HypersurfaceClass surface_class(std::int64_t n);

/// lambda, ell, v, sigma, K and tau for (n, m). The closed forms are
/// cross-checked against monomial counts; a mismatch throws Error.
CertificationContext constants(std::int64_t n, std::int64_t m);

struct BasisMonomial {
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
  std::uint32_t j = 0;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

/// x^n1 y^n2 z^j with n1 + n2 = (3m - j) n, 0 <= j <= 3m.
std::vector<BasisMonomial> canonical_basis(std::int64_t n, std::int64_t m);

struct InequalityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool strict = false;
  bool holds = false;
  bool tight = false;
};

struct InequalityReport {
  std::int64_t n = 0;
  std::vector<InequalityCheck> checks;
  bool passes = false;
  Rational c_max;
  Rational d_max;
};

InequalityReport smooth_locus_report(std::int64_t n);

struct MinMSearch {
  std::optional<std::int64_t> m;
  std::int64_t horizon = 0;
  /// Once true, the inequality stayed true up to the horizon.
  bool stays_true = false;
  /// rhs - lhs at m = 1..horizon.
  std::vector<Rational> margins;
};

MinMSearch newton_claim_min_m(std::int64_t n, std::int64_t horizon = 50);
MinMSearch sigma_claim_min_m(std::int64_t n, std::int64_t horizon = 50);

/// Seed of trial `index` under `master_seed`.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index);

/// Square integer matrix with entries in [-9, 9] and nonzero determinant.
std::vector<std::vector<std::int64_t>> sample_matrix(std::size_t size, std::uint64_t seed);

/// f_i = sum_j M_ij x^n1_j y^n2_j over the canonical basis.
std::vector<Polynomial> basis_from_matrix(const std::vector<std::vector<std::int64_t>>& matrix, std::int64_t n,
                                          std::int64_t m);

std::vector<Polynomial> sample_basis(const CertificationContext& ctx, std::uint64_t seed);

/// FNV-1a digest of the matrix entries, as 16 hex digits.
std::string matrix_hash(const std::vector<std::vector<std::int64_t>>& matrix);

struct TrialResult {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::string basis_hash;
  bool f_polygon_contains_v = false;
  bool h_polygon_contains_newton_point = false;
  LctCertificate certificate;
  /// Not part of the serialized form.
  double wall_seconds = 0;
};

TrialResult certify_trial(const FamilyInstance& inst, const CertificationContext& ctx, std::uint64_t master_seed,
                          std::uint64_t index);

/// Certification of the canonical basis, whose product is (xy)^v.
TrialResult certify_canonical(const FamilyInstance& inst, const CertificationContext& ctx);

/// h with the basis product replaced by x^(3 ell m n).
ProductForm adversarial_product(const FamilyInstance& inst, const CertificationContext& ctx);

struct DeltaReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t certified = 0;
  std::uint64_t refuted = 0;
  std::uint64_t inconclusive = 0;
  InequalityReport inequalities;
  MinMSearch newton_min_m;
  MinMSearch sigma_min_m;
  std::string verdict;
  std::string caveat;
};

/// Runs `trials` trials on up to `jobs` threads; results are ordered by index.
std::vector<TrialResult> run_trials(const FamilyInstance& inst, const CertificationContext& ctx,
                                    std::uint64_t master_seed, std::uint64_t trials, unsigned jobs = 1);

DeltaReport delta_report(const FamilyInstance& inst, std::int64_t m, const std::vector<TrialResult>& trials);

/// Trials are refused above this ell unless explicitly overridden.
inline constexpr std::int64_t kDefaultEllLimit = 200;

}  // namespace lctk
