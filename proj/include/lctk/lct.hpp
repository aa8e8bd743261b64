#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lctk/factor.hpp"
#include "lctk/newton.hpp"
#include "lctk/polynomial.hpp"

namespace lctk {

/// Two-sided bounds on the log canonical threshold at the origin.
struct LctBounds {
  Rational lower;
  Rational upper;
  bool exact = false;
  friend bool operator==(const LctBounds&, const LctBounds&) = default;
};

enum class StepKind { DiagonalEdge, VerticalCase, HorizontalCase, CaseA, CaseB, CaseC, Shift };
std::string to_string(StepKind k);
StepKind step_kind_from_string(const std::string& s);

/// Data of a quasi-homogeneous leading term that the minimum formula reads.
struct FactorSummary {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::vector<std::uint64_t> c;
  friend bool operator==(const FactorSummary&, const FactorSummary&) = default;
};

FactorSummary summarize(const QhFactorization& q);

/// Coordinate change x -> x - root*y^beta (or the same with x and y exchanged
/// when `swapped` is set) that moves the factor x + root*y^beta to x.
struct ShiftData {
  Rational root;
  std::uint64_t beta = 0;
  bool swapped = false;
  friend bool operator==(const ShiftData&, const ShiftData&) = default;
};

struct CertStep {
  StepKind kind = StepKind::DiagonalEdge;
  /// "f" for the basis product, "h" for the full product (or the input of lct_exact).
  std::string subject = "h";
  WeightVector weights{1, 1};
  FactorSummary factors;
  std::int64_t weighted_degree = 0;
  Rational evaluated_min;
  std::optional<ShiftData> shift;
  std::string note;
  friend bool operator==(const CertStep&, const CertStep&) = default;
};

enum class Conclusion { Certified, Exact, Refuted, Inconclusive, NoSingularity };
std::string to_string(Conclusion c);
Conclusion conclusion_from_string(const std::string& s);

struct NamedCheck {
  std::string name;
  bool holds = false;
  friend bool operator==(const NamedCheck&, const NamedCheck&) = default;
};

struct LctCertificate {
  std::vector<CertStep> steps;
  std::vector<NamedCheck> checks;
  Conclusion conclusion = Conclusion::Inconclusive;
  /// Certified: the threshold tau. Exact/Refuted: the threshold value or upper bound.
  Rational value;
  std::string reason;
  friend bool operator==(const LctCertificate&, const LctCertificate&) = default;
};

struct LctResult {
  /// Unset when the input does not vanish at the origin.
  std::optional<LctBounds> bounds;
  LctCertificate certificate;
};

/// min{1/a, 1/b, 1/c_i, (w_x + w_y)/weighted_degree}, skipping zero data.
Rational qh_minimum(const FactorSummary& s, const WeightVector& w, std::int64_t weighted_degree);

/// Threshold of a quasi-homogeneous polynomial vanishing at the origin.
Rational lct_quasihomogeneous(const Polynomial& p_w, const WeightVector& w);
Rational lct_quasihomogeneous(const QhFactorization& q);

/// Returns nullopt when f(0, 0) != 0.
std::optional<LctBounds> kollar_bounds(const Polynomial& f, const WeightVector& w);

LctResult lct_exact(const Polynomial& f);
LctResult lct_exact(const ProductForm& h);

/// Derived constants of one certification run.
struct CertificationContext {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t ell = 0;
  std::int64_t v = 0;
  Rational sigma;
  Rational lambda;
  Rational tau;
  std::int64_t K = 0;
  friend bool operator==(const CertificationContext&, const CertificationContext&) = default;
};

/// Decides whether lct_0(h) >= ctx.tau for h = g^K * prod f_i, where g is the
/// factor at index `distinguished`.
LctCertificate lct_product_certify(const ProductForm& h, std::size_t distinguished, const CertificationContext& ctx);

/// Recomputes every recorded minimum from its recorded data and checks that
/// shift exponents increase. Returns the first failure, or nullopt.
std::optional<std::string> replay(const LctCertificate& cert);

}  // namespace lctk
