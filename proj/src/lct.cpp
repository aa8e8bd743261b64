#include "lctk/lct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lctk/errors.hpp"

namespace lctk {

namespace {

const std::pair<StepKind, const char*> kStepNames[] = {
    {StepKind::DiagonalEdge, "diagonal-edge"}, {StepKind::VerticalCase, "vertical-case"},
    {StepKind::HorizontalCase, "horizontal-case"}, {StepKind::CaseA, "case-a"},
    {StepKind::CaseB, "case-b"}, {StepKind::CaseC, "case-c"}, {StepKind::Shift, "shift"}};

const std::pair<Conclusion, const char*> kConclusionNames[] = {{Conclusion::Certified, "certified"},
                                                               {Conclusion::Exact, "exact"},
                                                               {Conclusion::Refuted, "refuted"},
                                                               {Conclusion::Inconclusive, "inconclusive"},
                                                               {Conclusion::NoSingularity, "no-singularity"}};

const char* kNoSingularity = "no singularity, threshold unbounded";

Rational inv(std::uint64_t k) { return Rational(Integer(1), Integer(static_cast<unsigned long>(k))); }

Rational weighted_ratio(const WeightVector& w, std::int64_t weighted_degree) {
  return Rational(w[0] + w[1], weighted_degree);
}

CertStep make_step(StepKind kind, const std::string& subject, const QhFactorization& q, std::string note = {}) {
  CertStep s;
  s.kind = kind;
  s.subject = subject;
  s.weights = q.weights;
  s.factors = summarize(q);
  s.weighted_degree = q.weighted_degree;
  s.evaluated_min = qh_minimum(s.factors, s.weights, s.weighted_degree);
  s.note = std::move(note);
  return s;
}

/// Index of the vertex a non-sloped diagonal piece refers to.
std::size_t diagonal_vertex_index(const NewtonPolygon& p, const Edge& e) {
  const auto& v = p.vertices();
  if (e.orientation == EdgeOrientation::Vertical) return 0;
  if (e.orientation == EdgeOrientation::Horizontal && !e.vertex_crossing) return v.size() - 1;
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), e.start) - v.begin());
}

struct ShiftPlan {
  std::optional<ShiftData> data;
  std::string failure;
};

/// Decides how to straighten the factor of largest multiplicity.
ShiftPlan plan_shift(const QhFactor& f) {
  ShiftPlan plan;
  const Polynomial& p = f.poly;
  if (f.x_degree == 1) {
    plan.data = ShiftData{p.coefficient({0, static_cast<std::uint32_t>(f.y_degree)}), f.y_degree, false};
    return plan;
  }
  if (f.y_degree == 1) {
    // x^alpha + A*y: in exchanged coordinates this is x + (1/A)*y^alpha.
    const Rational a = p.coefficient({0, 1});
    plan.data = ShiftData{a.inverse(), f.x_degree, true};
    return plan;
  }
  const std::uint64_t g = std::gcd(f.x_degree, f.y_degree);
  if (f.x_degree == g || f.y_degree == g)
    plan.failure = "degenerate factor " + p.str() + " has no rational root";
  else
    plan.failure = "degenerate factor " + p.str() + " has neither alpha = 1 nor beta = 1";
  return plan;
}

ProductForm apply_shift(const ProductForm& h, const ShiftData& s) {
  if (!s.swapped) {
    const Polynomial g = Polynomial::monomial({0, static_cast<std::uint32_t>(s.beta)}, -s.root);
    return shift_substitute(h, 0, g);
  }
  const Polynomial g = Polynomial::monomial({static_cast<std::uint32_t>(s.beta), 0}, -s.root);
  return shift_substitute(h, 1, g);
}

ProductForm as_product(const Polynomial& f) {
  ProductForm h;
  h.append(f, 1);
  return h;
}

void conclude(LctCertificate& cert, Conclusion c, Rational value, std::string reason = {}) {
  cert.conclusion = c;
  cert.value = std::move(value);
  cert.reason = std::move(reason);
}

}  // namespace

std::string to_string(StepKind k) {
  for (const auto& [kind, name] : kStepNames)
    if (kind == k) return name;
  return "diagonal-edge";
}

StepKind step_kind_from_string(const std::string& s) {
  for (const auto& [kind, name] : kStepNames)
    if (s == name) return kind;
  throw ParseError("unknown step kind '" + s + "'");
}

std::string to_string(Conclusion c) {
  for (const auto& [kind, name] : kConclusionNames)
    if (kind == c) return name;
  return "inconclusive";
}

Conclusion conclusion_from_string(const std::string& s) {
  for (const auto& [kind, name] : kConclusionNames)
    if (s == name) return kind;
  throw ParseError("unknown conclusion '" + s + "'");
}

FactorSummary summarize(const QhFactorization& q) {
  FactorSummary s{q.x_power, q.y_power, {}};
  for (const auto& f : q.factors) s.c.push_back(f.mult);
  return s;
}

Rational qh_minimum(const FactorSummary& s, const WeightVector& w, std::int64_t weighted_degree) {
  if (w.size() != 2) throw VariableMismatchError("the minimum formula needs two weights");
  if (weighted_degree <= 0) throw DomainError("the leading term does not vanish at the origin");
  Rational best = weighted_ratio(w, weighted_degree);
  if (s.a > 0) best = std::min(best, inv(s.a));
  if (s.b > 0) best = std::min(best, inv(s.b));
  for (auto c : s.c) best = std::min(best, inv(c));
  return best;
}

Rational lct_quasihomogeneous(const QhFactorization& q) { return qh_minimum(summarize(q), q.weights, q.weighted_degree); }

Rational lct_quasihomogeneous(const Polynomial& p_w, const WeightVector& w) {
  if (!p_w.is_zero() && !p_w.vanishes_at_origin()) throw DomainError("polynomial does not vanish at the origin");
  return lct_quasihomogeneous(quasihomog_factor(p_w, w));
}

std::optional<LctBounds> kollar_bounds(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (f.num_vars() != 2) throw VariableMismatchError("kollar_bounds expects a bivariate polynomial");
  if (!f.vanishes_at_origin()) return std::nullopt;
  const Polynomial lead = weighted_leading_term(f, w);
  const Rational upper = weighted_ratio(w, weighted_multiplicity(f, w));
  const Rational lower = lct_quasihomogeneous(lead, w);
  return LctBounds{lower, upper, lower == upper};
}

LctResult lct_exact(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  return lct_exact(as_product(f));
}

LctResult lct_exact(const ProductForm& input) {
  LctResult result;
  LctCertificate& cert = result.certificate;
  if (input.num_vars() != 2) throw VariableMismatchError("lct_exact expects bivariate input");
  if (!input.vanishes_at_origin()) {
    conclude(cert, Conclusion::NoSingularity, Rational(0), kNoSingularity);
    return result;
  }

  ProductForm h = input;
  std::optional<Rational> lower, upper;
  std::optional<std::uint64_t> component_mult;
  std::uint64_t last_beta = 0;
  const std::uint64_t guard = input.total_degree() + 2;

  auto finish_exact = [&](const Rational& value) {
    result.bounds = LctBounds{value, value, true};
    conclude(cert, Conclusion::Exact, value);
    return result;
  };
  auto finish_inconclusive = [&](std::string reason) {
    result.bounds = LctBounds{*lower, *upper, false};
    conclude(cert, Conclusion::Inconclusive, *upper, std::move(reason));
    return result;
  };

  for (std::uint64_t round = 0; round <= guard; ++round) {
    const NewtonPolygon poly = polygon_of(h);
    const Edge edge = diagonal_edge(poly);
    const Rational t0 = diagonal_crossing(poly);

    if (edge.vertex_crossing || edge.orientation != EdgeOrientation::Sloped) {
      const WeightVector w = vertex_weights(poly, diagonal_vertex_index(poly, edge));
      const QhFactorization q = quasihomog_factor(product_leading_term(h, w), w);
      StepKind kind = StepKind::DiagonalEdge;
      std::string note = "crossing at a vertex";
      if (!edge.vertex_crossing) {
        kind = edge.orientation == EdgeOrientation::Vertical ? StepKind::VerticalCase : StepKind::HorizontalCase;
        note.clear();
      }
      cert.steps.push_back(make_step(kind, "h", q, note));
      return finish_exact(cert.steps.back().evaluated_min);
    }

    const WeightVector w = edge.weights();
    const QhFactorization q = quasihomog_factor(product_leading_term(h, w), w);
    cert.steps.push_back(make_step(StepKind::DiagonalEdge, "h", q));
    const Rational candidate = cert.steps.back().evaluated_min;
    const Rational kollar_upper = t0.inverse();
    lower = lower ? std::max(*lower, candidate) : candidate;
    upper = upper ? std::min(*upper, kollar_upper) : kollar_upper;
    if (candidate == kollar_upper) return finish_exact(candidate);

    // Components of multiplicity E through the origin force lct <= 1/E.
    if (!component_mult) component_mult = max_origin_component_mult(input);
    if (*component_mult > 0) {
      const Rational cap = inv(*component_mult);
      upper = std::min(*upper, cap);
      if (candidate >= cap) {
        cert.steps.back().note = "bounded by a component of multiplicity " + std::to_string(*component_mult);
        return finish_exact(candidate);
      }
    }

    const auto heavy = std::max_element(q.factors.begin(), q.factors.end(),
                                        [](const QhFactor& a, const QhFactor& b) { return a.mult < b.mult; });
    if (heavy == q.factors.end() || Rational(static_cast<long>(heavy->mult)) <= t0)
      return finish_inconclusive("minimum is not attained by a degenerate factor");
    const ShiftPlan plan = plan_shift(*heavy);
    if (!plan.data) return finish_inconclusive(plan.failure);
    if (plan.data->beta <= last_beta) return finish_inconclusive("shift exponent did not increase");
    last_beta = plan.data->beta;

    CertStep step = make_step(StepKind::Shift, "h", q);
    step.shift = plan.data;
    cert.steps.push_back(step);
    h = apply_shift(h, *plan.data);
  }
  return finish_inconclusive("recursion guard exceeded");
}

// ---------------------------------------------------------------------------
// Certification of product forms

namespace {

struct CertifyState {
  const CertificationContext& ctx;
  std::size_t distinguished;
  LctCertificate cert;
};

ProductForm rest_of(const ProductForm& h, std::size_t distinguished) {
  ProductForm f;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (i != distinguished) f.append(h.factors()[i].poly, h.factors()[i].mult);
  return f;
}

bool is_monomial(const Polynomial& p, std::uint32_t s, std::uint32_t t) {
  return p.size() == 1 && p.terms().begin()->first == ExponentVector{s, t};
}

bool is_pure_y_power(const Polynomial& p) { return p.size() == 1 && p.terms().begin()->first[0] == 0; }

/// Leading face of h for w' is the leading face of f moved by `offset`.
bool translated_face(const ProductForm& h, const ProductForm& f, const WeightVector& w, LatticePoint offset) {
  const auto fv = polygon_of(product_leading_term(f, w)).vertices();
  const auto hv = polygon_of(product_leading_term(h, w)).vertices();
  if (fv.size() != hv.size()) return false;
  for (std::size_t i = 0; i < fv.size(); ++i)
    if (hv[i].s != fv[i].s + offset.s || hv[i].t != fv[i].t + offset.t) return false;
  return true;
}

/// Records the threshold comparison for a lower bound `value` that is exact
/// when `exact` is set. Returns true when the certificate is concluded.
bool settle(LctCertificate& cert, const Rational& value, bool exact, const Rational& tau) {
  if (value >= tau) {
    conclude(cert, Conclusion::Certified, tau);
    return true;
  }
  if (exact) {
    conclude(cert, Conclusion::Refuted, value, "threshold value is below the target");
    return true;
  }
  return false;
}

void fallback_exact(LctCertificate& cert, const ProductForm& h, const Rational& tau) {
  LctResult r = lct_exact(h);
  for (auto& s : r.certificate.steps) cert.steps.push_back(std::move(s));
  if (!r.bounds) {
    conclude(cert, Conclusion::Certified, tau);
    return;
  }
  if (r.bounds->lower >= tau) {
    conclude(cert, Conclusion::Certified, tau);
  } else if (r.bounds->exact) {
    conclude(cert, Conclusion::Refuted, r.bounds->lower, "threshold value is below the target");
  } else if (r.bounds->upper < tau) {
    conclude(cert, Conclusion::Refuted, r.bounds->upper, "upper bound is below the target");
  } else {
    conclude(cert, Conclusion::Inconclusive, r.bounds->upper, r.certificate.reason);
  }
}

/// Evaluation on the full product once the basis part no longer needs shifting.
void small_c(CertifyState& st, const ProductForm& h, const ProductForm& f, const Polynomial& g, std::uint64_t nu) {
  LctCertificate& cert = st.cert;
  const NewtonPolygon poly = polygon_of(h);
  const Edge edge = diagonal_edge(poly);
  const Rational t0 = diagonal_crossing(poly);

  if (edge.vertex_crossing || edge.orientation != EdgeOrientation::Sloped) {
    const WeightVector w = vertex_weights(poly, diagonal_vertex_index(poly, edge));
    const QhFactorization q = quasihomog_factor(product_leading_term(h, w), w);
    StepKind kind = StepKind::DiagonalEdge;
    if (!edge.vertex_crossing)
      kind = edge.orientation == EdgeOrientation::Vertical ? StepKind::VerticalCase : StepKind::HorizontalCase;
    cert.steps.push_back(make_step(kind, "h", q, edge.vertex_crossing ? "crossing at a vertex" : ""));
    settle(cert, cert.steps.back().evaluated_min, true, st.ctx.tau);
    return;
  }

  const WeightVector w = edge.weights();
  const Polynomial g_lead = weighted_leading_term(g, w);
  StepKind kind = StepKind::DiagonalEdge;
  std::string note;
  const auto K = static_cast<std::int64_t>(h.factors()[0].mult);
  if (g_lead.size() >= 2) {
    kind = StepKind::CaseA;
  } else if (is_monomial(g_lead, 1, 0)) {
    kind = StepKind::CaseB;
    note = translated_face(h, f, w, {K, 0}) ? "face translated by (K, 0)" : "face translation by (K, 0) fails";
  } else if (nu > 0 && is_pure_y_power(g_lead)) {
    kind = StepKind::CaseC;
    const auto shift = static_cast<std::int64_t>(nu) * K;
    note = translated_face(h, f, w, {0, shift}) ? "face translated by (0, nu*K)" : "face translation by (0, nu*K) fails";
  } else {
    note = "leading term of g is " + g_lead.str();
  }
  const QhFactorization q = quasihomog_factor(product_leading_term(h, w), w);
  cert.steps.push_back(make_step(kind, "h", q, note));
  const Rational value = cert.steps.back().evaluated_min;
  if (settle(cert, value, value == t0.inverse(), st.ctx.tau)) return;
  fallback_exact(cert, h, st.ctx.tau);
}

}  // namespace

LctCertificate lct_product_certify(const ProductForm& input, std::size_t distinguished,
                                   const CertificationContext& ctx) {
  CertifyState st{ctx, distinguished, {}};
  LctCertificate& cert = st.cert;
  if (distinguished >= input.size()) throw DomainError("distinguished factor index out of range");
  if (input.num_vars() != 2) throw VariableMismatchError("certification expects bivariate factors");
  if (ctx.tau.sign() <= 0) throw DomainError("certification target must be positive");

  if (ctx.n < 4) {
    conclude(cert, Conclusion::Inconclusive, Rational(0), "context has n < 4, outside the certified range");
    return cert;
  }

  // Keep the distinguished factor first from here on.
  ProductForm h;
  h.append(input.factors()[distinguished].poly, input.factors()[distinguished].mult);
  for (std::size_t i = 0; i < input.size(); ++i)
    if (i != distinguished) h.append(input.factors()[i].poly, input.factors()[i].mult);

  const Polynomial& g0 = h.factors()[0].poly;
  cert.checks.push_back({"g vanishes at the origin and contains x",
                         g0.vanishes_at_origin() && !g0.coefficient({1, 0}).is_zero()});
  std::uint64_t nu = 0;
  for (const auto& [e, c] : g0.terms())
    if (e[0] == 0 && e[1] > 0) {
      nu = e[1];
      break;
    }
  cert.checks.push_back({"g contains a pure power of y", nu > 0});
  cert.checks.push_back(
      {"nu in {n+1, 2n+1}", nu == static_cast<std::uint64_t>(ctx.n + 1) || nu == static_cast<std::uint64_t>(2 * ctx.n + 1)});
  cert.checks.push_back({"multiplicity of g equals K", h.factors()[0].mult == static_cast<std::uint64_t>(ctx.K)});

  ProductForm f = rest_of(h, 0);
  const Rational v(static_cast<long>(ctx.v));
  cert.checks.push_back({"f-polygon contains (v, v)", contains_point(polygon_of(f), v, v)});
  const Rational newton_point = Rational(2 * ctx.K) / ctx.lambda;
  cert.checks.push_back({"h-polygon contains (2K/lambda, 2K/lambda)", contains_point(polygon_of(h), newton_point, newton_point)});

  if (!h.vanishes_at_origin()) {
    conclude(cert, Conclusion::Certified, ctx.tau, kNoSingularity);
    return cert;
  }

  std::uint64_t last_beta = 0;
  const std::uint64_t guard = h.total_degree() + 2;
  for (std::uint64_t round = 0; round <= guard; ++round) {
    const Polynomial& g = h.factors()[0].poly;
    if (f.empty() || !f.vanishes_at_origin()) {
      small_c(st, h, f, g, nu);
      return cert;
    }
    const NewtonPolygon fpoly = polygon_of(f);
    const Edge edge = diagonal_edge(fpoly);

    if (!edge.vertex_crossing && edge.orientation == EdgeOrientation::Vertical && nu > 0) {
      const WeightVector w{static_cast<std::int64_t>(nu), 1};
      const QhFactorization q = quasihomog_factor(product_leading_term(h, w), w);
      cert.steps.push_back(make_step(StepKind::VerticalCase, "h", q));
      const Rational value = cert.steps.back().evaluated_min;
      const Rational upper = weighted_ratio(w, q.weighted_degree);
      if (!settle(cert, value, value == upper, ctx.tau)) fallback_exact(cert, h, ctx.tau);
      return cert;
    }
    if (edge.vertex_crossing || edge.orientation != EdgeOrientation::Sloped) {
      small_c(st, h, f, g, nu);
      return cert;
    }

    const WeightVector w = edge.weights();
    const QhFactorization q = quasihomog_factor(product_leading_term(f, w), w);
    cert.steps.push_back(make_step(StepKind::DiagonalEdge, "f", q));
    const std::uint64_t c = q.max_factor_mult();
    if (Rational(static_cast<long>(c)) <= ctx.sigma) {
      small_c(st, h, f, g, nu);
      return cert;
    }

    const auto heavy = std::max_element(q.factors.begin(), q.factors.end(),
                                        [](const QhFactor& a, const QhFactor& b) { return a.mult < b.mult; });
    const ShiftPlan plan = plan_shift(*heavy);
    if (!plan.data) {
      conclude(cert, Conclusion::Inconclusive, Rational(0), plan.failure);
      return cert;
    }
    if (plan.data->beta <= last_beta) {
      conclude(cert, Conclusion::Inconclusive, Rational(0), "shift exponent did not increase");
      return cert;
    }
    last_beta = plan.data->beta;
    CertStep step = make_step(StepKind::Shift, "f", q, plan.data->beta <= 2 ? "" : "beta exceeds 2");
    step.shift = plan.data;
    cert.steps.push_back(step);
    h = apply_shift(h, *plan.data);
    f = rest_of(h, 0);
  }
  conclude(cert, Conclusion::Inconclusive, Rational(0), "recursion guard exceeded");
  return cert;
}

std::optional<std::string> replay(const LctCertificate& cert) {
  std::map<std::string, std::uint64_t> last_beta;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertStep& s = cert.steps[i];
    Rational recomputed;
    try {
      recomputed = qh_minimum(s.factors, s.weights, s.weighted_degree);
    } catch (const Error& e) {
      return "step " + std::to_string(i) + ": " + e.what();
    }
    if (recomputed != s.evaluated_min)
      return "step " + std::to_string(i) + ": recorded minimum " + s.evaluated_min.str() + " differs from " +
             recomputed.str();
    if (s.kind == StepKind::Shift) {
      if (!s.shift) return "step " + std::to_string(i) + ": shift step without shift data";
      auto& prev = last_beta[s.subject];
      if (s.shift->beta <= prev) return "step " + std::to_string(i) + ": shift exponent did not increase";
      prev = s.shift->beta;
    } else if (s.shift) {
      return "step " + std::to_string(i) + ": shift data on a non-shift step";
    }
  }
  return std::nullopt;
}

}  // namespace lctk
