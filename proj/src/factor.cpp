#include "lctk/factor.hpp"

#include <algorithm>
#include <numeric>

#include "lctk/errors.hpp"
#include "lctk/univariate.hpp"

namespace lctk {

namespace uv = univariate;

namespace {

void require_bivariate(const Polynomial& p, const char* what) {
  if (p.num_vars() != 2) throw VariableMismatchError(std::string(what) + " expects a bivariate polynomial");
}

}  // namespace

// ---------------------------------------------------------------------------
// Quasi-homogeneous factorization

Polynomial QhFactorization::expand() const {
  Polynomial r = Polynomial::monomial({static_cast<std::uint32_t>(x_power), static_cast<std::uint32_t>(y_power)}, unit);
  for (const auto& f : factors) r = r * pow(f.poly, f.mult);
  return r;
}

std::uint64_t QhFactorization::max_factor_mult() const {
  std::uint64_t m = 0;
  for (const auto& f : factors) m = std::max(m, f.mult);
  return m;
}

QhFactorization quasihomog_factor(const Polynomial& p, const WeightVector& w) {
  require_bivariate(p, "quasihomog_factor");
  if (w.size() != 2) throw VariableMismatchError("quasihomog_factor expects two weights");
  if (p.is_zero()) throw ZeroPolynomialError();
  if (!is_quasi_homogeneous(p, w))
    throw NotQuasiHomogeneousError("polynomial " + p.str() + " is not quasi-homogeneous for the given weights");

  const WeightVector prim = w.primitive();
  const auto px = static_cast<std::uint32_t>(prim[0]);
  const auto qy = static_cast<std::uint32_t>(prim[1]);

  QhFactorization out;
  out.weights = w;
  out.weighted_degree = weight_of(p.terms().begin()->first, w);
  out.x_power = p.min_exponent(0);
  out.y_power = p.min_exponent(1);

  // After removing the monomial part every term is x^(qy*k) y^(px*(N-k)).
  uv::QPoly q;
  for (const auto& [e, c] : p.terms()) {
    const std::uint32_t s = e[0] - static_cast<std::uint32_t>(out.x_power);
    const std::size_t k = s / qy;
    if (q.size() <= k) q.resize(k + 1, Rational(0));
    q[k] = c;
  }
  const auto fac = uv::factor(q);
  out.unit = fac.unit;
  for (const auto& [g, mult] : fac.factors) {
    const auto k = static_cast<std::uint32_t>(uv::degree(g));
    const Rational lead_inv = Rational(g.back()).inverse();
    Polynomial poly(2);
    for (std::uint32_t j = 0; j <= k; ++j) {
      if (g[j] == 0) continue;
      poly.add_term({qy * j, px * (k - j)}, Rational(g[j]) * lead_inv);
    }
    out.unit *= pow(Rational(g.back()), mult);
    out.factors.push_back({std::move(poly), mult, std::uint64_t{qy} * k, std::uint64_t{px} * k});
  }
  return out;
}

QhFactorization quasihomog_factor(const ProductForm& h, const WeightVector& w) {
  QhFactorization out;
  out.weights = w;
  for (const auto& pf : h.factors()) {
    const QhFactorization part = quasihomog_factor(pf.poly, w);
    out.unit *= pow(part.unit, pf.mult);
    out.x_power += pf.mult * part.x_power;
    out.y_power += pf.mult * part.y_power;
    out.weighted_degree += static_cast<std::int64_t>(pf.mult) * part.weighted_degree;
    for (const auto& f : part.factors) {
      auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const QhFactor& g) { return g.poly == f.poly; });
      if (it == out.factors.end())
        out.factors.push_back({f.poly, f.mult * pf.mult, f.x_degree, f.y_degree});
      else
        it->mult += f.mult * pf.mult;
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const QhFactor& a, const QhFactor& b) {
    if (a.x_degree != b.x_degree) return a.x_degree < b.x_degree;
    if (a.y_degree != b.y_degree) return a.y_degree < b.y_degree;
    return a.poly.str() < b.poly.str();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate gcd over Q, viewing polynomials in Q[y][x].

namespace {

using YPoly = uv::QPoly;
using XYPoly = std::vector<YPoly>;

void trim_y(YPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

void trim_xy(XYPoly& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

YPoly ymul(const YPoly& a, const YPoly& b) {
  if (a.empty() || b.empty()) return {};
  YPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim_y(r);
  return r;
}

YPoly ysub(const YPoly& a, const YPoly& b) {
  YPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim_y(r);
  return r;
}

XYPoly to_xy(const Polynomial& p) {
  XYPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (r.size() <= e[0]) r.resize(e[0] + 1);
    auto& col = r[e[0]];
    if (col.size() <= e[1]) col.resize(e[1] + 1, Rational(0));
    col[e[1]] = c;
  }
  for (auto& col : r) trim_y(col);
  trim_xy(r);
  return r;
}

Polynomial from_xy(const XYPoly& f) {
  Polynomial p(2);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f[i].size(); ++j)
      p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, f[i][j]);
  return p;
}

YPoly content_x(const XYPoly& f) {
  YPoly g;
  for (const auto& c : f) g = uv::gcd(g, c);
  return g;
}

XYPoly divide_by_y(const XYPoly& f, const YPoly& c) {
  XYPoly r;
  for (const auto& col : f) r.push_back(col.empty() ? col : uv::divmod(col, c).first);
  return r;
}

XYPoly primitive_x(const XYPoly& f) { return divide_by_y(f, content_x(f)); }

XYPoly pseudo_remainder(XYPoly a, const XYPoly& b) {
  const YPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const YPoly la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& col : a) col = ymul(col, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ysub(a[i + shift], ymul(la, b[i]));
    trim_xy(a);
  }
  return a;
}

Polynomial normalize_lead(Polynomial p) {
  if (p.is_zero()) return p;
  return p * p.terms().rbegin()->second.inverse();
}

Polynomial derivative_x(const Polynomial& p) {
  Polynomial r(2);
  for (const auto& [e, c] : p.terms())
    if (e[0] > 0) r.add_term({e[0] - 1, e[1]}, c * Rational(static_cast<long>(e[0])));
  return r;
}

bool is_constant(const Polynomial& p) { return p.total_degree() == 0; }

struct Component {
  Polynomial poly;
  std::uint64_t mult;
};

/// Square-free parts of a primitive-in-x polynomial of positive x-degree.
void squarefree_in_x(const Polynomial& f, std::uint64_t base, std::vector<Component>& out) {
  const Polynomial fx = derivative_x(f);
  const Polynomial a = gcd(f, fx);
  Polynomial b = divide_exact(f, a);
  Polynomial c = divide_exact(fx, a);
  Polynomial d = c - derivative_x(b);
  std::uint64_t i = 1;
  while (!is_constant(b)) {
    const Polynomial ai = gcd(b, d);
    if (!is_constant(ai)) out.push_back({ai, base * i});
    b = divide_exact(b, ai);
    c = divide_exact(d, ai);
    d = c - derivative_x(b);
    ++i;
  }
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_bivariate(a, "gcd");
  require_bivariate(b, "gcd");
  if (a.is_zero()) return normalize_lead(b);
  if (b.is_zero()) return normalize_lead(a);
  XYPoly A = to_xy(a), B = to_xy(b);
  const YPoly c = uv::gcd(content_x(A), content_x(B));
  A = primitive_x(A);
  B = primitive_x(B);
  if (A.size() < B.size()) std::swap(A, B);
  XYPoly G;
  for (;;) {
    if (B.empty()) {
      G = A;
      break;
    }
    if (B.size() == 1) {
      G = XYPoly{YPoly{Rational(1)}};
      break;
    }
    XYPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = R.empty() ? R : primitive_x(R);
  }
  G = primitive_x(G);
  for (auto& col : G) col = ymul(col, c);
  return normalize_lead(from_xy(G));
}

std::uint64_t max_origin_component_mult(const ProductForm& h) {
  std::vector<Component> comps;
  for (const auto& pf : h.factors()) {
    require_bivariate(pf.poly, "max_origin_component_mult");
    if (!pf.poly.vanishes_at_origin()) continue;
    const XYPoly f = to_xy(pf.poly);
    const YPoly cont = content_x(f);
    if (uv::degree(cont) >= 1) {
      for (const auto& part : uv::squarefree_decomposition(uv::content_and_primitive(cont).second)) {
        Polynomial py(2);
        for (std::size_t j = 0; j < part.poly.size(); ++j)
          py.add_term({0, static_cast<std::uint32_t>(j)}, Rational(part.poly[j]));
        comps.push_back({py, pf.mult * part.mult});
      }
    }
    const XYPoly prim = divide_by_y(f, cont);
    if (prim.size() >= 2) squarefree_in_x(from_xy(prim), pf.mult, comps);
  }
  auto drop_away_from_origin = [&] {
    comps.erase(std::remove_if(comps.begin(), comps.end(),
                               [](const Component& c) { return !c.poly.vanishes_at_origin(); }),
                comps.end());
  };
  drop_away_from_origin();
  // Refine to pairwise coprime elements; shared components add multiplicities.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < comps.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < comps.size() && !changed; ++j) {
        const Polynomial g = gcd(comps[i].poly, comps[j].poly);
        if (is_constant(g)) continue;
        const Component ci = comps[i], cj = comps[j];
        comps.erase(comps.begin() + static_cast<long>(j));
        comps.erase(comps.begin() + static_cast<long>(i));
        const Polynomial ri = divide_exact(ci.poly, g), rj = divide_exact(cj.poly, g);
        if (!is_constant(ri)) comps.push_back({ri, ci.mult});
        if (!is_constant(rj)) comps.push_back({rj, cj.mult});
        comps.push_back({g, ci.mult + cj.mult});
        drop_away_from_origin();
        changed = true;
      }
    }
  }
  std::uint64_t best = 0;
  for (const auto& c : comps) best = std::max(best, c.mult);
  return best;
}

}  // namespace lctk
