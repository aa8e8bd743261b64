#include "lctk/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lctk/errors.hpp"

namespace lctk {

namespace {

std::uint64_t degree_of(const ExponentVector& e) {
  std::uint64_t d = 0;
  for (auto v : e) d += v;
  return d;
}

std::string variable_name(std::size_t i, std::size_t n) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  if (n <= 4) return kNames[i];
  return "x" + std::to_string(i);
}

}  // namespace

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::initializer_list<std::int64_t> weights)
    : WeightVector(std::vector<std::int64_t>(weights)) {}

WeightVector::WeightVector(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("weight vector must not be empty");
  std::int64_t g = 0;
  for (auto v : weights_) {
    if (v < 1) throw DomainError("weights must be positive integers");
    g = std::gcd(g, v);
  }
  gcd_ = g;
}

std::int64_t WeightVector::sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

WeightVector WeightVector::primitive() const {
  std::vector<std::int64_t> p(weights_);
  for (auto& v : p) v /= gcd_;
  return WeightVector(std::move(p));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Rational& c, std::size_t num_vars) {
  Polynomial p(num_vars);
  p.add_term(ExponentVector(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t num_vars) {
  if (index >= num_vars) throw DomainError("variable index out of range");
  ExponentVector e(num_vars, 0);
  e[index] = 1;
  return monomial(e);
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != num_vars_)
    throw VariableMismatchError("exponent vector has " + std::to_string(e.size()) +
                                " entries, polynomial has " + std::to_string(num_vars_) + " variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(ExponentVector(num_vars_, 0)); }

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : static_cast<std::uint32_t>(degree_of(terms_.rbegin()->first));
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

std::uint32_t Polynomial::min_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& [e, c] : terms_) d = std::min(d, e.at(var));
  return d;
}

void Polynomial::check_same_vars(const Polynomial& o) const {
  if (o.num_vars_ != num_vars_)
    throw VariableMismatchError("polynomials have " + std::to_string(num_vars_) + " and " +
                                std::to_string(o.num_vars_) + " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_vars(b);
  Polynomial r(a.num_vars_);
  ExponentVector e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = degree_of(e) == 0;
    bool need_star = false;
    if (mag != Rational(1) || is_const) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << variable_name(i, e.size());
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, std::uint64_t k) {
  Polynomial result = Polynomial::constant(Rational(1), p.num_vars());
  Polynomial base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Weighted structure

std::int64_t weight_of(const ExponentVector& e, const WeightVector& w) {
  if (e.size() != w.size()) throw VariableMismatchError("weight vector length differs from variable count");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * static_cast<std::int64_t>(e[i]);
  return s;
}

std::int64_t weighted_multiplicity(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) throw ZeroPolynomialError();
  std::int64_t best = INT64_MAX;
  for (const auto& [e, c] : p.terms()) best = std::min(best, weight_of(e, w));
  return best;
}

Polynomial weighted_leading_term(const Polynomial& p, const WeightVector& w) {
  const std::int64_t m = weighted_multiplicity(p, w);
  Polynomial r(p.num_vars());
  for (const auto& [e, c] : p.terms())
    if (weight_of(e, w) == m) r.add_term(e, c);
  return r;
}

bool is_quasi_homogeneous(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) return true;
  const std::int64_t first = weight_of(p.terms().begin()->first, w);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return weight_of(t.first, w) == first; });
}

Polynomial shift_substitute(const Polynomial& p, std::size_t var, const Polynomial& g) {
  if (var >= p.num_vars()) throw DomainError("shift variable index out of range");
  if (g.num_vars() != p.num_vars()) throw VariableMismatchError("shift polynomial has a different variable count");
  if (!g.is_zero() && g.degree_in(var) > 0)
    throw DomainError("shift polynomial involves the substituted variable");
  if (g.is_zero()) return p;

  // p = sum_k coeff_k * x_var^k with coeff_k free of x_var.
  std::map<std::uint32_t, Polynomial> by_power;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector rest = e;
    rest[var] = 0;
    auto [it, _] = by_power.try_emplace(e[var], Polynomial(p.num_vars()));
    it->second.add_term(rest, c);
  }
  const Polynomial base = Polynomial::variable(var, p.num_vars()) + g;
  Polynomial result(p.num_vars());
  Polynomial power = Polynomial::constant(Rational(1), p.num_vars());
  std::uint32_t current = 0;
  for (const auto& [k, coeff] : by_power) {
    while (current < k) {
      power = power * base;
      ++current;
    }
    result += coeff * power;
  }
  return result;
}

Polynomial swap_variables(const Polynomial& p) {
  if (p.num_vars() != 2) throw VariableMismatchError("swap_variables expects a bivariate polynomial");
  Polynomial r(2);
  for (const auto& [e, c] : p.terms()) r.add_term({e[1], e[0]}, c);
  return r;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw ZeroPolynomialError();
  if (p.num_vars() != q.num_vars()) throw VariableMismatchError("divide_exact: variable counts differ");
  const auto& [lq_e, lq_c] = *q.terms().rbegin();
  Polynomial rem = p;
  Polynomial quot(p.num_vars());
  while (!rem.is_zero()) {
    const auto& [lr_e, lr_c] = *rem.terms().rbegin();
    ExponentVector e(lr_e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (lr_e[i] < lq_e[i]) throw DomainError("polynomial division is not exact");
      e[i] = lr_e[i] - lq_e[i];
    }
    const Polynomial t = Polynomial::monomial(e, lr_c / lq_c);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// ProductForm

ProductForm::ProductForm(std::vector<ProductFactor> factors) {
  for (auto& f : factors) append(std::move(f.poly), f.mult);
}

void ProductForm::append(Polynomial poly, std::uint64_t mult) {
  if (poly.is_zero()) throw ZeroPolynomialError();
  if (mult < 1) throw DomainError("factor multiplicity must be at least 1");
  if (!factors_.empty() && factors_.front().poly.num_vars() != poly.num_vars())
    throw VariableMismatchError("product factors have different variable counts");
  factors_.push_back({std::move(poly), mult});
}

std::size_t ProductForm::num_vars() const { return factors_.empty() ? 2 : factors_.front().poly.num_vars(); }

std::uint64_t ProductForm::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.mult * f.poly.total_degree();
  return d;
}

bool ProductForm::vanishes_at_origin() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const ProductFactor& f) { return f.poly.vanishes_at_origin(); });
}

Polynomial ProductForm::expand() const {
  Polynomial r = Polynomial::constant(Rational(1), num_vars());
  for (const auto& f : factors_) r = r * pow(f.poly, f.mult);
  return r;
}

ProductForm product_leading_term(const ProductForm& h, const WeightVector& w) {
  ProductForm r;
  for (const auto& f : h.factors()) r.append(weighted_leading_term(f.poly, w), f.mult);
  return r;
}

std::int64_t weighted_multiplicity(const ProductForm& h, const WeightVector& w) {
  std::int64_t s = 0;
  for (const auto& f : h.factors()) s += static_cast<std::int64_t>(f.mult) * weighted_multiplicity(f.poly, w);
  return s;
}

ProductForm shift_substitute(const ProductForm& h, std::size_t var, const Polynomial& g) {
  ProductForm r;
  for (const auto& f : h.factors()) r.append(shift_substitute(f.poly, var, g), f.mult);
  return r;
}

}  // namespace lctk
