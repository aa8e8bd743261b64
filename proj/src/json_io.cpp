#include "lctk/json_io.hpp"

#include <cctype>
#include <set>

#include "lctk/errors.hpp"

namespace lctk {

namespace {

const char* kVarNames[] = {"x", "y", "z", "w"};

std::string var_name(std::size_t i, std::size_t n) {
  if (n <= 4) return kVarNames[i];
  return "x" + std::to_string(i);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::uint64_t uint_field(const Json& j, const char* key) {
  const std::int64_t v = int_field(j, key);
  if (v < 0) throw ParseError(std::string("field '") + key + "' must be non-negative");
  return static_cast<std::uint64_t>(v);
}

Json weights_json(const WeightVector& w) { return Json(w.values()); }

WeightVector weights_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("weights must be an array");
  std::vector<std::int64_t> w;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("weights must be integers");
    w.push_back(e.get<std::int64_t>());
  }
  return WeightVector(std::move(w));
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("a rational must be a \"p/q\" string or an integer");
}

Json to_json(const Polynomial& p) {
  Json vars = Json::array();
  for (std::size_t i = 0; i < p.num_vars(); ++i) vars.push_back(var_name(i, p.num_vars()));
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"e", e}, {"c", c.str()}});
  return Json{{"vars", vars}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  const Json& vars = require(j, "vars");
  if (!vars.is_array() || vars.empty()) throw ParseError("'vars' must be a non-empty array");
  std::set<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    if (!names.insert(v.get<std::string>()).second) throw ParseError("duplicate variable name");
  }
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  Polynomial p(vars.size());
  std::set<ExponentVector> seen;
  for (const auto& t : terms) {
    const Json& e = require(t, "e");
    if (!e.is_array() || e.size() != vars.size()) throw ParseError("exponent vector length differs from 'vars'");
    ExponentVector ev;
    for (const auto& x : e) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > UINT32_MAX)
        throw ParseError("exponents must be non-negative integers");
      ev.push_back(static_cast<std::uint32_t>(x.get<std::int64_t>()));
    }
    if (!seen.insert(ev).second) throw ParseError("duplicate exponent vector");
    const Rational c = rational_from_json(require(t, "c"));
    if (c.is_zero()) throw ParseError("zero coefficients are not allowed");
    p.add_term(ev, c);
  }
  return p;
}

Json to_json(const ProductForm& h) {
  Json factors = Json::array();
  for (const auto& f : h.factors()) factors.push_back(Json{{"poly", to_json(f.poly)}, {"mult", f.mult}});
  return Json{{"factors", factors}};
}

ProductForm product_from_json(const Json& j) {
  const Json& factors = require(j, "factors");
  if (!factors.is_array()) throw ParseError("'factors' must be an array");
  ProductForm h;
  for (const auto& f : factors) {
    const std::int64_t mult = int_field(f, "mult");
    if (mult < 1) throw ParseError("multiplicities must be at least 1");
    Polynomial p = polynomial_from_json(require(f, "poly"));
    if (p.is_zero()) throw ParseError("product factors must be nonzero");
    h.append(std::move(p), static_cast<std::uint64_t>(mult));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Plain-text monomial sums

namespace {

class TextParser {
 public:
  TextParser(std::string_view text, std::size_t num_vars) : s_(text), n_(num_vars) {}

  Polynomial parse() {
    Polynomial p(n_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      p.add_term(e, sign < 0 ? -c : c);
      skip();
    }
    return p;
  }

 private:
  std::pair<ExponentVector, Rational> term() {
    ExponentVector e(n_, 0);
    Rational c(1);
    for (;;) {
      skip();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= number();
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        const std::size_t v = variable();
        std::uint32_t k = 1;
        skip();
        if (!at_end() && peek() == '^') {
          get();
          skip();
          k = static_cast<std::uint32_t>(integer());
        }
        e[v] += k;
      } else {
        fail("unexpected character");
      }
      skip();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      return {e, c};
    }
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (!at_end() && peek() == '/') {
      get();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) get();
    }
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > UINT32_MAX) fail("exponent too large");
    }
    return v;
  }

  std::size_t variable() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) get();
    const std::string_view name = s_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < n_; ++i)
      if (name == var_name(i, n_)) return i;
    pos_ = start;
    fail("unknown variable '" + std::string(name) + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial text, position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial_text(std::string_view text, std::size_t num_vars) {
  return TextParser(text, num_vars).parse();
}

Polynomial parse_polynomial_arg(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
    }
    return polynomial_from_json(j);
  }
  return parse_polynomial_text(text);
}

// ---------------------------------------------------------------------------
// Results

Json to_json(const WeightVector& w) { return weights_json(w); }

Json to_json(const Edge& e) {
  Json j{{"orientation", to_string(e.orientation)},
         {"start", {e.start.s, e.start.t}},
         {"end", {e.end.s, e.end.t}},
         {"normal", {e.normal.wx, e.normal.wy}},
         {"vertex_crossing", e.vertex_crossing}};
  return j;
}

Json to_json(const NewtonPolygon& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back({v.s, v.t});
  return Json{{"vertices", vertices},
              {"diagonal_edge", to_json(diagonal_edge(p))},
              {"diagonal_crossing", to_json(diagonal_crossing(p))}};
}

Json to_json(const QhFactorization& q) {
  Json factors = Json::array();
  for (const auto& f : q.factors)
    factors.push_back(Json{{"poly", f.poly.str()}, {"mult", f.mult}, {"x_degree", f.x_degree}, {"y_degree", f.y_degree}});
  return Json{{"weights", weights_json(q.weights)},
              {"unit", to_json(q.unit)},
              {"a", q.x_power},
              {"b", q.y_power},
              {"factors", factors},
              {"weighted_degree", q.weighted_degree}};
}

Json to_json(const LctBounds& b) {
  return Json{{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}, {"exact", b.exact}};
}

Json to_json(const CertStep& s) {
  Json j{{"kind", to_string(s.kind)},
         {"subject", s.subject},
         {"weights", weights_json(s.weights)},
         {"factors", Json{{"a", s.factors.a}, {"b", s.factors.b}, {"c", s.factors.c}}},
         {"weighted_degree", s.weighted_degree},
         {"evaluated_min", to_json(s.evaluated_min)}};
  if (s.shift)
    j["shift"] = Json{{"root", to_json(s.shift->root)}, {"beta", s.shift->beta}, {"swapped", s.shift->swapped}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

CertStep cert_step_from_json(const Json& j) {
  CertStep s;
  s.kind = step_kind_from_string(require(j, "kind").get<std::string>());
  s.subject = require(j, "subject").get<std::string>();
  s.weights = weights_from_json(require(j, "weights"));
  const Json& f = require(j, "factors");
  s.factors.a = uint_field(f, "a");
  s.factors.b = uint_field(f, "b");
  for (const auto& c : require(f, "c")) s.factors.c.push_back(c.get<std::uint64_t>());
  s.weighted_degree = int_field(j, "weighted_degree");
  s.evaluated_min = rational_from_json(require(j, "evaluated_min"));
  if (j.contains("shift")) {
    const Json& sh = j.at("shift");
    s.shift = ShiftData{rational_from_json(require(sh, "root")), uint_field(sh, "beta"),
                        require(sh, "swapped").get<bool>()};
  }
  if (j.contains("note")) s.note = j.at("note").get<std::string>();
  return s;
}

Json to_json(const LctCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(to_json(s));
  Json checks = Json::array();
  for (const auto& k : c.checks) checks.push_back(Json{{"name", k.name}, {"holds", k.holds}});
  Json j{{"conclusion", to_string(c.conclusion)}, {"value", to_json(c.value)}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  j["checks"] = checks;
  j["steps"] = steps;
  return j;
}

LctCertificate certificate_from_json(const Json& j) {
  LctCertificate c;
  c.conclusion = conclusion_from_string(require(j, "conclusion").get<std::string>());
  c.value = rational_from_json(require(j, "value"));
  if (j.contains("reason")) c.reason = j.at("reason").get<std::string>();
  if (j.contains("checks"))
    for (const auto& k : j.at("checks")) c.checks.push_back({require(k, "name").get<std::string>(), require(k, "holds").get<bool>()});
  for (const auto& s : require(j, "steps")) c.steps.push_back(cert_step_from_json(s));
  return c;
}

Json to_json(const CertificationContext& c) {
  return Json{{"n", c.n},
              {"m", c.m},
              {"ell", c.ell},
              {"v", c.v},
              {"sigma", to_json(c.sigma)},
              {"lambda", to_json(c.lambda)},
              {"tau", to_json(c.tau)},
              {"K", c.K}};
}

CertificationContext context_from_json(const Json& j) {
  CertificationContext c;
  const bool derive = j.contains("n") && j.contains("m") && !(j.contains("ell") && j.contains("v") &&
                                                               j.contains("sigma") && j.contains("lambda") &&
                                                               j.contains("tau") && j.contains("K"));
  if (derive) c = constants(int_field(j, "n"), int_field(j, "m"));
  // Explicit fields take precedence over derived values.
  if (j.contains("n")) c.n = int_field(j, "n");
  if (j.contains("m")) c.m = int_field(j, "m");
  if (j.contains("ell")) c.ell = int_field(j, "ell");
  if (j.contains("v")) c.v = int_field(j, "v");
  if (j.contains("K")) c.K = int_field(j, "K");
  if (j.contains("sigma")) c.sigma = rational_from_json(j.at("sigma"));
  if (j.contains("lambda")) c.lambda = rational_from_json(j.at("lambda"));
  if (j.contains("tau")) c.tau = rational_from_json(j.at("tau"));
  if (!derive) {
    for (const char* key : {"n", "m", "ell", "v", "sigma", "lambda", "tau", "K"}) require(j, key);
  }
  return c;
}

Json to_json(const InequalityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"lhs", to_json(c.lhs)},
                          {"rhs", to_json(c.rhs)},
                          {"relation", c.strict ? "<" : "<="},
                          {"holds", c.holds},
                          {"tight", c.tight}});
  return Json{{"n", r.n}, {"passes", r.passes}, {"c_max", to_json(r.c_max)}, {"d_max", to_json(r.d_max)},
              {"checks", checks}};
}

Json to_json(const MinMSearch& s) {
  Json margins = Json::array();
  for (const auto& m : s.margins) margins.push_back(to_json(m));
  Json j{{"m", s.m ? Json(*s.m) : Json(nullptr)}, {"horizon", s.horizon}, {"stays_true", s.stays_true}};
  j["margins"] = margins;
  return j;
}

Json to_json(const TrialResult& t) {
  return Json{{"index", t.index},
              {"seed", t.seed},
              {"basis_hash", t.basis_hash},
              {"preconditions",
               Json{{"f_polygon_contains_v", t.f_polygon_contains_v},
                    {"h_polygon_contains_newton_point", t.h_polygon_contains_newton_point}}},
              {"certificate", to_json(t.certificate)}};
}

Json to_json(const DeltaReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"trials", r.trials},
              {"certified", r.certified},
              {"refuted", r.refuted},
              {"inconclusive", r.inconclusive},
              {"inequalities_pass", r.inequalities.passes},
              {"newton_min_m", r.newton_min_m.m ? Json(*r.newton_min_m.m) : Json(nullptr)},
              {"sigma_min_m", r.sigma_min_m.m ? Json(*r.sigma_min_m.m) : Json(nullptr)},
              {"verdict", r.verdict},
              {"caveat", r.caveat}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lctk
