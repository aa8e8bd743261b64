#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lctk/family.hpp"
#include "lctk/factor.hpp"
#include "lctk/lct.hpp"
#include "lctk/newton.hpp"
#include "lctk/polynomial.hpp"

namespace lctk {

using Json = nlohmann::ordered_json;

/// Rationals serialize as "p/q" strings; plain JSON integers are accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"vars": ["x", "y"], "terms": [{"e": [2, 0], "c": "1"}, ...]} in grlex order.
/// Parsing rejects duplicate exponent vectors and zero coefficients.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"factors": [{"poly": <Polynomial>, "mult": 28}, ...]}
Json to_json(const ProductForm& h);
ProductForm product_from_json(const Json& j);

/// Monomial sums such as "3*x^2*y - 2/3*y^3" or "0".
Polynomial parse_polynomial_text(std::string_view text, std::size_t num_vars = 2);

/// Polynomial JSON when the text starts with '{', otherwise the monomial-sum syntax.
Polynomial parse_polynomial_arg(std::string_view text);

Json to_json(const WeightVector& w);
Json to_json(const NewtonPolygon& p);
Json to_json(const Edge& e);
Json to_json(const QhFactorization& q);
Json to_json(const LctBounds& b);

Json to_json(const CertStep& s);
CertStep cert_step_from_json(const Json& j);
Json to_json(const LctCertificate& c);
LctCertificate certificate_from_json(const Json& j);

Json to_json(const CertificationContext& c);
CertificationContext context_from_json(const Json& j);

Json to_json(const InequalityReport& r);
Json to_json(const MinMSearch& s);
Json to_json(const TrialResult& t);
Json to_json(const DeltaReport& r);

/// Stable two-space-indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace lctk
