// Python bindings. Structured results cross the boundary as JSON text and
// are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lctk/errors.hpp"
#include "lctk/family.hpp"
#include "lctk/json_io.hpp"
#include "lctk/lct.hpp"
#include "lctk/newton.hpp"
#include "lctk/wps.hpp"

namespace py = pybind11;
using namespace lctk;

namespace {

ProductForm product_arg(const std::string& text) {
  if (text.find("\"factors\"") != std::string::npos) return product_from_json(Json::parse(text));
  ProductForm h;
  h.append(parse_polynomial_arg(text), 1);
  return h;
}

std::string lct_exact_json(const std::string& input) {
  const LctResult r = lct_exact(product_arg(input));
  Json j{{"conclusion", to_string(r.certificate.conclusion)}};
  j["bounds"] = r.bounds ? to_json(*r.bounds) : Json(nullptr);
  j["certificate"] = to_json(r.certificate);
  return j.dump();
}

std::string bounds_json(const std::string& poly, const std::vector<std::int64_t>& weights) {
  const auto b = kollar_bounds(parse_polynomial_arg(poly), WeightVector(weights));
  return b ? to_json(*b).dump() : "null";
}

std::string certify_json(const std::string& product, const std::string& context, std::size_t distinguished) {
  return to_json(lct_product_certify(product_arg(product), distinguished, context_from_json(Json::parse(context))))
      .dump();
}

std::optional<std::string> replay_json(const std::string& certificate) {
  return replay(certificate_from_json(Json::parse(certificate)));
}

std::string run_family_json(std::int64_t n, std::int64_t m, const std::string& r_low, const std::string& r_high,
                            std::uint64_t seed, std::uint64_t trials, unsigned jobs) {
  const FamilyInstance inst = make_instance(n, parse_polynomial_arg(r_low), parse_polynomial_arg(r_high));
  const CertificationContext ctx = constants(n, m);
  std::vector<TrialResult> results;
  {
    py::gil_scoped_release release;
    results = run_trials(inst, ctx, seed, trials, jobs);
  }
  Json list = Json::array();
  for (const auto& r : results) list.push_back(to_json(r));
  return Json{{"summary", to_json(delta_report(inst, m, results))}, {"trials", list}}.dump();
}

}  // namespace

PYBIND11_MODULE(_lctk, m) {
  m.doc() = "Exact log canonical thresholds of plane curve germs";

  // Translators are tried newest first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());

  m.def("normalize", [](const std::string& p) { return parse_polynomial_arg(p).str(); }, py::arg("poly"));
  m.def("multiply", [](const std::string& p, const std::string& q) {
    return (parse_polynomial_arg(p) * parse_polynomial_arg(q)).str();
  });
  m.def("weighted_leading_term", [](const std::string& p, const std::vector<std::int64_t>& w) {
    return weighted_leading_term(parse_polynomial_arg(p), WeightVector(w)).str();
  });
  m.def("weighted_multiplicity", [](const std::string& p, const std::vector<std::int64_t>& w) {
    return weighted_multiplicity(parse_polynomial_arg(p), WeightVector(w));
  });
  m.def("newton_polygon", [](const std::string& input) { return to_json(polygon_of(product_arg(input))).dump(); });
  m.def("lct_bounds", &bounds_json, py::arg("poly"), py::arg("weights"));
  m.def("lct_exact", &lct_exact_json, py::arg("input"));
  m.def("lct_certify", &certify_json, py::arg("product"), py::arg("context"), py::arg("distinguished") = 0);
  m.def("replay", &replay_json, py::arg("certificate"));

  m.def("is_well_formed", [](const std::vector<std::int64_t>& w) { return is_well_formed(WeightedSpace(w)); });
  m.def("fano_check", [](const std::vector<std::int64_t>& w, std::int64_t d) {
    return fano_check({WeightedSpace(w), d});
  });
  m.def("h0", [](const std::vector<std::int64_t>& w, std::int64_t degree, std::int64_t twist) {
    return h0_hypersurface({WeightedSpace(w), degree}, twist).get_str();
  });
  m.def("h_squared", [](const std::vector<std::int64_t>& w, std::int64_t degree) {
    return intersection_h2({WeightedSpace(w), degree}).str();
  });

  m.def("constants", [](std::int64_t n, std::int64_t mm) { return to_json(constants(n, mm)).dump(); });
  m.def("inequality_report", [](std::int64_t n) { return to_json(smooth_locus_report(n)).dump(); });
  m.def("min_m", [](std::int64_t n, const std::string& claim, std::int64_t horizon) {
    if (claim == "newton") return to_json(newton_claim_min_m(n, horizon)).dump();
    if (claim == "sigma") return to_json(sigma_claim_min_m(n, horizon)).dump();
    throw DomainError("claim must be 'newton' or 'sigma'");
  });
  m.def("run_family", &run_family_json, py::arg("n"), py::arg("m"), py::arg("r_low"), py::arg("r_high"),
        py::arg("seed"), py::arg("trials"), py::arg("jobs") = 1);
}
