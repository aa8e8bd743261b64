// Command-line front end: newton, lct, wps and family subcommands.
//
// Exit codes: 0 success (or Certified/Exact), 1 usage or parse error,
// 2 Refuted, 3 Inconclusive. The last stdout line is always one JSON object.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lctk/errors.hpp"
#include "lctk/family.hpp"
#include "lctk/json_io.hpp"
#include "lctk/lct.hpp"
#include "lctk/newton.hpp"
#include "lctk/wps.hpp"

namespace fs = std::filesystem;
using namespace lctk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitInconclusive = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + path.string() + "'");
    out << content;
    if (!out.flush()) throw UsageError("cannot write '" + path.string() + "'");
  }
  fs::rename(tmp, path);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("'" + text + "' is not a comma-separated list of integers");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

void emit(const Json& summary) { std::cout << summary.dump() << std::endl; }

int exit_code_for(Conclusion c) {
  switch (c) {
    case Conclusion::Refuted:
      return kExitRefuted;
    case Conclusion::Inconclusive:
      return kExitInconclusive;
    default:
      return kExitOk;
  }
}

/// Rewrites --r<k> into --r-low / --r-high once --n is known, since the flag
/// names depend on n.
std::vector<std::string> rewrite_degree_flags(std::vector<std::string> args) {
  std::optional<long> n;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--n" && i + 1 < args.size()) {
      try {
        n = std::stol(args[i + 1]);
      } catch (const std::exception&) {
      }
    } else if (args[i].rfind("--n=", 0) == 0) {
      try {
        n = std::stol(args[i].substr(4));
      } catch (const std::exception&) {
      }
    }
  }
  static const std::regex flag(R"(--r(\d+)(=.*)?)");
  for (auto& a : args) {
    std::smatch m;
    if (!std::regex_match(a, m, flag)) continue;
    if (!n) throw UsageError("--r" + m[1].str() + " needs --n to be given");
    const long k = std::stol(m[1].str());
    std::string name;
    if (k == *n + 1)
      name = "--r-low";
    else if (k == 2 * *n + 1)
      name = "--r-high";
    else
      throw UsageError("--r" + m[1].str() + " matches neither degree n+1 nor 2n+1 for n = " + std::to_string(*n));
    a = name + m[2].str();
  }
  return args;
}

struct Options {
  // shared
  std::string input;
  std::string svg_out;
  std::string json_out;
  std::string weights;
  std::string certificate_out;
  std::string product;
  std::string context;
  std::size_t distinguished = 0;
  std::int64_t degree = 0;
  std::int64_t twist = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::int64_t horizon = 50;
  std::string claim;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string r_low = "0";
  std::string r_high = "0";
  std::string out_dir;
  unsigned jobs = 1;
  bool allow_large = false;
  bool verbose = false;
};

/// Polynomial or product form from a file holding JSON or a monomial sum.
ProductForm read_product_input(const std::string& path, bool& is_product) {
  const std::string text = read_file(path);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
    if (j.contains("factors")) {
      is_product = true;
      return product_from_json(j);
    }
    is_product = false;
    ProductForm h;
    Polynomial p = polynomial_from_json(j);
    if (p.is_zero()) throw ZeroPolynomialError();
    h.append(std::move(p), 1);
    return h;
  }
  is_product = false;
  ProductForm h;
  Polynomial p = parse_polynomial_text(text);
  if (p.is_zero()) throw ZeroPolynomialError();
  h.append(std::move(p), 1);
  return h;
}

Polynomial read_polynomial_input(const std::string& path) {
  bool is_product = false;
  ProductForm h = read_product_input(path, is_product);
  return is_product ? h.expand() : h.factors().front().poly;
}

int cmd_newton_polygon(const Options& o) {
  bool is_product = false;
  const ProductForm h = read_product_input(o.input, is_product);
  const NewtonPolygon poly = polygon_of(h);
  Json j = to_json(poly);
  if (!o.json_out.empty()) write_atomic(o.json_out, dump(j));
  if (!o.svg_out.empty()) write_atomic(o.svg_out, render_svg(poly));
  j["command"] = "newton polygon";
  emit(j);
  return kExitOk;
}

int cmd_lct_bound(const Options& o) {
  const Polynomial f = read_polynomial_input(o.input);
  const WeightVector w(parse_int_list(o.weights));
  const auto b = kollar_bounds(f, w);
  Json j{{"command", "lct bound"}, {"weights", to_json(w)}};
  if (!b) {
    j["status"] = "no singularity, threshold unbounded";
  } else {
    j["status"] = b->exact ? "exact" : "bounds";
    j["lower"] = to_json(b->lower);
    j["upper"] = to_json(b->upper);
    j["exact"] = b->exact;
  }
  emit(j);
  return kExitOk;
}

int cmd_lct_exact(const Options& o) {
  bool is_product = false;
  const ProductForm h = read_product_input(o.input, is_product);
  const LctResult r = lct_exact(h);
  if (!o.certificate_out.empty()) write_atomic(o.certificate_out, dump(to_json(r.certificate)));
  Json j{{"command", "lct exact"}, {"status", to_string(r.certificate.conclusion)}};
  if (r.bounds) {
    if (r.bounds->exact) j["value"] = to_json(r.bounds->lower);
    j["bounds"] = to_json(*r.bounds);
  }
  if (!r.certificate.reason.empty()) j["reason"] = r.certificate.reason;
  j["steps"] = r.certificate.steps.size();
  emit(j);
  return exit_code_for(r.certificate.conclusion);
}

int cmd_lct_certify(const Options& o) {
  const ProductForm h = product_from_json(read_json_file(o.product));
  const CertificationContext ctx = context_from_json(read_json_file(o.context));
  const LctCertificate cert = lct_product_certify(h, o.distinguished, ctx);
  if (!o.certificate_out.empty()) write_atomic(o.certificate_out, dump(to_json(cert)));
  Json j{{"command", "lct certify"},
         {"status", to_string(cert.conclusion)},
         {"value", to_json(cert.value)},
         {"tau", to_json(ctx.tau)},
         {"steps", cert.steps.size()}};
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  emit(j);
  return exit_code_for(cert.conclusion);
}

int cmd_wps_check(const Options& o) {
  const HypersurfaceClass h{WeightedSpace(parse_int_list(o.weights)), o.degree};
  if (o.degree < 1) throw UsageError("--degree must be at least 1");
  emit(Json{{"command", "wps check"},
            {"well_formed", is_well_formed(h.ambient)},
            {"fano", fano_check(h)},
            {"h_squared", to_json(intersection_h2(h))}});
  return kExitOk;
}

int cmd_wps_dims(const Options& o) {
  if (o.degree < 1) throw UsageError("--degree must be at least 1");
  if (o.twist < 0) throw UsageError("--twist must be non-negative");
  const HypersurfaceClass h{WeightedSpace(parse_int_list(o.weights)), o.degree};
  const Integer d = h0_hypersurface(h, o.twist);
  emit(Json{{"command", "wps dims"}, {"twist", o.twist}, {"h0", to_json(Rational(d))}});
  return kExitOk;
}

int cmd_family_info(const Options& o) {
  Json j = to_json(constants(o.n, o.m));
  j["command"] = "family info";
  emit(j);
  return kExitOk;
}

int cmd_family_inequalities(const Options& o) {
  if (o.n_min < 1 || o.n_max < o.n_min) throw UsageError("need 1 <= --n-min <= --n-max");
  std::cout << "n\tcheck\tlhs\trelation\trhs\tholds\ttight\n";
  Json failing = Json::array();
  Json tight = Json::array();
  for (std::int64_t n = o.n_min; n <= o.n_max; ++n) {
    const InequalityReport r = smooth_locus_report(n);
    for (const auto& c : r.checks) {
      std::cout << n << '\t' << c.name << '\t' << c.lhs << '\t' << (c.strict ? "<" : "<=") << '\t' << c.rhs << '\t'
                << (c.holds ? "pass" : "fail") << '\t' << (c.tight ? "tight" : "-") << '\n';
      if (c.tight) tight.push_back(Json{{"n", n}, {"check", c.name}});
    }
    if (!r.passes) failing.push_back(n);
  }
  emit(Json{{"command", "family inequalities"},
            {"n_min", o.n_min},
            {"n_max", o.n_max},
            {"verdict", failing.empty() ? "pass" : "fail"},
            {"failing_n", failing},
            {"tight", tight}});
  return kExitOk;
}

int cmd_family_min_m(const Options& o) {
  MinMSearch s;
  if (o.claim == "newton")
    s = newton_claim_min_m(o.n, o.horizon);
  else if (o.claim == "sigma")
    s = sigma_claim_min_m(o.n, o.horizon);
  else
    throw UsageError("--claim must be 'newton' or 'sigma'");
  Json j = to_json(s);
  j["command"] = "family min-m";
  j["n"] = o.n;
  j["claim"] = o.claim;
  emit(j);
  return s.m ? kExitOk : kExitInconclusive;
}

int cmd_family_certify(const Options& o) {
  const FamilyInstance inst = make_instance(o.n, parse_polynomial_arg(o.r_low), parse_polynomial_arg(o.r_high));
  const CertificationContext ctx = constants(o.n, o.m);
  if (ctx.ell > kDefaultEllLimit && !o.allow_large)
    throw UsageError("ell = " + std::to_string(ctx.ell) + " exceeds the workload limit " +
                     std::to_string(kDefaultEllLimit) + "; pass --allow-large to proceed");
  const fs::path out(o.out_dir);
  std::vector<TrialResult> results;
  if (o.trials > 0) results = run_trials(inst, ctx, o.seed, o.trials, o.jobs);
  for (const auto& r : results) {
    char name[32];
    std::snprintf(name, sizeof name, "trial-%04llu.json", static_cast<unsigned long long>(r.index));
    write_atomic(out / name, dump(to_json(r)));
    if (o.verbose)
      std::cerr << "trial " << r.index << ": " << to_string(r.certificate.conclusion) << " (" << r.wall_seconds
                << " s)\n";
  }
  const DeltaReport report = delta_report(inst, o.m, results);
  Json summary = to_json(report);
  summary["seed"] = o.seed;
  summary["context"] = to_json(ctx);
  write_atomic(out / "summary.json", dump(summary));
  summary["command"] = "family certify";
  summary["out"] = out.string();
  emit(summary);
  if (report.refuted > 0) return kExitRefuted;
  if (report.inconclusive > 0) return kExitInconclusive;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string command = "lctk";
  try {
    args = rewrite_degree_flags(std::move(args));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(Json{{"command", command}, {"status", "error"}, {"error", e.what()}});
    return kExitUsage;
  }

  Options o;
  CLI::App app{"Exact log canonical threshold toolkit for plane curve germs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("-v,--verbose", o.verbose, "Progress messages on stderr");

  auto* newton = app.add_subcommand("newton", "Newton polygons")->require_subcommand(1);
  auto* newton_polygon = newton->add_subcommand("polygon", "Vertex chain of a polynomial or product form");
  newton_polygon->add_option("--input", o.input, "Polynomial or product form file")->required();
  newton_polygon->add_option("--svg", o.svg_out, "Write an SVG drawing here");
  newton_polygon->add_option("--json", o.json_out, "Write the polygon JSON here");

  auto* lct = app.add_subcommand("lct", "Log canonical thresholds")->require_subcommand(1);
  auto* lct_bound = lct->add_subcommand("bound", "Two-sided bounds for one weight vector");
  lct_bound->add_option("--input", o.input, "Polynomial file")->required();
  lct_bound->add_option("--weights", o.weights, "Weights such as 3,2")->required();
  auto* lct_ex = lct->add_subcommand("exact", "Exact threshold at the origin");
  lct_ex->add_option("--input", o.input, "Polynomial or product form file")->required();
  lct_ex->add_option("--certificate", o.certificate_out, "Write the certificate JSON here");
  auto* lct_cert = lct->add_subcommand("certify", "Compare the threshold of a product with a target");
  lct_cert->add_option("--product", o.product, "Product form file")->required();
  lct_cert->add_option("--context", o.context, "Certification context file")->required();
  lct_cert->add_option("--distinguished", o.distinguished, "Index of the distinguished factor");
  lct_cert->add_option("--certificate", o.certificate_out, "Write the certificate JSON here");

  auto* wps = app.add_subcommand("wps", "Weighted projective spaces")->require_subcommand(1);
  auto* wps_check = wps->add_subcommand("check", "Well-formedness, Fano condition and H^2");
  wps_check->add_option("--weights", o.weights, "Weights such as 1,1,4,9")->required();
  wps_check->add_option("--degree", o.degree, "Hypersurface degree")->required();
  auto* wps_dims = wps->add_subcommand("dims", "Sections of O(twist) on the hypersurface");
  wps_dims->add_option("--weights", o.weights, "Weights such as 1,1,4,9")->required();
  wps_dims->add_option("--degree", o.degree, "Hypersurface degree")->required();
  wps_dims->add_option("--twist", o.twist, "Twist")->required();

  auto* family = app.add_subcommand("family", "The surface family and its certification")->require_subcommand(1);
  auto* fam_info = family->add_subcommand("info", "Derived constants");
  fam_info->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  fam_info->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  auto* fam_ineq = family->add_subcommand("inequalities", "Smooth-locus inequality suite as TSV");
  fam_ineq->add_option("--n-min", o.n_min)->required()->check(CLI::PositiveNumber);
  fam_ineq->add_option("--n-max", o.n_max)->required()->check(CLI::PositiveNumber);
  auto* fam_minm = family->add_subcommand("min-m", "Smallest m satisfying a claim");
  fam_minm->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  fam_minm->add_option("--claim", o.claim, "newton or sigma")->required()->check(CLI::IsMember({"newton", "sigma"}));
  fam_minm->add_option("--horizon", o.horizon)->check(CLI::PositiveNumber);
  auto* fam_cert = family->add_subcommand("certify", "Seeded certification trials");
  fam_cert->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  fam_cert->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  fam_cert->add_option("--trials", o.trials)->required();
  fam_cert->add_option("--seed", o.seed)->required();
  fam_cert->add_option("--r-low", o.r_low, "Degree n+1 coefficient (also --r<n+1>)");
  fam_cert->add_option("--r-high", o.r_high, "Degree 2n+1 coefficient (also --r<2n+1>)");
  fam_cert->add_option("--out", o.out_dir, "Output directory")->required();
  fam_cert->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  fam_cert->add_flag("--allow-large", o.allow_large, "Permit ell above the workload limit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    emit(Json{{"command", command}, {"status", "help"}});
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(Json{{"command", command}, {"status", "error"}, {"error", e.what()}});
    return kExitUsage;
  }

  try {
    if (newton_polygon->parsed()) return cmd_newton_polygon(o);
    if (lct_bound->parsed()) return cmd_lct_bound(o);
    if (lct_ex->parsed()) return cmd_lct_exact(o);
    if (lct_cert->parsed()) return cmd_lct_certify(o);
    if (wps_check->parsed()) return cmd_wps_check(o);
    if (wps_dims->parsed()) return cmd_wps_dims(o);
    if (fam_info->parsed()) return cmd_family_info(o);
    if (fam_ineq->parsed()) return cmd_family_inequalities(o);
    if (fam_minm->parsed()) return cmd_family_min_m(o);
    if (fam_cert->parsed()) return cmd_family_certify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(Json{{"command", command}, {"status", "error"}, {"error", e.what()}});
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(Json{{"command", command}, {"status", "error"}, {"error", e.what()}});
    return kExitUsage;
  }
  emit(Json{{"command", command}, {"status", "error"}, {"error", "no command"}});
  return kExitUsage;
}
