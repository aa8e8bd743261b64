#include "lctk/family.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <cstdio>
#include <random>
#include <thread>

#include "lctk/errors.hpp"
#include "lctk/newton.hpp"

namespace lctk {

namespace {

bool is_homogeneous_of_degree(const Polynomial& p, std::uint32_t d) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [d](const auto& t) { return t.first[0] + t.first[1] == d; });
}

Rational lambda_of(std::int64_t n) { return Rational(8 * n + 8, 8 * n + 7); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

/// Uniform integer in [-9, 9] by rejection, independent of the standard
/// library's distribution implementations.
std::int64_t draw_entry(std::mt19937_64& rng) {
  constexpr std::uint64_t span = 19;
  constexpr std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return static_cast<std::int64_t>(r % span) - 9;
  }
}

Integer determinant(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Integer ell_closed_form(std::int64_t n, std::int64_t m) {
  // (9/2) m^2 n + (3/2) m n + 3m + 1; m(3m+1) is even.
  const Integer N = static_cast<long>(n), M = static_cast<long>(m);
  return 3 * M * N * (3 * M + 1) / 2 + 3 * M + 1;
}

}  // namespace

bool quasi_smooth_necessary(std::int64_t n, const Polynomial& r_low, const Polynomial& r_high) {
  const auto lo = static_cast<std::uint32_t>(n + 1);
  const auto hi = static_cast<std::uint32_t>(2 * n + 1);
  return !r_low.coefficient({0, lo}).is_zero() || !r_high.coefficient({0, hi}).is_zero();
}

FamilyInstance make_instance(std::int64_t n, const Polynomial& r_low, const Polynomial& r_high) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (r_low.num_vars() != 2 || r_high.num_vars() != 2)
    throw VariableMismatchError("family coefficients must be bivariate");
  if (!is_homogeneous_of_degree(r_low, static_cast<std::uint32_t>(n + 1)))
    throw DomainError("r_low must be homogeneous of degree " + std::to_string(n + 1));
  if (!is_homogeneous_of_degree(r_high, static_cast<std::uint32_t>(2 * n + 1)))
    throw DomainError("r_high must be homogeneous of degree " + std::to_string(2 * n + 1));
  if (!quasi_smooth_necessary(n, r_low, r_high))
    throw DomainError("neither y^" + std::to_string(n + 1) + " nor y^" + std::to_string(2 * n + 1) +
                      " occurs; the surface is not quasi-smooth");
  FamilyInstance inst;
  inst.n = n;
  inst.r_low = r_low;
  inst.r_high = r_high;
  inst.g = Polynomial::variable(0) + r_low + r_high;
  for (const auto& [e, c] : inst.g.terms())
    if (e[0] == 0 && e[1] > 0) {
      inst.nu = e[1];
      break;
    }
  return inst;
}

HypersurfaceClass surface_class(std::int64_t n) {
  return {WeightedSpace({1, 1, n, 2 * n + 1}), 2 * n + 1};
}

CertificationContext constants(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw DomainError("n and m must be at least 1");
  const Integer N = static_cast<long>(n), M = static_cast<long>(m);
  const Integer ell = ell_closed_form(n, m);
  const Integer v4 = N * M * (3 * M + 1) * (6 * N * M + N + 3);
  if (v4 % 4 != 0) throw Error("v is not an integer");
  const Integer v = v4 / 4;

  if (h0_hypersurface(surface_class(n), 3 * m * n) != ell) throw Error("ell disagrees with the section count");
  Integer sx = 0, sy = 0;
  for (const auto& b : canonical_basis(n, m)) {
    sx += b.n1;
    sy += b.n2;
  }
  if (sx != v || sy != v) throw Error("v disagrees with the exponent sums of the canonical basis");
  const Integer id4 = 4 * M * N * ell + M * N * (3 * M * N - 3 * M + N - 1);
  if (id4 != v4) throw Error("v disagrees with mn*ell + mn(3mn - 3m + n - 1)/4");

  CertificationContext ctx;
  ctx.n = n;
  ctx.m = m;
  ctx.ell = to_int64(ell);
  ctx.v = to_int64(v);
  ctx.K = to_int64(M * N * ell);
  ctx.lambda = lambda_of(n);
  ctx.sigma = Rational(3 * ctx.v) - Rational(2 * ctx.K) / ctx.lambda;
  ctx.tau = ctx.lambda / Rational(2 * ctx.K);
  return ctx;
}

std::vector<BasisMonomial> canonical_basis(std::int64_t n, std::int64_t m) {
  std::vector<BasisMonomial> out;
  for (std::int64_t j = 0; j <= 3 * m; ++j) {
    const std::int64_t total = (3 * m - j) * n;
    for (std::int64_t n1 = 0; n1 <= total; ++n1)
      out.push_back({static_cast<std::uint32_t>(n1), static_cast<std::uint32_t>(total - n1),
                     static_cast<std::uint32_t>(j)});
  }
  return out;
}

InequalityReport smooth_locus_report(std::int64_t n) {
  if (n < 1) throw DomainError("n must be at least 1");
  InequalityReport r;
  r.n = n;
  const Rational lambda = lambda_of(n);
  const Rational a(27, 50);
  const Rational b(27, 50 * (2 * n + 1));
  // Bound on Delta.C for Delta ~ (3/2)H and a general C ~ H.
  const Rational mu = class_pairing(surface_class(n), Rational(3, 2), Rational(1));
  const Rational one(1);

  auto add = [&](std::string name, Rational lhs, Rational rhs, bool strict) {
    InequalityCheck c{std::move(name), lhs, rhs, strict, strict ? lhs < rhs : lhs <= rhs, !strict && lhs == rhs};
    r.checks.push_back(std::move(c));
  };
  r.c_max = lambda * (a + b + mu) - Rational(1, 2);
  r.d_max = Rational(2) * lambda * (a + b + mu) - one;
  add("mu <= 3/8", mu, Rational(3, 8), false);
  add("3/8 < 1/lambda", Rational(3, 8), lambda.inverse(), true);
  add("transversal: 1/2 + lambda*(b + mu) < 1", Rational(1, 2) + lambda * (b + mu), one, true);
  add("c_max <= 1", r.c_max, one, false);
  add("lambda*mu <= 1", lambda * mu, one, false);
  add("d_max <= 1", r.d_max, one, false);
  r.passes = std::all_of(r.checks.begin(), r.checks.end(), [](const InequalityCheck& c) { return c.holds; });
  return r;
}

namespace {

template <class Margin>
MinMSearch search_min_m(std::int64_t n, std::int64_t horizon, bool strict, Margin margin) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (horizon < 1) throw DomainError("horizon must be at least 1");
  MinMSearch s;
  s.horizon = horizon;
  s.stays_true = true;
  for (std::int64_t m = 1; m <= horizon; ++m) {
    const Rational d = margin(m);
    s.margins.push_back(d);
    const bool ok = strict ? d.sign() > 0 : d.sign() >= 0;
    if (ok && !s.m) s.m = m;
    if (!ok && s.m) s.stays_true = false;
  }
  if (!s.m) s.stays_true = false;
  return s;
}

}  // namespace

MinMSearch newton_claim_min_m(std::int64_t n, std::int64_t horizon) {
  return search_min_m(n, horizon, true, [n](std::int64_t m) {
    const CertificationContext c = constants(n, m);
    const Rational K(c.K);
    const Rational lhs = K * Rational(2 * n + 1, 2 * n + 2) + Rational(c.v) + Rational(1);
    const Rational rhs = Rational(2) * K / c.lambda;
    return rhs - lhs;
  });
}

MinMSearch sigma_claim_min_m(std::int64_t n, std::int64_t horizon) {
  return search_min_m(n, horizon, false, [n](std::int64_t m) {
    const CertificationContext c = constants(n, m);
    return Rational(2 * c.K) / c.lambda - c.sigma;
  });
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(master_seed ^ splitmix64(index + 1));
}

std::vector<std::vector<std::int64_t>> sample_matrix(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr int kRetryCap = 64;
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    std::vector<std::vector<std::int64_t>> m(size, std::vector<std::int64_t>(size));
    for (auto& row : m)
      for (auto& e : row) e = draw_entry(rng);
    if (size == 0 || determinant(m) != 0) return m;
  }
  throw Error("sample_matrix: no invertible matrix within the retry cap");
}

std::vector<Polynomial> basis_from_matrix(const std::vector<std::vector<std::int64_t>>& matrix, std::int64_t n,
                                          std::int64_t m) {
  const auto basis = canonical_basis(n, m);
  if (matrix.size() != basis.size()) throw DomainError("matrix size differs from the basis size");
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& row : matrix) {
    if (row.size() != basis.size()) throw DomainError("matrix is not square");
    Polynomial f(2);
    for (std::size_t j = 0; j < basis.size(); ++j) f.add_term({basis[j].n1, basis[j].n2}, Rational(static_cast<long>(row[j])));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Polynomial> sample_basis(const CertificationContext& ctx, std::uint64_t seed) {
  return basis_from_matrix(sample_matrix(static_cast<std::size_t>(ctx.ell), seed), ctx.n, ctx.m);
}

std::string matrix_hash(const std::vector<std::vector<std::int64_t>>& matrix) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& row : matrix) {
    for (auto e : row) feed(std::to_string(e) + ",");
    feed(";");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

TrialResult certify_basis(const FamilyInstance& inst, const CertificationContext& ctx,
                          const std::vector<Polynomial>& basis) {
  ProductForm f;
  for (const auto& p : basis) f.append(p, 1);
  ProductForm h;
  h.append(inst.g, static_cast<std::uint64_t>(ctx.K));
  for (const auto& p : basis) h.append(p, 1);

  TrialResult r;
  const Rational v(ctx.v);
  const Rational point = Rational(2 * ctx.K) / ctx.lambda;
  r.f_polygon_contains_v = contains_point(polygon_of(f), v, v);
  r.h_polygon_contains_newton_point = contains_point(polygon_of(h), point, point);
  r.certificate = lct_product_certify(h, 0, ctx);
  return r;
}

}  // namespace

TrialResult certify_trial(const FamilyInstance& inst, const CertificationContext& ctx, std::uint64_t master_seed,
                          std::uint64_t index) {
  if (inst.n != ctx.n) throw DomainError("instance and context disagree on n");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = trial_seed(master_seed, index);
  const auto matrix = sample_matrix(static_cast<std::size_t>(ctx.ell), seed);
  TrialResult r = certify_basis(inst, ctx, basis_from_matrix(matrix, ctx.n, ctx.m));
  r.index = index;
  r.seed = seed;
  r.basis_hash = matrix_hash(matrix);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

TrialResult certify_canonical(const FamilyInstance& inst, const CertificationContext& ctx) {
  if (inst.n != ctx.n) throw DomainError("instance and context disagree on n");
  const auto start = std::chrono::steady_clock::now();
  const auto size = static_cast<std::size_t>(ctx.ell);
  std::vector<std::vector<std::int64_t>> identity(size, std::vector<std::int64_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i) identity[i][i] = 1;
  TrialResult r = certify_basis(inst, ctx, basis_from_matrix(identity, ctx.n, ctx.m));
  r.basis_hash = matrix_hash(identity);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ProductForm adversarial_product(const FamilyInstance& inst, const CertificationContext& ctx) {
  ProductForm h;
  h.append(inst.g, static_cast<std::uint64_t>(ctx.K));
  h.append(Polynomial::variable(0), static_cast<std::uint64_t>(3 * ctx.ell * ctx.m * ctx.n));
  return h;
}

std::vector<TrialResult> run_trials(const FamilyInstance& inst, const CertificationContext& ctx,
                                    std::uint64_t master_seed, std::uint64_t trials, unsigned jobs) {
  std::vector<TrialResult> results(trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < trials; i = next++) results[i] = certify_trial(inst, ctx, master_seed, i);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(trials, 1))));
  if (jobs == 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

DeltaReport delta_report(const FamilyInstance& inst, std::int64_t m, const std::vector<TrialResult>& trials) {
  DeltaReport r;
  r.n = inst.n;
  r.m = m;
  r.trials = trials.size();
  for (const auto& t : trials) {
    switch (t.certificate.conclusion) {
      case Conclusion::Certified:
        ++r.certified;
        break;
      case Conclusion::Refuted:
        ++r.refuted;
        break;
      default:
        ++r.inconclusive;
        break;
    }
  }
  r.inequalities = smooth_locus_report(inst.n);
  r.newton_min_m = newton_claim_min_m(inst.n);
  r.sigma_min_m = sigma_claim_min_m(inst.n);
  r.caveat = "sampled bases cannot prove a statement quantified over all basis-type divisors";
  if (inst.n < 4) {
    r.verdict = "out of theorem's hypothesis";
  } else if (!r.inequalities.passes) {
    r.verdict = "inequality suite fails";
  } else if (r.refuted > 0) {
    r.verdict = "refuted trial found";
  } else if (r.inconclusive > 0) {
    r.verdict = "some trials inconclusive";
  } else if (r.trials == 0) {
    r.verdict = "inequality suite passes; no trials run";
  } else {
    r.verdict = "all sampled evidence consistent with delta_2mn >= lambda";
  }
  return r;
}

}  // namespace lctk
