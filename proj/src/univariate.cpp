#include "lctk/univariate.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "lctk/errors.hpp"

namespace lctk::univariate {

namespace {

template <class Poly>
void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly to_rational(const ZPoly& f) {
  QPoly r;
  r.reserve(f.size());
  for (const auto& c : f) r.emplace_back(c);
  return r;
}

std::pair<Rational, ZPoly> content_and_primitive(const QPoly& f) {
  if (f.empty()) throw ZeroPolynomialError();
  Integer den_lcm = 1;
  for (const auto& c : f) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den_mpz_t());
  ZPoly z;
  z.reserve(f.size());
  Integer g = 0;
  for (const auto& c : f) {
    Integer v = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(std::move(v));
  }
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return {Rational(g, den_lcm), z};
}

QPoly derivative(const QPoly& f) {
  QPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw ZeroPolynomialError();
  QPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {QPoly{}, r};
  QPoly q(r.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (int i = degree(r) - degree(b); i >= 0; --i) {
    const Rational c = r[i + b.size() - 1] * lead_inv;
    q[i] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return x;
  const Rational inv = x.back().inverse();
  for (auto& c : x) c *= inv;
  return x;
}

std::vector<SquarefreePart> squarefree_decomposition(const ZPoly& f) {
  std::vector<SquarefreePart> parts;
  if (degree(f) < 1) return parts;
  const QPoly fq = to_rational(f);
  const QPoly fd = derivative(fq);
  QPoly a = gcd(fq, fd);
  QPoly b = divmod(fq, a).first;
  QPoly c = divmod(fd, a).first;
  QPoly d;
  {
    auto bd = derivative(b);
    d = c;
    d.resize(std::max(d.size(), bd.size()));
    for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
    trim(d);
  }
  unsigned i = 1;
  while (degree(b) >= 1) {
    QPoly ai = gcd(b, d);
    if (degree(ai) >= 1) parts.push_back({content_and_primitive(ai).second, i});
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    auto bd = derivative(b);
    d = c;
    d.resize(std::max(d.size(), bd.size()));
    for (std::size_t k = 0; k < bd.size(); ++k) d[k] -= bd[k];
    trim(d);
    ++i;
  }
  return parts;
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a word-sized prime.

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  u64 reduce(const Integer& v) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
  }

  ModPoly from(const ZPoly& f) const {
    ModPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = reduce(f[i]);
    trim(r);
    return r;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    ModPoly r = a;
    trim(r);
    if (r.size() < b.size()) return {ModPoly{}, r};
    ModPoly q(r.size() - b.size() + 1, 0);
    const u64 li = inv(b.back());
    for (int i = static_cast<int>(r.size() - b.size()); i >= 0; --i) {
      const u64 c = mul(r[i + b.size() - 1], li);
      q[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = sub(r[i + j], mul(c, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
  }

  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    const u64 li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
    return a;
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      auto r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  /// s, t with s*a + t*b = 1 for coprime a, b.
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      auto s2 = sub(s0, mul(q, s1));
      auto t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw Error("bezout: polynomials are not coprime mod p");
    const u64 li = inv(r0[0]);
    for (auto& c : s0) c = mul(c, li);
    for (auto& c : t0) c = mul(c, li);
    return {s0, t0};
  }

  ModPoly powmod(ModPoly base, u64 e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    while (e) {
      if (e & 1U) r = rem(mul(r, base), m);
      e >>= 1U;
      if (e) base = rem(mul(base, base), m);
    }
    return r;
  }

  ModPoly derivative(const ModPoly& f) const {
    ModPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p));
    trim(d);
    return d;
  }
};

/// Distinct-degree split of a monic square-free polynomial.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const Field& F, ModPoly f) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  const ModPoly t{0, 1};
  ModPoly h = t;
  unsigned d = 0;
  while (2 * (d + 1) <= static_cast<unsigned>(f.size() - 1)) {
    ++d;
    h = F.powmod(h, F.p, f);
    ModPoly g = F.gcd(f, F.sub(h, t));
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<unsigned>(f.size() - 1));
  return out;
}

void equal_degree(const Field& F, const ModPoly& g, unsigned d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const auto n = static_cast<unsigned>(g.size() - 1);
  if (n == d) {
    out.push_back(g);
    return;
  }
  for (;;) {
    ModPoly r(n);
    for (auto& c : r) c = rng() % F.p;
    trim(r);
    if (r.size() < 2) continue;
    // r^((p^d - 1)/2) = (r * r^p * ... * r^(p^(d-1)))^((p-1)/2)
    ModPoly acc{1}, frob = F.rem(r, g);
    for (unsigned i = 0; i < d; ++i) {
      acc = F.rem(F.mul(acc, frob), g);
      if (i + 1 < d) frob = F.powmod(frob, F.p, g);
    }
    ModPoly s = F.powmod(acc, (F.p - 1) / 2, g);
    s = F.sub(s, ModPoly{1});
    ModPoly u = F.gcd(g, s);
    if (u.size() > 1 && u.size() < g.size()) {
      equal_degree(F, u, d, rng, out);
      equal_degree(F, F.monic(F.divmod(g, u).first), d, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const Field& F, const ModPoly& f_monic) {
  std::mt19937_64 rng(0x5eed5eedULL ^ F.p);
  std::vector<ModPoly> out;
  for (const auto& [g, d] : distinct_degree(F, f_monic)) equal_degree(F, g, d, rng, out);
  return out;
}

// Polynomials over Z reduced modulo a prime power.

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

/// Lifts F = G*H (mod p) with G, H monic to mod p^k; F is monic mod p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const Field& F, const ZPoly& target, const ModPoly& g, const ModPoly& h,
                                    unsigned k) {
  const auto [s, t] = F.bezout(g, h);
  ZPoly G = from_mod(g), H = from_mod(h);
  Integer q = static_cast<unsigned long>(F.p);
  for (unsigned j = 1; j < k; ++j) {
    const Integer next = q * static_cast<unsigned long>(F.p);
    ZPoly prod = zmul(G, H, next);
    ZPoly e(std::max(target.size(), prod.size()), 0);
    for (std::size_t i = 0; i < target.size(); ++i) e[i] = target[i];
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    ModPoly em(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer c;
      mpz_fdiv_r(c.get_mpz_t(), e[i].get_mpz_t(), next.get_mpz_t());
      em[i] = F.reduce(Integer(c / q));
    }
    trim(em);
    if (!em.empty()) {
      // G*dh + H*dg = e with dg = t*e mod g and dh = s*e + (t*e div g)*h.
      auto [qq, r] = F.divmod(F.mul(t, em), g);
      ModPoly se = F.mul(s, em);
      ModPoly qh = F.mul(qq, h);
      ModPoly dh(std::max(se.size(), qh.size()), 0);
      for (std::size_t i = 0; i < se.size(); ++i) dh[i] = se[i];
      for (std::size_t i = 0; i < qh.size(); ++i) dh[i] = F.add(dh[i], qh[i]);
      trim(dh);
      for (std::size_t i = 0; i < r.size(); ++i) G[i] += q * static_cast<unsigned long>(r[i]);
      if (H.size() < dh.size()) H.resize(dh.size(), 0);
      for (std::size_t i = 0; i < dh.size(); ++i) H[i] += q * static_cast<unsigned long>(dh[i]);
    }
    q = next;
  }
  return {G, H};
}

std::vector<ZPoly> hensel_lift(const Field& F, const ZPoly& target, const std::vector<ModPoly>& factors, unsigned k) {
  if (factors.size() == 1) return {target};
  ModPoly rest{1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = F.mul(rest, factors[i]);
  auto [G, H] = hensel_pair(F, target, factors[0], rest, k);
  std::vector<ZPoly> out{G};
  auto tail = hensel_lift(F, H, std::vector<ModPoly>(factors.begin() + 1, factors.end()), k);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

bool divides_exactly(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
  auto [q, r] = divmod(to_rational(f), to_rational(g));
  if (!r.empty()) return false;
  ZPoly z;
  for (const auto& c : q) {
    if (!c.is_integer()) return false;
    z.push_back(c.numerator());
  }
  quotient = std::move(z);
  return true;
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
    r[i] = c;
  }
  trim(r);
  return r;
}

ZPoly primitive(const ZPoly& f) { return content_and_primitive(to_rational(f)).second; }

const u64 kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,  59,  61,
                       67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                       151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
                       241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347,
                       349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421, 431, 433, 439, 443,
                       449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541, 547, 557, 563,
                       569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653, 659,
                       661, 673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773,
                       787, 797, 809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887,
                       907, 911, 919, 929, 937, 941, 947, 953, 967, 971, 977, 983, 991, 997, 1009, 1013};

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f_in) {
  ZPoly f = primitive(f_in);
  const int n = degree(f);
  if (n < 1) return {};
  if (n == 1) return {f};

  // Pick the admissible prime with the fewest modular factors among a few candidates.
  u64 best_p = 0;
  std::vector<ModPoly> best_factors;
  int admissible = 0;
  for (u64 p : kPrimes) {
    const Field F{p};
    if (F.reduce(f.back()) == 0) continue;
    ModPoly fm = F.monic(F.from(f));
    if (F.gcd(fm, F.derivative(fm)).size() != 1) continue;
    auto facs = factor_mod_p(F, fm);
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(facs);
    }
    if (++admissible == 5 || best_factors.size() == 1) break;
  }
  if (best_p == 0) throw Error("factor_squarefree: no admissible prime found");
  if (best_factors.size() == 1) return {f};

  const Field F{best_p};
  // Mignotte-type bound on the coefficients of lc(f) * (any factor).
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= abs(f.back());
  bound *= 2;
  unsigned k = 1;
  Integer modulus = static_cast<unsigned long>(best_p);
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++k;
  }

  // Monic image of f modulo p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  ZPoly target(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer c = f[i] * lc_inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    target[i] = c;
  }
  std::vector<ZPoly> lifted = hensel_lift(F, target, best_factors, k);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = zmul(cand, lifted[i], modulus);
      cand = symmetric(cand, modulus);
      if (degree(cand) >= 1) {
        ZPoly g = primitive(cand);
        ZPoly quotient;
        if (divides_exactly(rest, g, quotient)) {
          result.push_back(g);
          rest = primitive(quotient);
          for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<long>(*it));
          found = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (degree(rest) >= 1) result.push_back(rest);
  return result;
}

Factorization factor(const QPoly& f_in) {
  QPoly f = f_in;
  trim(f);
  auto [content, prim] = content_and_primitive(f);
  Factorization out{content, {}};
  for (const auto& part : squarefree_decomposition(prim)) {
    for (auto& g : factor_squarefree(part.poly)) out.factors.emplace_back(std::move(g), part.mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  // The primitive factors multiply back to prim up to sign; fold the sign into the unit.
  Integer lead = 1;
  for (const auto& [g, m] : out.factors)
    for (unsigned i = 0; i < m; ++i) lead *= g.back();
  if ((lead < 0) != (prim.back() < 0)) out.unit = -out.unit;
  return out;
}

}  // namespace lctk::univariate
