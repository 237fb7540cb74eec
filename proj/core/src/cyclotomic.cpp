#include "higgsmot/cyclotomic.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "higgsmot/errors.hpp"
#include "modp.hpp"

namespace higgsmot {

namespace {

using UPoly = std::vector<mpq_class>;  // dense, constant term first

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo b (b nonzero); quotient written when requested.
UPoly poly_rem(UPoly a, const UPoly& b, UPoly* quotient = nullptr) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class f = a.back() / b.back();
    if (quotient) (*quotient)[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

UPoly poly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

UPoly to_upoly(const std::vector<long>& c) {
  UPoly p;
  p.reserve(c.size());
  for (long x : c) p.emplace_back(x);
  return p;
}

std::int32_t floor_div(std::int32_t a, std::int32_t b) {
  std::int32_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t first_nonzero(const Exponent& e) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] != 0) return i;
  }
  return kMaxVars;
}

struct ClassPoly {
  std::int32_t low = 0;
  UPoly coeffs;
};

// Decomposes p along dir: every term x^e is written as x^key * mu^q with
// mu = x^dir; returns one univariate polynomial per key.
std::vector<std::pair<Exponent, ClassPoly>> decompose(const LaurentPoly& p, const Exponent& dir) {
  const std::size_t pivot = first_nonzero(dir);
  struct Item {
    Exponent key;
    std::int32_t q;
    const mpq_class* coeff;
  };
  std::vector<Item> items;
  items.reserve(p.size());
  for (const auto& t : p.terms()) {
    const std::int32_t q = floor_div(t.exp[pivot], dir[pivot]);
    items.push_back({t.exp - scaled(dir, q), q, &t.coeff});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.key != b.key ? a.key < b.key : a.q < b.q;
  });
  std::vector<std::pair<Exponent, ClassPoly>> out;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j].key == items[i].key) ++j;
    ClassPoly cp;
    cp.low = items[i].q;
    cp.coeffs.assign(static_cast<std::size_t>(items[j - 1].q - cp.low + 1), 0);
    for (std::size_t k = i; k < j; ++k) cp.coeffs[static_cast<std::size_t>(items[k].q - cp.low)] = *items[k].coeff;
    out.emplace_back(items[i].key, std::move(cp));
    i = j;
  }
  return out;
}

// A prime P = 1 (mod m) below 2^31, used to reject non-divisible
// polynomials before the exact division.
struct ModField {
  std::uint64_t p = 0;
  std::uint64_t zeta = 0;  // a primitive m-th root of unity
};

ModField make_field(unsigned m) {
  ModField f;
  const std::uint64_t top = (std::uint64_t{1} << 31) / m;
  mpz_class candidate;
  for (std::uint64_t k = top;; --k) {
    f.p = k * m + 1;
    candidate = static_cast<unsigned long>(f.p);
    if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) != 0) break;
  }
  std::vector<unsigned> prime_divisors;
  for (unsigned q = 2, n = m; q <= n; ++q) {
    if (n % q != 0) continue;
    prime_divisors.push_back(q);
    while (n % q == 0) n /= q;
  }
  for (std::uint64_t a = 2;; ++a) {
    f.zeta = modp::pow(a, (f.p - 1) / m, f.p);
    bool primitive = f.zeta != 1 || m == 1;
    for (unsigned q : prime_divisors) primitive = primitive && modp::pow(f.zeta, m / q, f.p) != 1;
    if (primitive) break;
  }
  return f;
}

const ModField& field_for(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, ModField> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, make_field(m)).first;
  return it->second;
}

// A point x with x^dir a primitive m-th root of unity. False means p does
// not vanish there, so Phi_m(x^dir) cannot divide p.
bool may_divide(const LaurentPoly& p, const CycloFactor& f) {
  const ModField& field = field_for(f.order);
  const std::uint64_t P = field.p;
  // c . dir = 1 by the extended Euclidean algorithm.
  std::int64_t g = 0;
  std::array<std::int64_t, kMaxVars> c{};
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const std::int64_t d = f.dir[i];
    if (d == 0) continue;
    if (g == 0) {
      g = d;
      c[i] = 1;
      continue;
    }
    std::int64_t r0 = g, r1 = d, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
      std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    for (auto& x : c) x *= s0;
    c[i] = t0;
    g = r0;
  }
  if (g != 1 && g != -1) return true;
  const std::size_t pivot = first_nonzero(f.dir);
  std::array<std::uint64_t, kMaxVars> x{};
  for (std::size_t i = 0; i < kMaxVars; ++i) x[i] = modp::pow_signed(field.zeta, g * c[i], P);
  // Move off the special point along the torus x^dir = 1.
  std::uint64_t r = 3;
  for (std::size_t j = 0; j < kMaxVars; ++j) {
    if (j == pivot) continue;
    r = modp::mul(r, 7, P);
    x[j] = modp::mul(x[j], modp::pow_signed(r, f.dir[pivot], P), P);
    x[pivot] = modp::mul(x[pivot], modp::pow_signed(r, -static_cast<std::int64_t>(f.dir[j]), P), P);
  }
  std::array<std::uint64_t, kMaxVars> x_inv{};
  for (std::size_t i = 0; i < p.nvars(); ++i) x_inv[i] = modp::inverse(x[i], P);
  std::uint64_t total = 0;
  for (const auto& t : p.terms()) {
    const auto coeff = modp::reduce(t.coeff, P);
    if (!coeff) return true;
    std::uint64_t v = *coeff;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const std::int32_t e = t.exp[i];
      if (e != 0) v = modp::mul(v, modp::pow(e > 0 ? x[i] : x_inv[i], static_cast<std::uint64_t>(e > 0 ? e : -e), P), P);
    }
    total = (total + v) % P;
  }
  return total == 0;
}

std::mutex& cyclo_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, std::vector<long>>& cyclo_cache() {
  static std::map<unsigned, std::vector<long>> cache;
  return cache;
}

std::vector<long> compute_cyclotomic(unsigned m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<long> f = cyclotomic_coefficients(d);
    const std::size_t df = f.size() - 1;
    std::vector<long> q(p.size() - df, 0);
    for (std::size_t i = p.size(); i-- > df;) {
      const long c = p[i];  // f is monic
      q[i - df] = c;
      for (std::size_t j = 0; j <= df; ++j) p[i - df + j] -= c * f[j];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

std::vector<long> cyclotomic_coefficients(unsigned m) {
  if (m == 0) throw InvalidArgument("cyclotomic polynomial of order 0");
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex());
    auto it = cyclo_cache().find(m);
    if (it != cyclo_cache().end()) return it->second;
  }
  std::vector<long> p = compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(cyclo_mutex());
  cyclo_cache().emplace(m, p);
  return p;
}

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int32_t primitive_direction(const Exponent& e, Exponent& dir) {
  std::int32_t g = 0;
  for (auto x : e) g = std::gcd(g, std::abs(x));
  if (g == 0) throw InvalidArgument("primitive_direction: zero exponent");
  const std::size_t pivot = first_nonzero(e);
  const std::int32_t k = e[pivot] > 0 ? g : -g;
  for (std::size_t i = 0; i < kMaxVars; ++i) dir[i] = e[i] / k;
  return k;
}

LaurentPoly CycloFactor::expand(std::size_t nvars) const {
  const std::vector<long> c = cyclotomic_coefficients(order);
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) terms.push_back({scaled(dir, static_cast<std::int32_t>(j)), mpq_class(c[j])});
  }
  return LaurentPoly::from_terms(nvars, std::move(terms));
}

FactoredBinomial factor_cyclotomic_power(unsigned m, const Exponent& e) {
  FactoredBinomial out;
  Exponent dir{};
  const std::int32_t k = primitive_direction(e, dir);
  const auto ak = static_cast<unsigned>(std::abs(k));
  if (k < 0) {
    // Phi_m(w^-1) = w^-phi(m) Phi_m(w) for m >= 2, and -w^-1 Phi_1(w) for m = 1.
    if (m == 1) {
      out.unit_coeff = -1;
      out.unit_exp = scaled(dir, -static_cast<std::int32_t>(ak));
    } else {
      out.unit_exp = scaled(dir, -static_cast<std::int32_t>(ak * euler_phi(m)));
    }
  }
  // Phi_m(nu^k) = prod over d | mk with d / gcd(d, k) = m of Phi_d(nu).
  const unsigned mk = m * ak;
  for (unsigned d = 1; d <= mk; ++d) {
    if (mk % d == 0 && d / std::gcd(d, ak) == m) out.factors.push_back({dir, d});
  }
  return out;
}

FactoredBinomial factor_one_minus(const Exponent& e) {
  FactoredBinomial f = factor_cyclotomic_power(1, e);
  f.unit_coeff = -f.unit_coeff;
  return f;
}

std::optional<LaurentPoly> divide_by(const LaurentPoly& p, const CycloFactor& f) {
  if (p.is_zero()) return p;
  if (!may_divide(p, f)) return std::nullopt;
  const UPoly phi = to_upoly(cyclotomic_coefficients(f.order));
  const auto classes = decompose(p, f.dir);
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, cp] : classes) {
    if (cp.coeffs.size() < phi.size()) return std::nullopt;
    UPoly q;
    UPoly r = poly_rem(cp.coeffs, phi, &q);
    if (!r.empty()) return std::nullopt;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] != 0) terms.push_back({key + scaled(f.dir, cp.low + static_cast<std::int32_t>(j)), q[j]});
    }
  }
  return LaurentPoly::from_terms(p.nvars(), std::move(terms));
}

BinomialSplit split_binomial_factors(const LaurentPoly& p) {
  if (p.is_zero()) throw InvalidArgument("split_binomial_factors: zero polynomial");
  BinomialSplit out{{}, p};
  if (p.size() < 2) return out;

  // A factor Phi_m(x^dir) forces the class of the smallest exponent to hold
  // a second term, so dir is parallel to one of these differences.
  std::set<Exponent> dirs;
  const Exponent e0 = p.terms().front().exp;
  for (std::size_t i = 1; i < p.size(); ++i) {
    Exponent dir{};
    primitive_direction(p.terms()[i].exp - e0, dir);
    dirs.insert(dir);
  }

  for (const Exponent& dir : dirs) {
    if (out.rest.size() < 2) break;
    const auto classes = decompose(out.rest, dir);
    UPoly g;
    bool first = true;
    for (const auto& [key, cp] : classes) {
      g = first ? cp.coeffs : poly_gcd(g, cp.coeffs);
      first = false;
      trim(g);
      if (g.size() <= 1) break;
    }
    // Strip powers of mu: they are units.
    std::size_t lead_zeros = 0;
    while (lead_zeros < g.size() && g[lead_zeros] == 0) ++lead_zeros;
    g.erase(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    if (g.size() <= 1) continue;

    const auto degree = static_cast<unsigned>(g.size() - 1);
    // phi(m) >= sqrt(m / 2), so orders beyond 2 * degree^2 cannot divide g.
    const unsigned bound = 2 * degree * degree + 2;
    for (unsigned m = 1; m <= bound && g.size() > 1; ++m) {
      if (euler_phi(m) > g.size() - 1) continue;
      const UPoly phi = to_upoly(cyclotomic_coefficients(m));
      for (;;) {
        UPoly q;
        if (g.size() < phi.size() || !poly_rem(g, phi, &q).empty()) break;
        g = std::move(q);
        auto divided = divide_by(out.rest, CycloFactor{dir, m});
        if (!divided) throw Error("split_binomial_factors: inconsistent class gcd");
        out.rest = std::move(*divided);
        ++out.factors[CycloFactor{dir, m}];
      }
    }
  }
  return out;
}

}  // namespace higgsmot
