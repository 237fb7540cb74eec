#include "higgsmot/poly_gcd.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "higgsmot/errors.hpp"
#include "modp.hpp"

namespace higgsmot {

namespace {

int main_var(const LaurentPoly& p) {
  int v = -1;
  for (const auto& t : p.terms()) {
    for (int i = static_cast<int>(kMaxVars) - 1; i > v; --i) {
      if (t.exp[static_cast<std::size_t>(i)] != 0) {
        v = i;
        break;
      }
    }
  }
  return v;
}

int degree_in(const LaurentPoly& p, std::size_t v) { return p.is_zero() ? -1 : p.max_exponents()[v]; }

LaurentPoly leading_coeff_in(const LaurentPoly& p, std::size_t v, int degree) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exp[v] == degree) {
      LaurentPoly::Term s = t;
      s.exp[v] = 0;
      terms.push_back(std::move(s));
    }
  }
  return LaurentPoly::from_terms(p.nvars(), std::move(terms));
}

// Both arguments are polynomials (nonnegative exponents).
std::optional<LaurentPoly> quotient_poly(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDenominator("exact_quotient: division by zero");
  if (a.is_zero()) return LaurentPoly(a.nvars());
  if (b.is_constant()) return a.scaled(1 / b.constant_term());
  const auto v = static_cast<std::size_t>(main_var(b));
  const int m = degree_in(b, v);
  const LaurentPoly lc_b = leading_coeff_in(b, v, m);
  LaurentPoly q(a.nvars());
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const int n = degree_in(r, v);
    if (n < m) return std::nullopt;
    auto t = quotient_poly(leading_coeff_in(r, v, n), lc_b);
    if (!t) return std::nullopt;
    const LaurentPoly term = t->shifted(unit_exponent(v, n - m));
    q += term;
    r -= term * b;
  }
  return q;
}

// Dense univariate polynomials over Z/P, constant term first.
using ModPoly = std::vector<std::uint64_t>;

constexpr std::uint64_t kPrime = 2147483629;  // below 2^31

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = modp::inverse(b.back(), kPrime);
    while (a.size() >= b.size()) {
      const std::uint64_t f = modp::mul(a.back(), inv, kPrime);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + kPrime - modp::mul(f, b[i], kPrime)) % kPrime;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// p with every variable but v set to point; nullopt when a denominator
// vanishes mod P.
std::optional<ModPoly> specialize(const LaurentPoly& p, std::size_t v, const std::array<std::uint64_t, kMaxVars>& point) {
  ModPoly out(static_cast<std::size_t>(p.max_exponents()[v]) + 1, 0);
  for (const auto& t : p.terms()) {
    const auto c = modp::reduce(t.coeff, kPrime);
    if (!c) return std::nullopt;
    std::uint64_t x = *c;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (i != v && t.exp[i] != 0) x = modp::mul(x, modp::pow(point[i], static_cast<std::uint64_t>(t.exp[i]), kPrime), kPrime);
    }
    auto& slot = out[static_cast<std::size_t>(t.exp[v])];
    slot = (slot + x) % kPrime;
  }
  return out;
}

// True only when gcd(a, b) is provably constant: for each variable v the
// gcd of the specializations at a point keeping both leading coefficients
// in v has degree 0, which bounds the degree in v of the true gcd.
bool provably_coprime(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::max(a.nvars(), b.nvars());
  const Exponent da = a.max_exponents(), db = b.max_exponents();
  std::array<std::uint64_t, kMaxVars> point{};
  std::uint64_t seed = 12345;
  for (std::size_t v = 0; v < n; ++v) {
    if (da[v] == 0 || db[v] == 0) continue;
    bool settled = false;
    for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
      for (auto& x : point) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        x = (seed >> 33) % (kPrime - 2) + 2;
      }
      const auto pa = specialize(a, v, point);
      const auto pb = specialize(b, v, point);
      if (!pa || !pb || pa->back() == 0 || pb->back() == 0) continue;
      if (mod_gcd_degree(*pa, *pb) > 0) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly g(p.nvars());
  for (const auto& [k, c] : p.collect(v)) {
    g = gcd_poly(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

LaurentPoly primitive_part_in(const LaurentPoly& p, std::size_t v) {
  auto q = quotient_poly(p, content_in(p, v));
  if (!q) throw Error("polynomial_gcd: content does not divide");
  return *q;
}

LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
  const int db = degree_in(b, v);
  const LaurentPoly lc_b = leading_coeff_in(b, v, db);
  while (!a.is_zero()) {
    const int da = degree_in(a, v);
    if (da < db) break;
    const LaurentPoly lc_a = leading_coeff_in(a, v, da);
    a = lc_b * a - lc_a.shifted(unit_exponent(v, da - db)) * b;
    a = primitive_normalized(a);
  }
  return a;
}

LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : primitive_normalized(b);
  if (b.is_zero()) return primitive_normalized(a);
  if (a.is_constant() || b.is_constant()) return LaurentPoly::constant(a.nvars(), 1);
  if (provably_coprime(a, b)) return LaurentPoly::constant(a.nvars(), 1);
  const int va = main_var(a), vb = main_var(b);
  const auto v = static_cast<std::size_t>(std::max(va, vb));
  if (va != static_cast<int>(v)) return gcd_poly(a, content_in(b, v));
  if (vb != static_cast<int>(v)) return gcd_poly(content_in(a, v), b);

  const LaurentPoly c = gcd_poly(content_in(a, v), content_in(b, v));
  LaurentPoly pa = primitive_part_in(a, v);
  LaurentPoly pb = primitive_part_in(b, v);
  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  for (;;) {
    LaurentPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) {
      pb = LaurentPoly::constant(a.nvars(), 1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, v);
  }
  return primitive_normalized(c * primitive_part_in(pb, v));
}

}  // namespace

LaurentPoly strip_monomial(const LaurentPoly& p, Exponent* removed) {
  const Exponent m = p.min_exponents();
  if (removed) *removed = m;
  return p.shifted(Exponent{} - m);
}

LaurentPoly primitive_normalized(const LaurentPoly& p, mpq_class* scale) {
  if (p.is_zero()) {
    if (scale) *scale = 1;
    return p;
  }
  mpq_class c(p.denominator_lcm(), p.numerator_gcd());
  c.canonicalize();
  if (p.terms().back().coeff < 0) c = -c;
  if (scale) *scale = c;
  return p.scaled(c);
}

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroDenominator("exact_quotient: division by zero");
  if (a.is_zero()) return a;
  Exponent ma{}, mb{};
  const LaurentPoly pa = strip_monomial(a, &ma);
  const LaurentPoly pb = strip_monomial(b, &mb);
  auto q = quotient_poly(pa, pb);
  if (!q) return std::nullopt;
  return q->shifted(ma - mb);
}

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  const std::size_t n = std::max(a.nvars(), b.nvars());
  LaurentPoly g = gcd_poly(a.is_zero() ? a : strip_monomial(a), b.is_zero() ? b : strip_monomial(b));
  return strip_monomial(g.with_nvars(n));
}

}  // namespace higgsmot
