#include "higgsmot/rational_function.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "higgsmot/errors.hpp"
#include "higgsmot/poly_gcd.hpp"

namespace higgsmot {

LaurentPoly expand_factors(const FactorMap& factors, std::size_t nvars) {
  LaurentPoly p = LaurentPoly::constant(nvars, 1);
  for (const auto& [f, e] : factors) p *= f.expand(nvars).pow(static_cast<unsigned>(e));
  return p;
}

std::size_t grlex_leading_index(const LaurentPoly& p) {
  if (p.is_zero()) throw InvalidArgument("grlex_leading_index: zero polynomial");
  auto total = [](const Exponent& e) {
    long s = 0;
    for (auto x : e) s += x;
    return s;
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const auto& a = p.terms()[i].exp;
    const auto& b = p.terms()[best].exp;
    const long ta = total(a), tb = total(b);
    if (ta > tb || (ta == tb && b < a)) best = i;
  }
  return best;
}

RationalFunction::RationalFunction(std::size_t nvars)
    : nvars_(nvars), num_(nvars), generic_(LaurentPoly::constant(nvars, 1)) {}

RationalFunction::RationalFunction(LaurentPoly numerator)
    : nvars_(numerator.nvars()), num_(std::move(numerator)), generic_(LaurentPoly::constant(nvars_, 1)) {}

RationalFunction RationalFunction::constant(std::size_t nvars, const mpq_class& c) {
  return RationalFunction(LaurentPoly::constant(nvars, c));
}

RationalFunction RationalFunction::from_fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  RationalFunction r(std::max(num.nvars(), den.nvars()));
  r.num_ = num.with_nvars(r.nvars_);
  r.absorb_generic(den.with_nvars(r.nvars_));
  r.reduce();
  return r;
}

RationalFunction RationalFunction::from_factors(LaurentPoly num, const FactorMap& factors) {
  RationalFunction r(num.nvars());
  r.num_ = std::move(num);
  for (const auto& [f, e] : factors) {
    if (e < 0) throw InvalidArgument("from_factors: negative multiplicity");
    if (e > 0) r.cyclo_[f] += e;
  }
  r.reduce();
  return r;
}

RationalFunction RationalFunction::inverse_one_minus(std::size_t nvars, const Exponent& e) {
  const FactoredBinomial fb = factor_one_minus(e);
  FactorMap fm;
  for (const auto& f : fb.factors) ++fm[f];
  LaurentPoly num = LaurentPoly::monomial(nvars, Exponent{} - fb.unit_exp, 1 / fb.unit_coeff);
  return from_factors(std::move(num), fm);
}

RationalFunction RationalFunction::sum(const std::vector<RationalFunction>& terms) {
  std::size_t n = 0;
  for (const auto& t : terms) n = std::max(n, t.nvars_);
  // Common denominator: the lcm of the cyclotomic parts times the lcm of the
  // generic parts.
  FactorMap lcm;
  LaurentPoly generic = LaurentPoly::constant(n, 1);
  std::size_t live = 0;
  const RationalFunction* last = nullptr;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    ++live;
    last = &t;
    for (const auto& [f, e] : t.cyclo_) {
      int& slot = lcm[f];
      slot = std::max(slot, e);
    }
    if (!t.generic_.is_one() && !(t.generic_ == generic)) {
      const LaurentPoly g = polynomial_gcd(generic, t.generic_);
      generic *= *exact_quotient(t.generic_, g);
    }
  }
  if (live == 0) return RationalFunction(n);
  if (live == 1) return last->with_nvars(n);
  std::map<FactorMap, LaurentPoly> cofactors;
  std::deque<LaurentPoly> mixed;
  std::vector<LaurentPoly::WeightedProduct> items;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    FactorMap missing;
    for (const auto& [f, e] : lcm) {
      auto it = t.cyclo_.find(f);
      const int have = it == t.cyclo_.end() ? 0 : it->second;
      if (e > have) missing[f] = e - have;
    }
    const LaurentPoly* cofactor = nullptr;
    if (!missing.empty()) {
      auto it = cofactors.find(missing);
      if (it == cofactors.end()) it = cofactors.emplace(missing, expand_factors(missing, n)).first;
      cofactor = &it->second;
    }
    if (!(t.generic_ == generic)) {
      LaurentPoly q = *exact_quotient(generic, t.generic_);
      mixed.push_back(cofactor ? *cofactor * q : std::move(q));
      cofactor = &mixed.back();
    }
    items.push_back({&t.num_, cofactor, 1});
  }
  LaurentPoly total = LaurentPoly::linear_combination(n, items);
  RationalFunction r(n);
  r.num_ = std::move(total);
  r.cyclo_ = std::move(lcm);
  if (!generic.is_one()) {
    Exponent m{};
    mpq_class scale;
    const LaurentPoly rest = primitive_normalized(strip_monomial(generic, &m), &scale);
    r.num_ = r.num_.shifted(Exponent{} - m).scaled(scale);
    r.generic_ = rest;
  }
  r.reduce();
  return r;
}

RationalFunction RationalFunction::sum_of_products(const std::vector<WeightedProduct>& items) {
  std::size_t n = 0;
  bool generic = false;
  for (const auto& it : items) {
    n = std::max(n, it.a->nvars_);
    if (it.b) n = std::max(n, it.b->nvars_);
    generic = generic || !it.a->generic_.is_one() || (it.b && !it.b->generic_.is_one());
  }
  if (generic) {
    std::vector<RationalFunction> terms;
    terms.reserve(items.size());
    for (const auto& it : items) {
      if (it.weight == 0 || it.a->is_zero() || (it.b && it.b->is_zero())) continue;
      terms.push_back((it.b ? product(*it.a, *it.b) : *it.a).scaled(it.weight));
    }
    return sum(terms);
  }
  std::vector<FactorMap> dens;
  FactorMap lcm;
  std::vector<const WeightedProduct*> live;
  for (const auto& it : items) {
    if (it.weight == 0 || it.a->is_zero() || (it.b && it.b->is_zero())) continue;
    live.push_back(&it);
    FactorMap f = it.a->cyclo_;
    if (it.b) {
      for (const auto& [k, e] : it.b->cyclo_) f[k] += e;
    }
    for (const auto& [k, e] : f) {
      int& slot = lcm[k];
      slot = std::max(slot, e);
    }
    dens.push_back(std::move(f));
  }
  if (live.empty()) return RationalFunction(n);
  std::map<FactorMap, LaurentPoly> cofactors;
  std::deque<LaurentPoly> scaled_left;
  std::vector<LaurentPoly::WeightedProduct> parts;
  for (std::size_t i = 0; i < live.size(); ++i) {
    FactorMap missing;
    for (const auto& [f, e] : lcm) {
      auto it = dens[i].find(f);
      const int have = it == dens[i].end() ? 0 : it->second;
      if (e > have) missing[f] = e - have;
    }
    const LaurentPoly* left = &live[i]->a->num_;
    const LaurentPoly* right = live[i]->b ? &live[i]->b->num_ : nullptr;
    if (!missing.empty()) {
      auto it = cofactors.find(missing);
      if (it == cofactors.end()) it = cofactors.emplace(missing, expand_factors(missing, n)).first;
      if (right == nullptr) {
        right = &it->second;
      } else {
        if (left->size() > right->size()) std::swap(left, right);
        scaled_left.push_back(*left * it->second);
        left = &scaled_left.back();
      }
    }
    parts.push_back({left, right, live[i]->weight});
  }
  RationalFunction r(n);
  r.num_ = LaurentPoly::linear_combination(n, parts);
  r.cyclo_ = std::move(lcm);
  r.reduce();
  return r;
}

void RationalFunction::absorb_generic(const LaurentPoly& poly) {
  if (poly.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  Exponent m{};
  mpq_class scale;
  LaurentPoly p = primitive_normalized(strip_monomial(poly, &m), &scale);
  num_ = num_.shifted(Exponent{} - m).scaled(scale);
  if (p.is_constant()) return;
  BinomialSplit split = split_binomial_factors(p);
  for (const auto& [f, e] : split.factors) cyclo_[f] += e;
  LaurentPoly rest = primitive_normalized(strip_monomial(split.rest, &m), &scale);
  num_ = num_.shifted(Exponent{} - m).scaled(scale);
  if (!rest.is_constant()) generic_ = generic_ * rest;
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    cyclo_.clear();
    generic_ = LaurentPoly::constant(nvars_, 1);
    return;
  }
  for (auto it = cyclo_.begin(); it != cyclo_.end();) {
    while (it->second > 0) {
      auto q = divide_by(num_, it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? cyclo_.erase(it) : std::next(it);
  }
  if (!generic_.is_one()) {
    const LaurentPoly g = polynomial_gcd(num_, generic_);
    if (!g.is_constant()) {
      num_ = *exact_quotient(num_, g);
      LaurentPoly rest = *exact_quotient(generic_, g);
      Exponent m{};
      mpq_class scale;
      rest = primitive_normalized(strip_monomial(rest, &m), &scale);
      num_ = num_.shifted(Exponent{} - m).scaled(scale);
      generic_ = rest.is_constant() ? LaurentPoly::constant(nvars_, 1) : rest;
    }
  }
}

LaurentPoly RationalFunction::denominator() const {
  LaurentPoly d = expand_factors(cyclo_, nvars_);
  if (!generic_.is_one()) d *= generic_;
  return d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    nvars_ = std::max(nvars_, other.nvars_);
    return *this;
  }
  const std::size_t n = std::max(nvars_, other.nvars_);
  if (cyclo_ == other.cyclo_ && generic_ == other.generic_) {
    num_ += other.num_;
    nvars_ = n;
    reduce();
    return *this;
  }
  FactorMap lcm = cyclo_;
  for (const auto& [f, e] : other.cyclo_) {
    int& slot = lcm[f];
    slot = std::max(slot, e);
  }
  FactorMap missing_a, missing_b;
  for (const auto& [f, e] : lcm) {
    auto ia = cyclo_.find(f);
    auto ib = other.cyclo_.find(f);
    const int ea = ia == cyclo_.end() ? 0 : ia->second;
    const int eb = ib == other.cyclo_.end() ? 0 : ib->second;
    if (e > ea) missing_a[f] = e - ea;
    if (e > eb) missing_b[f] = e - eb;
  }
  LaurentPoly na = num_ * expand_factors(missing_a, n);
  LaurentPoly nb = other.num_ * expand_factors(missing_b, n);
  LaurentPoly generic_raw = LaurentPoly::constant(n, 1);
  if (generic_ == other.generic_) {
    generic_raw = generic_;
  } else {
    const LaurentPoly g = polynomial_gcd(generic_, other.generic_);
    const LaurentPoly ka = *exact_quotient(other.generic_, g);
    const LaurentPoly kb = *exact_quotient(generic_, g);
    na *= ka;
    nb *= kb;
    generic_raw = generic_ * ka;
  }
  RationalFunction r(n);
  r.num_ = na + nb;
  r.cyclo_ = std::move(lcm);
  if (!generic_raw.is_one()) r.absorb_generic(generic_raw);
  r.reduce();
  *this = std::move(r);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction RationalFunction::product(const RationalFunction& a, const RationalFunction& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  if (a.is_zero() || b.is_zero()) return RationalFunction(n);
  // Each operand is already reduced, so only cross terms can cancel.
  FactorMap fa = a.cyclo_, fb = b.cyclo_;
  auto cross = [](const LaurentPoly& num, std::optional<LaurentPoly>& reduced, FactorMap& factors) {
    if (num.is_monomial()) return;
    for (auto it = factors.begin(); it != factors.end();) {
      while (it->second > 0) {
        auto q = divide_by(reduced ? *reduced : num, it->first);
        if (!q) break;
        reduced = std::move(*q);
        --it->second;
      }
      it = it->second == 0 ? factors.erase(it) : std::next(it);
    }
  };
  std::optional<LaurentPoly> ra, rb;
  cross(a.num_, ra, fb);
  cross(b.num_, rb, fa);
  for (const auto& [f, e] : fb) fa[f] += e;

  RationalFunction r(n);
  r.num_ = (ra ? *ra : a.num_) * (rb ? *rb : b.num_);
  r.cyclo_ = std::move(fa);
  if (!a.generic_.is_one() || !b.generic_.is_one()) {
    r.generic_ = a.generic_ * b.generic_;
    r.reduce();
  }
  return r;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  *this = product(*this, other);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  return *this *= other.inverse();
}

RationalFunction RationalFunction::scaled(const mpq_class& c) const& { return RationalFunction(*this).scaled(c); }

RationalFunction RationalFunction::scaled(const mpq_class& c) && {
  if (c == 0) return RationalFunction(nvars_);
  num_ = std::move(num_).scaled(c);
  return std::move(*this);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  if (num_.is_monomial()) {
    // Fast path: monomial numerator, keep the factored denominator.
    RationalFunction r(nvars_);
    const auto& t = num_.terms().front();
    const LaurentPoly inv = LaurentPoly::monomial(nvars_, Exponent{} - t.exp, 1 / t.coeff);
    r.num_ = expand_factors(cyclo_, nvars_) * inv;
    if (!generic_.is_one()) r.num_ *= generic_;
    return r;
  }
  return from_fraction(denominator(), num_);
}

RationalFunction RationalFunction::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFunction result = constant(nvars_, 1);
  RationalFunction base = *this;
  auto k = static_cast<unsigned>(n);
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

RationalFunction RationalFunction::substitute(const MonomialMap& map) const {
  const std::size_t n = map.target_vars;
  RationalFunction r(n);
  r.num_ = num_.substitute(map);
  for (const auto& [f, e] : cyclo_) {
    const Exponent image = map.apply(f.dir);
    if (is_zero_exponent(image)) {
      // Phi_m(1): zero for m = 1, p for prime powers m = p^k, 1 otherwise.
      if (f.order == 1) throw PoleAtSubstitution("substitution sends a denominator factor to zero");
      long value = 0;
      for (long c : cyclotomic_coefficients(f.order)) value += c;
      mpq_class s = 1;
      for (int i = 0; i < e; ++i) s *= value;
      r.num_ = r.num_.scaled(1 / s);
      continue;
    }
    const FactoredBinomial fb = factor_cyclotomic_power(f.order, image);
    mpq_class s = 1;
    for (int i = 0; i < e; ++i) s *= fb.unit_coeff;
    r.num_ = r.num_.scaled(1 / s).shifted(Exponent{} - higgsmot::scaled(fb.unit_exp, e));
    for (const auto& g : fb.factors) r.cyclo_[g] += e;
  }
  if (!generic_.is_one()) {
    const LaurentPoly g = generic_.substitute(map);
    if (g.is_zero()) throw PoleAtSubstitution("substitution sends a denominator factor to zero");
    r.absorb_generic(g);
  }
  r.reduce();
  return r;
}

RationalFunction RationalFunction::with_nvars(std::size_t nvars) const {
  RationalFunction r = *this;
  r.nvars_ = nvars;
  r.num_ = num_.with_nvars(nvars);
  r.generic_ = generic_.with_nvars(nvars);
  for (const auto& [f, e] : cyclo_) {
    for (std::size_t i = nvars; i < kMaxVars; ++i) {
      if (f.dir[i] != 0) throw InvalidArgument("RationalFunction::with_nvars: variable in use");
    }
  }
  return r;
}

std::pair<LaurentPoly, LaurentPoly> RationalFunction::canonical_fraction() const {
  if (is_zero()) return {LaurentPoly(nvars_), LaurentPoly::constant(nvars_, 1)};
  LaurentPoly den = denominator();
  LaurentPoly num = num_;
  const Exponent md = den.min_exponents();
  den = den.shifted(Exponent{} - md);
  num = num.shifted(Exponent{} - md);
  Exponent lift{};
  const Exponent mn = num.min_exponents();
  for (std::size_t i = 0; i < kMaxVars; ++i) lift[i] = std::max(0, -mn[i]);
  den = den.shifted(lift);
  num = num.shifted(lift);
  // den is a primitive integer polynomial; push the numerator's rational
  // content into the pair.
  mpq_class content(num.numerator_gcd(), num.denominator_lcm());
  content.canonicalize();
  num = num.scaled(1 / content);
  num = num.scaled(mpq_class(content.get_num()));
  den = den.scaled(mpq_class(content.get_den()));
  if (den.terms()[grlex_leading_index(den)].coeff < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
  const auto [num, den] = canonical_fraction();
  if (den.is_one()) return num.to_string(names);
  std::string n = num.to_string(names);
  if (num.size() > 1) n = "(" + n + ")";
  std::string d = den.to_string(names);
  const bool bare = den.is_constant() || (den.size() == 1 && den.terms().front().coeff == 1);
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace higgsmot
