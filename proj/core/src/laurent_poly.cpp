#include "higgsmot/laurent_poly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "higgsmot/errors.hpp"

namespace higgsmot {

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent scaled(const Exponent& a, std::int32_t k) {
  Exponent r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] * k;
  return r;
}

bool is_zero_exponent(const Exponent& a) {
  return std::all_of(a.begin(), a.end(), [](std::int32_t x) { return x == 0; });
}

Exponent unit_exponent(std::size_t index, std::int32_t power) {
  Exponent e{};
  e.at(index) = power;
  return e;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : e) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    h *= 0x100000001b3ULL;
  }
  return h;
}

Exponent MonomialMap::apply(const Exponent& e) const {
  Exponent r{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (e[i] != 0) r = r + scaled(images[i], e[i]);
  }
  return r;
}

MonomialMap MonomialMap::identity(std::size_t nvars) {
  MonomialMap m;
  m.target_vars = nvars;
  for (std::size_t i = 0; i < nvars; ++i) m.images.push_back(unit_exponent(i));
  return m;
}

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw InvalidArgument("LaurentPoly: too many variables");
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpq_class& c) {
  return monomial(nvars, Exponent{}, c);
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const Exponent& e, const mpq_class& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index) {
  return monomial(nvars, unit_exponent(index));
}

LaurentPoly LaurentPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  LaurentPoly p(nvars);
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exp == t.exp) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_[0].exp));
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && is_zero_exponent(terms_[0].exp) && terms_[0].coeff == 1;
}

mpq_class LaurentPoly::constant_term() const { return coefficient(Exponent{}); }

mpq_class LaurentPoly::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) { return *this += LaurentPoly(other); }

LaurentPoly& LaurentPoly::operator+=(LaurentPoly&& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    const std::size_t n = std::max(nvars_, other.nvars_);
    *this = std::move(other);
    nvars_ = n;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].exp < other.terms_[j].exp)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].exp < terms_[i].exp) {
      out.push_back(std::move(other.terms_[j++]));
    } else {
      terms_[i].coeff += other.terms_[j].coeff;
      if (terms_[i].coeff != 0) out.push_back(std::move(terms_[i]));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  nvars_ = std::max(nvars_, other.nvars_);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(n);
  if (a.size() == 1 || b.size() == 1) {
    LaurentPoly r(n);
    const LaurentPoly& big = a.size() == 1 ? b : a;
    const LaurentPoly::Term& t = a.size() == 1 ? a.terms_[0] : b.terms_[0];
    r.terms_.reserve(big.size());
    for (const auto& s : big.terms_) r.terms_.push_back({s.exp + t.exp, s.coeff * t.coeff});
    return r;  // shifting preserves the order
  }
  return LaurentPoly::linear_combination(n, {{&a, &b, 1}});
}

LaurentPoly LaurentPoly::linear_combination(std::size_t nvars, const std::vector<WeightedProduct>& items) {
  LaurentPoly r(nvars);
  static const LaurentPoly one = constant(0, 1);
  struct Item {
    const LaurentPoly* a;
    const LaurentPoly* b;
    std::vector<mpz_class> store_a, store_b;
    std::vector<mpz_srcptr> ia, ib;
  };
  std::vector<Item> work;
  mpz_class common = 1;
  std::vector<mpz_class> dens;
  std::vector<const mpq_class*> weights;
  std::size_t pairs = 0;
  for (const auto& it : items) {
    const LaurentPoly* b = it.b ? it.b : &one;
    if (it.a->is_zero() || b->is_zero() || it.weight == 0) continue;
    work.push_back({it.a, b, {}, {}, {}, {}});
    dens.push_back(it.a->denominator_lcm() * b->denominator_lcm() * it.weight.get_den());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), dens.back().get_mpz_t());
    weights.push_back(&it.weight);
    pairs += it.a->size() * b->size();
  }
  if (work.empty()) return r;

  // Integer coefficients with everything over the common denominator; the
  // weight and the rescaling go into the left factor.
  for (std::size_t w = 0; w < work.size(); ++w) {
    Item& item = work[w];
    const mpz_class da = item.a->denominator_lcm(), db = item.b->denominator_lcm();
    const mpz_class left = weights[w]->get_num() * (common / dens[w]) * da;
    auto integers = [](const LaurentPoly& p, const mpz_class& scale, std::vector<mpz_class>& store,
                       std::vector<mpz_srcptr>& out) {
      out.reserve(p.size());
      if (scale == 1) {
        for (const auto& t : p.terms_) out.push_back(t.coeff.get_num_mpz_t());
        return;
      }
      store.reserve(p.size());
      for (const auto& t : p.terms_) {
        store.emplace_back(t.coeff.get_num() * (scale / t.coeff.get_den()));
        out.push_back(store.back().get_mpz_t());
      }
    };
    integers(*item.a, left, item.store_a, item.ia);
    integers(*item.b, db, item.store_b, item.ib);
  }
  auto emit = [&r, &common](const Exponent& e, mpz_class& c) {
    mpq_class q;
    mpz_swap(mpq_numref(q.get_mpq_t()), c.get_mpz_t());
    if (common != 1) {
      mpz_set(mpq_denref(q.get_mpq_t()), common.get_mpz_t());
      q.canonicalize();
    }
    r.terms_.push_back({e, std::move(q)});
  };

  // Dense accumulation over the bounding box when it is small; row-major
  // order with variable 0 slowest keeps the output sorted.
  Exponent lo{}, hi{};
  for (std::size_t w = 0; w < work.size(); ++w) {
    const Exponent l = work[w].a->min_exponents() + work[w].b->min_exponents();
    const Exponent h = work[w].a->max_exponents() + work[w].b->max_exponents();
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      lo[v] = w == 0 ? l[v] : std::min(lo[v], l[v]);
      hi[v] = w == 0 ? h[v] : std::max(hi[v], h[v]);
    }
  }
  std::array<std::size_t, kMaxVars> stride{};
  std::size_t box = 1;
  for (std::size_t v = nvars; v-- > 0;) {
    stride[v] = box;
    box *= static_cast<std::size_t>(hi[v] - lo[v] + 1);
    if (box > (std::size_t{1} << 22)) break;
  }
  if (box <= 8 * pairs + 64 && box <= (std::size_t{1} << 22)) {
    auto offset = [&](const Exponent& e) {
      std::size_t k = 0;
      for (std::size_t v = 0; v < nvars; ++v) k += static_cast<std::size_t>(e[v] - lo[v]) * stride[v];
      return k;
    };
    // Scratch reused across calls; every touched slot is reset below.
    thread_local std::vector<mpz_class> acc;
    thread_local std::vector<char> touched;
    if (acc.size() < box) {
      acc.resize(box);
      touched.resize(box, 0);
    }
    std::vector<std::size_t> oa, ob;
    for (const auto& item : work) {
      // offset(ea + eb) = offset(ea) + offset(eb) - offset(0) on the box.
      const std::size_t base = offset(Exponent{});
      oa.assign(item.a->size(), 0);
      ob.assign(item.b->size(), 0);
      for (std::size_t i = 0; i < item.a->size(); ++i) oa[i] = offset(item.a->terms_[i].exp);
      for (std::size_t j = 0; j < item.b->size(); ++j) ob[j] = offset(item.b->terms_[j].exp) - base;
      for (std::size_t i = 0; i < item.a->size(); ++i) {
        for (std::size_t j = 0; j < item.b->size(); ++j) {
          const std::size_t k = oa[i] + ob[j];
          mpz_addmul(acc[k].get_mpz_t(), item.ia[i], item.ib[j]);
          touched[k] = 1;
        }
      }
    }
    r.terms_.reserve(std::min(box, pairs));
    for (std::size_t k = 0; k < box; ++k) {
      if (!touched[k]) continue;
      touched[k] = 0;
      if (acc[k] == 0) continue;
      Exponent e = lo;
      std::size_t rest = k;
      for (std::size_t v = 0; v < nvars; ++v) {
        e[v] += static_cast<std::int32_t>(rest / stride[v]);
        rest %= stride[v];
      }
      emit(e, acc[k]);
    }
    return r;
  }

  // Otherwise sort the exponent pairs and sum each run of equal exponents.
  struct Pair {
    Exponent exp;
    std::uint32_t w, i, j;
  };
  std::vector<Pair> all;
  all.reserve(pairs);
  for (std::size_t w = 0; w < work.size(); ++w) {
    for (std::size_t i = 0; i < work[w].a->size(); ++i) {
      for (std::size_t j = 0; j < work[w].b->size(); ++j) {
        all.push_back({work[w].a->terms_[i].exp + work[w].b->terms_[j].exp, static_cast<std::uint32_t>(w),
                       static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const Pair& x, const Pair& y) { return x.exp < y.exp; });
  r.terms_.reserve(all.size());
  mpz_class c;
  for (std::size_t k = 0; k < all.size();) {
    c = 0;
    std::size_t l = k;
    for (; l < all.size() && all[l].exp == all[k].exp; ++l) {
      const Item& item = work[all[l].w];
      mpz_addmul(c.get_mpz_t(), item.ia[all[l].i], item.ib[all[l].j]);
    }
    if (c != 0) emit(all[k].exp, c);
    k = l;
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const& { return LaurentPoly(*this).scaled(c); }

LaurentPoly LaurentPoly::scaled(const mpq_class& c) && {
  if (c == 0) return LaurentPoly(nvars_);
  if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return std::move(*this);
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp = t.exp + e;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const MonomialMap& map) const {
  LaurentPoly r(map.target_vars);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({map.apply(t.exp), t.coeff});
  r.canonicalize();
  return r;
}

LaurentPoly LaurentPoly::with_nvars(std::size_t nvars) const {
  for (const auto& t : terms_) {
    for (std::size_t i = nvars; i < kMaxVars; ++i) {
      if (t.exp[i] != 0) throw InvalidArgument("LaurentPoly::with_nvars: variable in use");
    }
  }
  LaurentPoly r = *this;
  r.nvars_ = nvars;
  return r;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m{};
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exp[i]);
  }
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent m{};
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = std::max(m[i], t.exp[i]);
  }
  return m;
}

bool LaurentPoly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.exp[var] != 0; });
}

std::map<int, LaurentPoly> LaurentPoly::collect(std::size_t var) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Term s = t;
    s.exp[var] = 0;
    buckets[t.exp[var]].push_back(std::move(s));
  }
  std::map<int, LaurentPoly> out;
  for (auto& [k, ts] : buckets) out.emplace(k, from_terms(nvars_, std::move(ts)));
  return out;
}

mpz_class LaurentPoly::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

mpz_class LaurentPoly::numerator_gcd() const {
  mpz_class g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpq_class c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto k = it->exp[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (k != 1) mono += "^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
    }
    if (mono.empty()) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono;
    } else {
      os << c.get_str() << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace higgsmot
