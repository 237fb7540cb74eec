#include "higgsmot/mot_class.hpp"

#include "higgsmot/errors.hpp"

namespace higgsmot {

namespace {

Exponent uv_exponent(int a, int b) {
  Exponent e{};
  e[kU] = a;
  e[kV] = b;
  return e;
}

long total_degree(const LaurentPoly& p) {
  long best = 0;
  bool first = true;
  for (const auto& t : p.terms()) {
    const long d = static_cast<long>(t.exp[kU]) + t.exp[kV];
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

}  // namespace

MotClass::MotClass(const RationalFunction& rf) : rf_(rf) {
  if (rf_.nvars() != kClassVars) {
    try {
      rf_ = rf_.with_nvars(kClassVars);
    } catch (const InvalidArgument&) {
      throw InvalidArgument("MotClass: value depends on variables other than u, v");
    }
  }
}

MotClass MotClass::u() { return monomial(1, 0); }
MotClass MotClass::v() { return monomial(0, 1); }
MotClass MotClass::L() { return monomial(1, 1); }
MotClass MotClass::L_pow(int k) { return monomial(k, k); }

MotClass MotClass::monomial(int a, int b, const mpq_class& c) {
  return MotClass(RationalFunction(LaurentPoly::monomial(kClassVars, uv_exponent(a, b), c)));
}

MotClass MotClass::inverse_one_minus(int a, int b) {
  return MotClass(RationalFunction::inverse_one_minus(kClassVars, uv_exponent(a, b)));
}

MotClass MotClass::sum(const std::vector<MotClass>& terms) {
  std::vector<RationalFunction> rfs;
  rfs.reserve(terms.size());
  for (const auto& t : terms) {
    if (!t.is_zero()) rfs.push_back(t.rf_);
  }
  MotClass out;
  out.rf_ = RationalFunction::sum(rfs).with_nvars(kClassVars);
  return out;
}

MotClass MotClass::sum_of_products(const std::vector<WeightedProduct>& items) {
  std::vector<RationalFunction::WeightedProduct> rfs;
  rfs.reserve(items.size());
  for (const auto& it : items) rfs.push_back({&it.a->rf_, it.b ? &it.b->rf_ : nullptr, it.weight});
  MotClass out;
  out.rf_ = RationalFunction::sum_of_products(rfs).with_nvars(kClassVars);
  return out;
}

std::string MotClass::to_string() const { return rf_.to_string({"u", "v"}); }

long MotClass::dimension() const {
  if (is_zero()) throw InvalidArgument("dimension of the zero class");
  return total_degree(rf_.numerator()) - total_degree(rf_.denominator());
}

MotClass make_class(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.nvars() > kClassVars || den.nvars() > kClassVars) {
    throw InvalidArgument("make_class: polynomials must be in u, v");
  }
  return MotClass(RationalFunction::from_fraction(num.with_nvars(kClassVars), den.with_nvars(kClassVars)));
}

MotClass adams(unsigned n, const MotClass& x) {
  if (n == 0) throw InvalidArgument("adams: n must be positive");
  if (n == 1) return x;
  MonomialMap map{kClassVars, {uv_exponent(static_cast<int>(n), 0), uv_exponent(0, static_cast<int>(n))}};
  return MotClass(x.rational().substitute(map));
}

MotClass gl_class(unsigned n) {
  MotClass result = 1;
  const int k = static_cast<int>(n);
  for (int i = 0; i < k; ++i) result *= MotClass::L_pow(k) - MotClass::L_pow(i);
  return result;
}

MotClass nilcone_class(unsigned d) { return MotClass::L_pow(static_cast<int>(d * (d - 1))) / gl_class(d); }

std::optional<LForm> as_l_form(const MotClass& x) {
  const auto [num, den] = x.canonical();
  LForm out;
  auto collect = [](const LaurentPoly& p, std::map<int, mpq_class>& into) {
    for (const auto& t : p.terms()) {
      if (t.exp[kU] != t.exp[kV]) return false;
      into[t.exp[kU]] = t.coeff;
    }
    return true;
  };
  if (!collect(num, out.num) || !collect(den, out.den)) return std::nullopt;
  return out;
}

}  // namespace higgsmot
