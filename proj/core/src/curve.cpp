#include "higgsmot/curve.hpp"

#include "higgsmot/errors.hpp"
#include "higgsmot/graded_series.hpp"

namespace higgsmot {

namespace {

Exponent l_exponent(int k) {
  Exponent e{};
  e[kU] = k;
  e[kV] = k;
  return e;
}

Exponent lz_exponent(int a, int b) {
  Exponent e = l_exponent(a);
  e[kZ] = b;
  return e;
}

}  // namespace

CurveModel::CurveModel(int genus) : genus_(genus) {
  if (genus < 0) throw NegativeGenus("genus must be nonnegative, got " + std::to_string(genus));
  const auto g = static_cast<unsigned>(genus);
  // P_X(T) in the variables (u, v, T).
  const LaurentPoly p = p_at_monomial(kSeriesVars, unit_exponent(kZ));
  for (const auto& [k, c] : p.collect(kZ)) {
    p_coeffs_.resize(static_cast<std::size_t>(k + 1));
    p_coeffs_[static_cast<std::size_t>(k)] = MotClass(RationalFunction(c.with_nvars(kClassVars)));
  }
  if (!p_coeffs_.front().is_one() || !(p_coeffs_.back() == MotClass::L_pow(genus)) || p_coeffs_.size() != 2 * g + 1) {
    throw Error("CurveModel: P_X must satisfy P(0) = 1 with top term L^g T^{2g}");
  }
  class_of_x_ = MotClass(1) - MotClass::u().scaled(genus) - MotClass::v().scaled(genus) + MotClass::L();
  jac_ = p_at(MotClass(1));
  pic_stack_ = jac_ / (MotClass::L() - MotClass(1));
  if (!(p_at(MotClass::L_pow(-1)) == MotClass::L_pow(-genus) * jac_)) {
    throw Error("CurveModel: P_X(1/L) differs from L^{-g} P_X(1)");
  }
}

LaurentPoly CurveModel::p_at_monomial(std::size_t nvars, const Exponent& e) const {
  const LaurentPoly one = LaurentPoly::constant(nvars, 1);
  const auto g = static_cast<unsigned>(genus_);
  const LaurentPoly a = one - LaurentPoly::monomial(nvars, e + unit_exponent(kU));
  const LaurentPoly b = one - LaurentPoly::monomial(nvars, e + unit_exponent(kV));
  return a.pow(g) * b.pow(g);
}

MotClass CurveModel::p_at(const MotClass& x) const {
  MotClass acc;
  for (auto it = p_coeffs_.rbegin(); it != p_coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalFunction CurveModel::zeta_at_monomial(std::size_t nvars, const Exponent& e) const {
  const Exponent le = e + l_exponent(1);
  if (is_zero_exponent(e) || is_zero_exponent(le)) {
    throw PoleAtArgument("zeta_X has a pole at the requested argument");
  }
  return RationalFunction(p_at_monomial(nvars, e)) * RationalFunction::inverse_one_minus(nvars, e) *
         RationalFunction::inverse_one_minus(nvars, le);
}

RationalFunction CurveModel::zeta_tilde_at_monomial(std::size_t nvars, const Exponent& e) const {
  const LaurentPoly prefactor = LaurentPoly::monomial(nvars, scaled(e, 1 - genus_));
  return RationalFunction(prefactor) * zeta_at_monomial(nvars, e);
}

RationalFunction CurveModel::inverse_zeta_tilde_at_monomial(std::size_t nvars, const Exponent& e) const {
  const LaurentPoly one = LaurentPoly::constant(nvars, 1);
  const LaurentPoly num = LaurentPoly::monomial(nvars, scaled(e, genus_ - 1)) * (one - LaurentPoly::monomial(nvars, e)) *
                          (one - LaurentPoly::monomial(nvars, e + l_exponent(1)));
  const RationalFunction pu = RationalFunction::inverse_one_minus(nvars, e + unit_exponent(kU)).pow(genus_);
  const RationalFunction pv = RationalFunction::inverse_one_minus(nvars, e + unit_exponent(kV)).pow(genus_);
  return RationalFunction(num) * pu * pv;
}

RationalFunction zeta_eval(const CurveModel& c, int a, int b) {
  if (b < 0) throw InvalidArgument("zeta_eval: the power of z must be nonnegative");
  if (b == 0 && (a == 0 || a == -1)) {
    throw PoleAtArgument("zeta_X(L^a) is undefined for a = 0, -1 (got a = " + std::to_string(a) + ")");
  }
  return c.zeta_at_monomial(kSeriesVars, lz_exponent(a, b));
}

MotClass zeta_value(const CurveModel& c, int a) { return MotClass(zeta_eval(c, a, 0)); }

RationalFunction zeta_star(const CurveModel& c, int p, int q) {
  if (p < 0 || q < 0) throw InvalidArgument("zeta_star: arguments must be nonnegative");
  if (q > 0 || p > 1) return zeta_eval(c, -p, q);
  const MotClass one(1);
  const MotClass value = p == 1 ? c.p_at(MotClass::L_pow(-1)) / (one - MotClass::L_pow(-1))
                                : c.p_at(one) / (one - MotClass::L());
  return value.rational().with_nvars(kSeriesVars);
}

SeriesZ zeta_of_class(const MotClass& a, int truncation) {
  if (truncation < 0) throw InvalidArgument("zeta_of_class: negative truncation");
  GradedSeries f(0, truncation);
  f.set(0, 1, a);
  const GradedSeries e = exp_pleth(f);
  SeriesZ out(truncation);
  for (int d = 0; d <= truncation; ++d) out[d] = e.get(0, d);
  return out;
}

MotClass vol(const CurveModel& c, int r) {
  if (r < 1) throw InvalidArgument("vol: rank must be positive");
  const int g = c.genus();
  MotClass result = MotClass::L_pow((g - 1) * (r * r - 1)) * c.pic_stack();
  for (int i = 2; i <= r; ++i) result *= zeta_value(c, -i);
  return result;
}

bool functional_equation_holds(const CurveModel& c) {
  const int g = c.genus();
  const RationalFunction zeta = zeta_eval(c, 0, 1);
  MonomialMap inverse_lz{kSeriesVars, {unit_exponent(kU), unit_exponent(kV), lz_exponent(-1, -1)}};
  const RationalFunction lhs = zeta.substitute(inverse_lz);
  const RationalFunction rhs = RationalFunction(LaurentPoly::monomial(kSeriesVars, lz_exponent(1 - g, 2 - 2 * g))) * zeta;
  return lhs == rhs;
}

}  // namespace higgsmot
