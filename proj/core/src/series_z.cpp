#include "higgsmot/series_z.hpp"

#include <algorithm>

#include "higgsmot/errors.hpp"

namespace higgsmot {

namespace {

// Power series in z whose coefficients are Laurent polynomials in u, v.
using PolySeries = std::vector<LaurentPoly>;

struct Split {
  int low = 0;
  PolySeries coeffs;  // coeffs[k] multiplies z^{low + k}
};

Split split_by_z(const LaurentPoly& p) {
  Split out;
  const auto grouped = p.collect(kZ);
  if (grouped.empty()) return out;
  out.low = grouped.begin()->first;
  const int high = grouped.rbegin()->first;
  out.coeffs.assign(static_cast<std::size_t>(high - out.low + 1), LaurentPoly(kClassVars));
  for (const auto& [k, c] : grouped) out.coeffs[static_cast<std::size_t>(k - out.low)] = c.with_nvars(kClassVars);
  return out;
}

PolySeries truncated_product(const PolySeries& a, const PolySeries& b, std::size_t length) {
  PolySeries out(length, LaurentPoly(kClassVars));
  for (std::size_t i = 0; i < a.size() && i < length; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < length; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// 1 / p for p with a unit (monomial) constant term.
PolySeries inverse_unit_series(const PolySeries& p, std::size_t length) {
  const auto& c0 = p.front().terms().front();
  const LaurentPoly inv0 = LaurentPoly::monomial(kClassVars, Exponent{} - c0.exp, 1 / c0.coeff);
  PolySeries q(length, LaurentPoly(kClassVars));
  if (length == 0) return q;
  q[0] = inv0;
  for (std::size_t j = 1; j < length; ++j) {
    LaurentPoly acc(kClassVars);
    for (std::size_t i = 1; i <= j && i < p.size(); ++i) {
      if (!p[i].is_zero() && !q[j - i].is_zero()) acc += p[i] * q[j - i];
    }
    q[j] = -(acc * inv0);
  }
  return q;
}

std::vector<MotClass> inverse_class_series(const std::vector<MotClass>& p, std::size_t length) {
  std::vector<MotClass> q(length);
  if (length == 0) return q;
  const MotClass inv0 = p.front().inverse();
  q[0] = inv0;
  for (std::size_t j = 1; j < length; ++j) {
    MotClass acc;
    for (std::size_t i = 1; i <= j && i < p.size(); ++i) {
      if (!p[i].is_zero() && !q[j - i].is_zero()) acc += p[i] * q[j - i];
    }
    q[j] = -(acc * inv0);
  }
  return q;
}

std::vector<MotClass> to_classes(const LaurentPoly& p, int* low) {
  const Split s = split_by_z(p);
  *low = s.low;
  std::vector<MotClass> out;
  out.reserve(s.coeffs.size());
  for (const auto& c : s.coeffs) out.emplace_back(RationalFunction(c));
  return out;
}

MotClass horner(const std::vector<MotClass>& c, const MotClass& x) {
  MotClass acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

SeriesZ operator*(const SeriesZ& a, const SeriesZ& b) {
  const int n = std::min(a.truncation(), b.truncation());
  SeriesZ out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

SeriesZ expand_in_z(const RationalFunction& f0, int truncation) {
  if (truncation < 0) throw InvalidArgument("expand_in_z: negative truncation");
  SeriesZ out(truncation);
  if (f0.is_zero()) return out;
  const RationalFunction f = f0.nvars() == kSeriesVars ? f0 : f0.with_nvars(kSeriesVars);

  FactorMap constant_factors;
  std::vector<std::pair<Split, int>> z_factors;
  int shift = 0;
  for (const auto& [factor, e] : f.cyclotomic_factors()) {
    if (factor.dir[kZ] == 0) {
      constant_factors.emplace(CycloFactor{factor.dir, factor.order}, e);
      continue;
    }
    Split s = split_by_z(factor.expand(kSeriesVars));
    shift -= s.low * e;
    z_factors.emplace_back(std::move(s), e);
  }
  MotClass constant_generic = 1;
  std::vector<MotClass> z_generic;
  if (!f.generic_factor().is_one()) {
    if (f.generic_factor().depends_on(kZ)) {
      int low = 0;
      z_generic = to_classes(f.generic_factor(), &low);
      shift -= low;
    } else {
      constant_generic = MotClass(RationalFunction(f.generic_factor()));
    }
  }
  Split num = split_by_z(f.numerator());
  shift += num.low;

  // out[k] = F[k - shift] where F = num' / prod(factor') is a power series.
  const long length_long = static_cast<long>(truncation) - shift + 1;
  if (length_long <= 0) return out;
  const auto length = static_cast<std::size_t>(length_long);

  PolySeries series(num.coeffs.begin(), num.coeffs.begin() + static_cast<std::ptrdiff_t>(std::min(length, num.coeffs.size())));
  for (const auto& [s, e] : z_factors) {
    const PolySeries inv = inverse_unit_series(s.coeffs, length);
    for (int i = 0; i < e; ++i) series = truncated_product(series, inv, length);
  }
  series.resize(length, LaurentPoly(kClassVars));

  std::vector<MotClass> values(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (!series[k].is_zero()) values[k] = MotClass(RationalFunction::from_factors(series[k], constant_factors)) / constant_generic;
  }
  if (!z_generic.empty()) {
    const std::vector<MotClass> inv = inverse_class_series(z_generic, length);
    std::vector<MotClass> prod(length);
    for (std::size_t i = 0; i < length; ++i) {
      if (values[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < length; ++j) prod[i + j] += values[i] * inv[j];
    }
    values = std::move(prod);
  }
  for (long j = 0; j < -shift && j < length_long; ++j) {
    if (!values[static_cast<std::size_t>(j)].is_zero()) throw InvalidArgument("expand_in_z: pole at z = 0");
  }
  for (int k = 0; k <= truncation; ++k) {
    const long j = static_cast<long>(k) - shift;
    if (j >= 0 && j < length_long) out[k] = values[static_cast<std::size_t>(j)];
  }
  return out;
}

ZFraction z_fraction(const RationalFunction& f0) {
  const RationalFunction f = f0.nvars() == kSeriesVars ? f0 : f0.with_nvars(kSeriesVars);
  ZFraction out;
  if (f.is_zero()) {
    out.den.emplace_back(1);
    return out;
  }
  int low_num = 0, low_den = 0;
  out.num = to_classes(f.numerator(), &low_num);
  out.den = to_classes(f.denominator(), &low_den);
  out.shift = low_num - low_den;
  return out;
}

MotClass evaluate_z(const RationalFunction& f, const MotClass& x) {
  const ZFraction zf = z_fraction(f);
  if (zf.num.empty()) return MotClass();
  if (x.is_zero()) {
    if (zf.shift < 0) throw PoleAtSubstitution("evaluate_z: pole at z = 0");
    if (zf.shift > 0) return MotClass();
    return zf.num.front() / zf.den.front();
  }
  const MotClass den = horner(zf.den, x);
  if (den.is_zero()) throw PoleAtSubstitution("evaluate_z: pole at the evaluation point");
  return x.pow(zf.shift) * horner(zf.num, x) / den;
}

}  // namespace higgsmot
