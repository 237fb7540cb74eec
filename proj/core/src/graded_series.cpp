#include "higgsmot/graded_series.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "higgsmot/errors.hpp"

namespace higgsmot {

namespace {

const MotClass& zero_class() {
  static const MotClass zero;
  return zero;
}

// S = sum_n psi_n(f) / n, or sum_n mu(n)/n psi_n(f) when mobius is set.
GradedSeries adams_sum(const GradedSeries& f, bool with_mobius) {
  GradedSeries s(f.r_max(), f.d_max());
  for (int r = 0; r <= f.r_max(); ++r) {
    for (int d = 0; d <= f.d_max(); ++d) {
      if (r == 0 && d == 0) continue;
      const auto g = static_cast<unsigned>(std::gcd(r, d));
      std::vector<MotClass> parts;
      for (unsigned n = 1; n <= g; ++n) {
        if (g % n != 0) continue;
        const int k = static_cast<int>(n);
        const MotClass& c = f.get(r / k, d / k);
        if (c.is_zero()) continue;
        const int mu = with_mobius ? mobius(n) : 1;
        if (mu == 0) continue;
        parts.push_back(adams(n, c).scaled(mpq_class(mu, n)));
      }
      s.set(r, d, MotClass::sum(parts));
    }
  }
  return s;
}

// exp of a series with zero constant term via F' = F S' for the grading
// operator r + d.
GradedSeries formal_exp(const GradedSeries& s) {
  GradedSeries f = GradedSeries::one(s.r_max(), s.d_max());
  for (int r = 0; r <= s.r_max(); ++r) {
    for (int d = 0; d <= s.d_max(); ++d) {
      if (r == 0 && d == 0) continue;
      std::vector<MotClass::WeightedProduct> parts;
      for (int a = 0; a <= r; ++a) {
        for (int b = 0; b <= d; ++b) {
          if (a == 0 && b == 0) continue;
          const MotClass& sc = s.get(a, b);
          const MotClass& fc = f.get(r - a, d - b);
          if (sc.is_zero() || fc.is_zero()) continue;
          mpq_class w(a + b, r + d);
          w.canonicalize();
          parts.push_back({&sc, &fc, std::move(w)});
        }
      }
      f.set(r, d, MotClass::sum_of_products(parts));
    }
  }
  return f;
}

GradedSeries formal_log(const GradedSeries& f) {
  GradedSeries t(f.r_max(), f.d_max());
  for (int r = 0; r <= f.r_max(); ++r) {
    for (int d = 0; d <= f.d_max(); ++d) {
      if (r == 0 && d == 0) continue;
      std::vector<MotClass::WeightedProduct> parts;
      for (int a = 0; a <= r; ++a) {
        for (int b = 0; b <= d; ++b) {
          if ((a == 0 && b == 0) || (a == r && b == d)) continue;
          const MotClass& tc = t.get(a, b);
          const MotClass& fc = f.get(r - a, d - b);
          if (tc.is_zero() || fc.is_zero()) continue;
          parts.push_back({&tc, &fc, -(a + b)});
        }
      }
      parts.push_back({&f.get(r, d), nullptr, r + d});
      t.set(r, d, MotClass::sum_of_products(parts).scaled(mpq_class(1, r + d)));
    }
  }
  return t;
}

}  // namespace

int mobius(unsigned n) {
  if (n == 0) throw InvalidArgument("mobius: n must be positive");
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

GradedSeries::GradedSeries(int r_max, int d_max) : r_max_(r_max), d_max_(d_max) {
  if (r_max < 0 || d_max < 0) throw InvalidArgument("GradedSeries: truncations must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(r_max + 1) * static_cast<std::size_t>(d_max + 1));
}

GradedSeries GradedSeries::one(int r_max, int d_max) {
  GradedSeries s(r_max, d_max);
  s.set(0, 0, MotClass(1));
  return s;
}

GradedSeries GradedSeries::from_map(const ClassMap& coeffs, int r_max, int d_max) {
  GradedSeries s(r_max, d_max);
  for (const auto& [key, c] : coeffs) {
    if (s.in_range(key.first, key.second)) s.set(key.first, key.second, c);
  }
  return s;
}

const MotClass& GradedSeries::get(int r, int d) const {
  if (!in_range(r, d)) return zero_class();
  return coeffs_[index(r, d)];
}

void GradedSeries::set(int r, int d, MotClass c) {
  if (!in_range(r, d)) {
    throw InvalidArgument("GradedSeries::set: (" + std::to_string(r) + ", " + std::to_string(d) +
                          ") is outside the truncation");
  }
  coeffs_[index(r, d)] = std::move(c);
}

ClassMap GradedSeries::nonzero_terms() const {
  ClassMap out;
  for (int r = 0; r <= r_max_; ++r) {
    for (int d = 0; d <= d_max_; ++d) {
      if (!get(r, d).is_zero()) out.emplace(RankDegree{r, d}, get(r, d));
    }
  }
  return out;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries out(std::min(a.r_max_, b.r_max_), std::min(a.d_max_, b.d_max_));
  for (int r = 0; r <= out.r_max_; ++r) {
    for (int d = 0; d <= out.d_max_; ++d) out.set(r, d, a.get(r, d) + b.get(r, d));
  }
  return out;
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) { return a + (-b); }

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries out(std::min(a.r_max_, b.r_max_), std::min(a.d_max_, b.d_max_));
  for (int r = 0; r <= out.r_max_; ++r) {
    for (int d = 0; d <= out.d_max_; ++d) {
      std::vector<MotClass::WeightedProduct> parts;
      for (int r1 = 0; r1 <= r; ++r1) {
        for (int d1 = 0; d1 <= d; ++d1) {
          const MotClass& x = a.get(r1, d1);
          const MotClass& y = b.get(r - r1, d - d1);
          if (!x.is_zero() && !y.is_zero()) parts.push_back({&x, &y, 1});
        }
      }
      out.coeffs_[out.index(r, d)] = MotClass::sum_of_products(parts);
    }
  }
  return out;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
  return a.r_max_ == b.r_max_ && a.d_max_ == b.d_max_ && a.coeffs_ == b.coeffs_;
}

GradedSeries GradedSeries::scaled(const MotClass& c) const {
  GradedSeries out = *this;
  for (auto& x : out.coeffs_) {
    if (!x.is_zero()) x *= c;
  }
  return out;
}

GradedSeries GradedSeries::truncated(int r_max, int d_max) const {
  GradedSeries out(std::min(r_max, r_max_), std::min(d_max, d_max_));
  for (int r = 0; r <= out.r_max_; ++r) {
    for (int d = 0; d <= out.d_max_; ++d) out.set(r, d, get(r, d));
  }
  return out;
}

GradedSeries multiply(const GradedSeries& f, const GradedSeries& g) { return f * g; }

GradedSeries series_adams(unsigned n, const GradedSeries& f) {
  if (n == 0) throw InvalidArgument("series_adams: n must be positive");
  if (n == 1) return f;
  GradedSeries out(f.r_max(), f.d_max());
  const int k = static_cast<int>(n);
  for (int r = 0; r * k <= f.r_max(); ++r) {
    for (int d = 0; d * k <= f.d_max(); ++d) {
      const MotClass& c = f.get(r, d);
      if (!c.is_zero()) out.set(r * k, d * k, adams(n, c));
    }
  }
  return out;
}

GradedSeries exp_pleth(const GradedSeries& f) {
  if (!f.get(0, 0).is_zero()) throw NonzeroConstantTerm("exp_pleth: the series has a nonzero constant term");
  return formal_exp(adams_sum(f, false));
}

GradedSeries log_pleth(const GradedSeries& f) {
  if (!f.get(0, 0).is_one()) throw ConstantTermNotOne("log_pleth: the constant term must be 1");
  return adams_sum(formal_log(f), true);
}

GradedSeries pow_pleth(const GradedSeries& f, const MotClass& a) { return exp_pleth(log_pleth(f).scaled(a)); }

ClassMap ray_exp(const ClassMap& b, const mpq_class& tau, int r_max, int d_max) {
  if (tau < 0) throw InvalidArgument("ray_exp: the slope must be nonnegative");
  mpq_class t = tau;
  t.canonicalize();
  const int r0 = static_cast<int>(t.get_den().get_si());
  const int d0 = static_cast<int>(t.get_num().get_si());
  int k_max = r_max / r0;
  if (d0 > 0) k_max = std::min(k_max, d_max / d0);

  std::vector<MotClass> coeffs(static_cast<std::size_t>(std::max(k_max, 0) + 1));
  for (const auto& [key, c] : b) {
    const auto [r, d] = key;
    mpq_class slope(d, r > 0 ? r : 1);
    slope.canonicalize();
    if (r <= 0 || d < 0 || slope != t) {
      throw KeyOffRay("ray_exp: (" + std::to_string(r) + ", " + std::to_string(d) + ") is not on the ray");
    }
    const int k = r / r0;
    if (k <= k_max) coeffs[static_cast<std::size_t>(k)] = c;
  }

  // One-variable Exp in t.
  std::vector<MotClass> s(coeffs.size()), f(coeffs.size());
  if (!f.empty()) f[0] = MotClass(1);
  for (int k = 1; k <= k_max; ++k) {
    MotClass acc;
    for (int n = 1; n <= k; ++n) {
      if (k % n != 0) continue;
      const MotClass& c = coeffs[static_cast<std::size_t>(k / n)];
      if (!c.is_zero()) acc += adams(static_cast<unsigned>(n), c).scaled(mpq_class(1, n));
    }
    s[static_cast<std::size_t>(k)] = std::move(acc);
  }
  ClassMap out;
  for (int k = 1; k <= k_max; ++k) {
    MotClass acc;
    for (int j = 1; j <= k; ++j) {
      const MotClass& sc = s[static_cast<std::size_t>(j)];
      const MotClass& fc = f[static_cast<std::size_t>(k - j)];
      if (!sc.is_zero() && !fc.is_zero()) acc += (sc * fc).scaled(j);
    }
    f[static_cast<std::size_t>(k)] = acc.scaled(mpq_class(1, k));
    if (!f[static_cast<std::size_t>(k)].is_zero()) out.emplace(RankDegree{k * r0, k * d0}, f[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace higgsmot
