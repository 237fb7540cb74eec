#include "higgsmot/pipeline.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "higgsmot/detail/parallel.hpp"
#include "higgsmot/errors.hpp"
#include "higgsmot/residues.hpp"

namespace higgsmot {

namespace {

const MotClass& zero_class() {
  static const MotClass zero;
  return zero;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string bounds(int r, int d) { return "(r, d) = (" + std::to_string(r) + ", " + std::to_string(d) + ")"; }

struct TableCache {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const HiggsTable>> by_genus;
};

TableCache& table_cache() {
  static TableCache cache;
  return cache;
}

}  // namespace

GradedSeries omega_series(const CurveModel& c, int r_max, int d_max) {
  std::vector<Partition> lambdas;
  for (auto& lambda : enumerate_partitions(r_max)) {
    if (!lambda.empty()) lambdas.push_back(std::move(lambda));
  }
  const int g = c.genus();
  const auto terms = detail::parallel_map(lambdas.size(), [&](std::size_t k) {
    const Partition& lambda = lambdas[k];
    const RationalFunction product = j_mot_function(c, lambda) * res_lambda(c, lambda);
    SeriesZ s = expand_in_z(product, d_max);
    const MotClass weight = MotClass::L_pow((g - 1) * pairing(lambda));
    for (auto& x : s.coeffs) {
      if (!x.is_zero()) x *= weight;
    }
    return s;
  });
  GradedSeries omega = GradedSeries::one(r_max, d_max);
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const int r = lambdas[k].size();
    for (int d = 0; d <= d_max; ++d) omega.set(r, d, omega.get(r, d) + terms[k][d]);
  }
  return omega;
}

ClassMap b_classes(const CurveModel& c, int r_max, int d_max) {
  return log_pleth(omega_series(c, r_max, d_max)).scaled(MotClass::L()).nonzero_terms();
}

HiggsTable::HiggsTable(const CurveModel& c, int r_max, int d_max)
    : curve_(c), omega_(omega_series(c, r_max, d_max)) {
  for (int d = 1; d <= d_max; ++d) {
    if (!omega_.get(0, d).is_zero()) throw Error("HiggsTable: Omega has a nonzero rank-0 term");
  }
  const GradedSeries b_series = log_pleth(omega_).scaled(MotClass::L());
  pow_l_ = exp_pleth(b_series);
  b_ = b_series.nonzero_terms();
  for (const auto& [key, value] : b_) {
    if (key.first == 0) throw Error("HiggsTable: B has a rank-0 term at " + bounds(key.first, key.second));
  }
  const int g = c.genus();
  for (int r0 = 1; r0 <= r_max; ++r0) {
    for (int d0 = 0; d0 <= d_max; ++d0) {
      if (std::gcd(r0, d0) != 1) continue;
      ClassMap ray;
      for (int k = 1; k * r0 <= r_max && k * d0 <= d_max; ++k) {
        const MotClass& x = b_series.get(k * r0, k * d0);
        if (!x.is_zero()) ray.emplace(RankDegree{k * r0, k * d0}, x);
      }
      for (const auto& [key, value] : ray_exp(ray, mpq_class(d0, r0), r_max, d_max)) {
        const int r = key.first;
        h_.emplace(key, value * MotClass::L_pow((g - 1) * r * r));
      }
    }
  }
}

const MotClass& HiggsTable::b(int r, int d) const {
  auto it = b_.find({r, d});
  return it == b_.end() ? zero_class() : it->second;
}

const MotClass& HiggsTable::h(int r, int d) const {
  if (r < 1 || d < 0 || !covers(r, d)) {
    throw InsufficientTruncation("H at " + bounds(r, d) + " is outside the table bounds " + bounds(r_max(), d_max()));
  }
  auto it = h_.find({r, d});
  return it == h_.end() ? zero_class() : it->second;
}

std::shared_ptr<const HiggsTable> higgs_table(const CurveModel& c, int r_max, int d_max, const Limits& limits) {
  if (r_max > limits.max_rank || d_max > limits.max_degree) {
    throw InsufficientTruncation("this query needs a table with r_max >= " + std::to_string(r_max) +
                                 " and d_max >= " + std::to_string(d_max) + "; the limits are r_max <= " +
                                 std::to_string(limits.max_rank) + ", d_max <= " + std::to_string(limits.max_degree));
  }
  auto& cache = table_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto it = cache.by_genus.find(c.genus());
  if (it != cache.by_genus.end()) {
    if (it->second->covers(r_max, d_max)) return it->second;
    r_max = std::max(r_max, it->second->r_max());
    d_max = std::max(d_max, it->second->d_max());
  }
  auto table = std::make_shared<const HiggsTable>(c, r_max, d_max);
  cache.by_genus[c.genus()] = table;
  return table;
}

void clear_table_cache() {
  auto& cache = table_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  cache.by_genus.clear();
}

MotClass h_rd(const CurveModel& c, int r, int d, const Limits& limits) {
  if (r < 1) throw InvalidArgument("h_rd: rank must be positive");
  if (d < 0) return MotClass();
  return higgs_table(c, r, d, limits)->h(r, d);
}

int mss_twist(int genus, int r, int d) {
  if (r < 1) throw InvalidArgument("mss_twist: rank must be positive");
  int e = floor_div((r - 1) * (genus - 1) * r - d, r) + 1;
  while (d + e * r < 0) ++e;
  return e;
}

MssResult mss_class_detailed(const CurveModel& c, int r, int d, const Limits& limits) {
  MssResult out;
  out.twist = mss_twist(c.genus(), r, d);
  const int top = d + (out.twist + 1) * r;
  const auto table = higgs_table(c, r, top, limits);
  out.value = table->h(r, d + out.twist * r);
  out.witness = table->h(r, top);
  return out;
}

MotClass mss_class(const CurveModel& c, int r, int d, const Limits& limits) {
  MssResult res = mss_class_detailed(c, r, d, limits);
  if (!(res.value == res.witness)) {
    throw StabilizationFailure("H_{r,d+er} differs between e = " + std::to_string(res.twist) + " and e = " +
                               std::to_string(res.twist + 1) + " at " + bounds(r, d));
  }
  return res.value;
}

MotClass conn_class(const CurveModel& c, int r, const Limits& limits) { return mss_class(c, r, 0, limits); }

NonnegClasses nonneg_classes(const CurveModel& c, int r, int d, const Limits& limits) {
  if (r < 0 || d < 0) throw InvalidArgument("nonneg_classes: rank and degree must be nonnegative");
  const auto table = higgs_table(c, r, d, limits);
  NonnegClasses out;
  out.e_nilp = table->omega().get(r, d);
  out.e_end = table->omega_pow_l().get(r, d);
  out.m_nonneg = MotClass::L_pow((c.genus() - 1) * r * r) * out.e_end;
  return out;
}

CheckResult slope_factorization_check(const CurveModel& c, int r_max, int d_max, std::optional<RankDegree> perturb,
                                      const Limits& limits) {
  const auto table = higgs_table(c, r_max, d_max, limits);
  const int g = c.genus();
  GradedSeries lhs = GradedSeries::one(r_max, d_max);
  for (int r = 1; r <= r_max; ++r) {
    for (int d = 0; d <= d_max; ++d) {
      const MotClass m = nonneg_classes(c, r, d, limits).m_nonneg;
      lhs.set(r, d, MotClass::L_pow((1 - g) * r * r) * m);
    }
  }
  GradedSeries rhs = GradedSeries::one(r_max, d_max);
  for (int r0 = 1; r0 <= r_max; ++r0) {
    for (int d0 = 0; d0 <= d_max; ++d0) {
      if (std::gcd(r0, d0) != 1) continue;
      GradedSeries factor = GradedSeries::one(r_max, d_max);
      for (int k = 1; k * r0 <= r_max && k * d0 <= d_max; ++k) {
        const int r = k * r0, d = k * d0;
        MotClass h = table->h(r, d);
        if (perturb && *perturb == RankDegree{r, d}) h += MotClass(1);
        factor.set(r, d, MotClass::L_pow((1 - g) * r * r) * h);
      }
      rhs = rhs * factor;
    }
  }
  CheckResult out;
  for (int r = 0; r <= r_max && out.ok; ++r) {
    for (int d = 0; d <= d_max; ++d) {
      if (!(lhs.get(r, d) == rhs.get(r, d))) {
        out.ok = false;
        out.mismatch = RankDegree{r, d};
        out.detail = "first mismatch at " + bounds(r, d);
        break;
      }
    }
  }
  return out;
}

bool nilcone_identity_check(int truncation) {
  GradedSeries n(0, truncation), f(0, truncation);
  for (int l = 0; l <= truncation; ++l) n.set(0, l, nilcone_class(static_cast<unsigned>(l)));
  if (truncation >= 1) f.set(0, 1, (MotClass::L() - MotClass(1)).inverse());
  return exp_pleth(f) == n;
}

bool torsion_identity_check(const CurveModel& c, int truncation, bool use_l_exponent) {
  GradedSeries n(0, truncation), f(0, truncation);
  for (int l = 0; l <= truncation; ++l) n.set(0, l, nilcone_class(static_cast<unsigned>(l)));
  if (truncation >= 1) f.set(0, 1, c.class_of_x() / (MotClass::L() - MotClass(1)));
  const MotClass exponent = use_l_exponent ? MotClass::L() : c.class_of_x();
  return pow_pleth(n, exponent) == exp_pleth(f);
}

MotClass flag_class(const CurveModel& c, const std::vector<int>& degrees, FlagNormalization norm) {
  const int s = static_cast<int>(degrees.size());
  if (s < 1) throw InvalidArgument("flag_class: at least one degree is required");
  int exponent = (c.genus() - 1) * s * (s - 1) / 2;
  for (int i = 1; i <= s; ++i) exponent += (2 * i - s - 1) * degrees[static_cast<std::size_t>(i - 1)];
  const MotClass base = norm == FlagNormalization::picard_stack ? c.pic_stack() : c.jac();
  return MotClass::L_pow(exponent) * base.pow(s);
}

LinearExponent& LinearExponent::operator+=(const LinearExponent& o) {
  constant += o.constant;
  if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

LinearExponent LinearExponent::scaled(const mpq_class& k) const {
  LinearExponent out = *this;
  out.constant *= k;
  for (auto& x : out.coeffs) x *= k;
  return out;
}

bool LinearExponent::is_constant() const {
  for (const auto& x : coeffs) {
    if (x != 0) return false;
  }
  return true;
}

bool harder_limit_check(const CurveModel& c, int r, int d, const HarderOptions& options) {
  if (r < 2) throw InvalidArgument("harder_limit_check: rank must be at least 2");
  const int g = c.genus();
  const auto unknowns = static_cast<std::size_t>(r - 1);
  auto unit = [unknowns](std::size_t i) {
    LinearExponent e{0, std::vector<mpq_class>(unknowns)};
    e.coeffs[i] = 1;
    return e;
  };
  // d_i for i < r are free; d_r = d - (d_1 + ... + d_{r-1}).
  std::vector<LinearExponent> degree(static_cast<std::size_t>(r));
  LinearExponent last{d, std::vector<mpq_class>(unknowns)};
  for (std::size_t i = 0; i < unknowns; ++i) {
    degree[i] = unit(i);
    last += unit(i).scaled(-1);
  }
  degree.back() = last;

  mpq_class base_exponent((g - 1) * r * (r - 1), 2);
  base_exponent.canonicalize();
  LinearExponent exponent{base_exponent, std::vector<mpq_class>(unknowns)};
  for (int i = 1; i <= r; ++i) exponent += degree[static_cast<std::size_t>(i - 1)].scaled(2 * i - r - 1);
  for (int i = 1; i < r; ++i) exponent += degree[static_cast<std::size_t>(i - 1)].scaled(2 * r - 2 * i + options.weight_shift);
  if (!exponent.is_constant()) {
    std::string coeffs;
    for (const auto& x : exponent.coeffs) coeffs += (coeffs.empty() ? "" : ", ") + x.get_str();
    throw NonConstantExponent("the exponent keeps coefficients (" + coeffs + ") in d_1..d_{r-1}");
  }
  if (exponent.constant.get_den() != 1) throw NonConstantExponent("the limit exponent is not an integer");
  const MotClass base = options.norm == FlagNormalization::picard_stack ? c.pic_stack() : c.jac();
  const MotClass lhs = MotClass::L_pow(static_cast<int>(exponent.constant.get_num().get_si())) * base.pow(r);

  const int rhs_exponent = (r - 1) * d + (1 - g) * (r - 1) * (r + 2) / 2;
  MotClass denominator = (MotClass::L() - MotClass(1)).pow(r - 1);
  for (int i = 2; i <= r; ++i) denominator *= zeta_value(c, -i);
  const MotClass rhs = MotClass::L_pow(rhs_exponent) * c.jac().pow(r - 1) / denominator * vol(c, r);
  return lhs == rhs;
}

bool periodicity_check(const CurveModel& c, int r, int d_lo, int d_hi, const Limits& limits) {
  const int bound = r * (r - 1) * (c.genus() - 1);
  if (d_lo <= bound) {
    throw InvalidArgument("periodicity_check: d_lo must exceed r(r-1)(g-1) = " + std::to_string(bound));
  }
  if (d_hi + r >= 0) higgs_table(c, r, std::max(0, d_hi + r), limits);
  for (int d = d_lo; d <= d_hi; ++d) {
    if (!(h_rd(c, r, d, limits) == h_rd(c, r, d + r, limits))) return false;
  }
  return true;
}

}  // namespace higgsmot
