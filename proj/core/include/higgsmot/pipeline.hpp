#ifndef HIGGSMOT_PIPELINE_HPP
#define HIGGSMOT_PIPELINE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "higgsmot/curve.hpp"
#include "higgsmot/graded_series.hpp"
#include "higgsmot/partition.hpp"

namespace higgsmot {

// Largest table a query may build; beyond it InsufficientTruncation is
// raised with the bounds the query would need.
struct Limits {
  int max_rank = 6;
  int max_degree = 64;
};

// Omega, B and H for one curve, valid for ranks <= r_max and degrees <= d_max.
class HiggsTable {
 public:
  HiggsTable(const CurveModel& c, int r_max, int d_max);

  const CurveModel& curve() const { return curve_; }
  int r_max() const { return omega_.r_max(); }
  int d_max() const { return omega_.d_max(); }
  bool covers(int r, int d) const { return r <= r_max() && d <= d_max(); }

  // sum_lambda L^{(g-1)<lambda,lambda>} J_lambda H_lambda w^{|lambda|}.
  const GradedSeries& omega() const { return omega_; }
  // Pow(Omega, L).
  const GradedSeries& omega_pow_l() const { return pow_l_; }
  // B = L Log(Omega), without the zero entries.
  const ClassMap& b() const { return b_; }
  const MotClass& b(int r, int d) const;
  // H_{r,d} for 1 <= r <= r_max, 0 <= d <= d_max; InsufficientTruncation
  // outside that range.
  const MotClass& h(int r, int d) const;

 private:
  CurveModel curve_;
  GradedSeries omega_;
  GradedSeries pow_l_;
  ClassMap b_;
  ClassMap h_;
};

// Shared, memoized tables: a request is served by any cached table of the
// same genus that covers it.
std::shared_ptr<const HiggsTable> higgs_table(const CurveModel& c, int r_max, int d_max,
                                              const Limits& limits = {});
void clear_table_cache();

GradedSeries omega_series(const CurveModel& c, int r_max, int d_max);
ClassMap b_classes(const CurveModel& c, int r_max, int d_max);

// H_{r,d}; zero for d < 0 since Omega has no negative degrees.
MotClass h_rd(const CurveModel& c, int r, int d, const Limits& limits = {});

struct MssResult {
  MotClass value;    // H_{r, d + e r}
  MotClass witness;  // H_{r, d + (e + 1) r}
  int twist = 0;     // e
};
// Least e > (r-1)(g-1) - d/r with d + e r >= 0.
int mss_twist(int genus, int r, int d);
MssResult mss_class_detailed(const CurveModel& c, int r, int d, const Limits& limits = {});
// [M^ss_{r,d}]; throws StabilizationFailure when the witness disagrees.
MotClass mss_class(const CurveModel& c, int r, int d, const Limits& limits = {});
// [Conn_r] = [M^ss_{r,0}].
MotClass conn_class(const CurveModel& c, int r, const Limits& limits = {});

struct NonnegClasses {
  MotClass e_nilp;
  MotClass e_end;
  MotClass m_nonneg;
};
NonnegClasses nonneg_classes(const CurveModel& c, int r, int d, const Limits& limits = {});

struct CheckResult {
  bool ok = true;
  std::optional<RankDegree> mismatch;
  std::string detail;
};

// Pow(Omega, L) against the product over slopes of the H-series.
// `perturb`, when set, adds 1 to that H coefficient before comparing.
CheckResult slope_factorization_check(const CurveModel& c, int r_max, int d_max,
                                      std::optional<RankDegree> perturb = std::nullopt,
                                      const Limits& limits = {});

// sum_l [N_l] z^l == Exp(z / (L - 1)) up to z^D.
bool nilcone_identity_check(int truncation);
// Pow(sum [N_l] z^l, [X]) == Exp([X] z / (L - 1)) up to z^D. With
// `use_l_exponent` the left side uses L instead of [X].
bool torsion_identity_check(const CurveModel& c, int truncation, bool use_l_exponent = false);

// [Bun_{s; d_1..d_s}] = L^{(g-1)s(s-1)/2 + sum (2i-s-1) d_i} ([Jac] c)^s with
// c = 1/(L-1) for the Picard-stack normalization, c = 1 otherwise.
enum class FlagNormalization { picard_stack, jacobian };
MotClass flag_class(const CurveModel& c, const std::vector<int>& degrees,
                    FlagNormalization norm = FlagNormalization::picard_stack);

// An exponent a_0 + sum a_i d_i that is affine in integer unknowns.
struct LinearExponent {
  mpq_class constant;
  std::vector<mpq_class> coeffs;

  LinearExponent& operator+=(const LinearExponent& o);
  LinearExponent scaled(const mpq_class& k) const;
  bool is_constant() const;
};

struct HarderOptions {
  FlagNormalization norm = FlagNormalization::picard_stack;
  // Added to every weight 2r - 2i of the normalizing power; nonzero values
  // break the cancellation and must raise NonConstantExponent.
  int weight_shift = 0;
};
// Formal limit d_1, ..., d_{r-1} -> -infinity of
// [Bun_{r; d_1..d_{r-1}, d - sum}] L^{(2r-2)d_1 + ... + 2 d_{r-1}} against the
// closed form times vol_r.
bool harder_limit_check(const CurveModel& c, int r, int d, const HarderOptions& options = {});

// H_{r,d} == H_{r,d+r} for d_lo <= d <= d_hi; requires d_lo > r(r-1)(g-1).
bool periodicity_check(const CurveModel& c, int r, int d_lo, int d_hi, const Limits& limits = {});

}  // namespace higgsmot

#endif  // HIGGSMOT_PIPELINE_HPP
