#ifndef HIGGSMOT_GRADED_SERIES_HPP
#define HIGGSMOT_GRADED_SERIES_HPP

#include <map>
#include <utility>
#include <vector>

#include "higgsmot/mot_class.hpp"

namespace higgsmot {

using RankDegree = std::pair<int, int>;
using ClassMap = std::map<RankDegree, MotClass>;

// Truncated series sum A_{r,d} w^r z^d over motivic classes, valid for
// 0 <= r <= r_max and 0 <= d <= d_max. Absent coefficients are zero.
class GradedSeries {
 public:
  GradedSeries() : GradedSeries(0, 0) {}
  GradedSeries(int r_max, int d_max);
  static GradedSeries one(int r_max, int d_max);
  static GradedSeries from_map(const ClassMap& coeffs, int r_max, int d_max);

  int r_max() const { return r_max_; }
  int d_max() const { return d_max_; }
  bool in_range(int r, int d) const { return r >= 0 && d >= 0 && r <= r_max_ && d <= d_max_; }
  // Zero outside the stored range.
  const MotClass& get(int r, int d) const;
  // Throws InvalidArgument outside the stored range.
  void set(int r, int d, MotClass c);
  ClassMap nonzero_terms() const;

  GradedSeries operator-() const;
  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend bool operator==(const GradedSeries& a, const GradedSeries& b);
  GradedSeries scaled(const MotClass& c) const;
  GradedSeries truncated(int r_max, int d_max) const;

 private:
  std::size_t index(int r, int d) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(d_max_ + 1) + static_cast<std::size_t>(d);
  }

  int r_max_ = 0;
  int d_max_ = 0;
  std::vector<MotClass> coeffs_;
};

GradedSeries multiply(const GradedSeries& f, const GradedSeries& g);

// (psi_n f)_{r,d} = adams(n, f_{r/n, d/n}); the truncation is unchanged.
GradedSeries series_adams(unsigned n, const GradedSeries& f);

// Plethystic exponential; throws NonzeroConstantTerm.
GradedSeries exp_pleth(const GradedSeries& f);
// Plethystic logarithm; throws ConstantTermNotOne.
GradedSeries log_pleth(const GradedSeries& f);
// Pow(f, A) = Exp(A Log f).
GradedSeries pow_pleth(const GradedSeries& f, const MotClass& a);

// Exp of the part of b on the ray d / r = tau, computed in the single
// variable t = w^{r0} z^{d0} of the primitive vector. Keys off the ray throw
// KeyOffRay; the result holds the nonzero ray coefficients with r <= r_max,
// d <= d_max.
ClassMap ray_exp(const ClassMap& b, const mpq_class& tau, int r_max, int d_max);

// Mobius function.
int mobius(unsigned n);

}  // namespace higgsmot

#endif  // HIGGSMOT_GRADED_SERIES_HPP
