#ifndef HIGGSMOT_SERIES_Z_HPP
#define HIGGSMOT_SERIES_Z_HPP

#include <vector>

#include "higgsmot/mot_class.hpp"

namespace higgsmot {

// Truncated power series sum_{k<=D} c_k z^k over motivic classes.
struct SeriesZ {
  std::vector<MotClass> coeffs;

  SeriesZ() = default;
  explicit SeriesZ(int truncation) : coeffs(static_cast<std::size_t>(truncation + 1)) {}

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  const MotClass& operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
  MotClass& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }

  friend bool operator==(const SeriesZ& a, const SeriesZ& b) { return a.coeffs == b.coeffs; }
};

// Cauchy product truncated at the smaller truncation.
SeriesZ operator*(const SeriesZ& a, const SeriesZ& b);

// Expands f in Q(u, v, z) (variables kU, kV, kZ) as a power series in z up to
// z^D. Throws InvalidArgument when f has a pole at z = 0.
SeriesZ expand_in_z(const RationalFunction& f, int truncation);

// f(x) for f in Q(u, v, z); throws PoleAtSubstitution at a pole.
MotClass evaluate_z(const RationalFunction& f, const MotClass& x);

// f = z^shift * num(z) / den(z) with num, den polynomials in z over classes
// whose constant terms are nonzero; index k holds the z^k coefficient.
struct ZFraction {
  int shift = 0;
  std::vector<MotClass> num;
  std::vector<MotClass> den;
};
ZFraction z_fraction(const RationalFunction& f);

}  // namespace higgsmot

#endif  // HIGGSMOT_SERIES_Z_HPP
