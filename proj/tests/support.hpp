#ifndef HIGGSMOT_TESTS_SUPPORT_HPP
#define HIGGSMOT_TESTS_SUPPORT_HPP

#include <random>

#include "higgsmot/graded_series.hpp"
#include "higgsmot/mot_class.hpp"

namespace higgsmot::testing {

inline MotClass L() { return MotClass::L(); }
inline MotClass one() { return MotClass(1); }

// u^a v^b as a two-variable polynomial.
inline LaurentPoly uv(int a, int b, long c = 1) {
  Exponent e{};
  e[kU] = a;
  e[kV] = b;
  return LaurentPoly::monomial(kClassVars, e, c);
}

// Small random classes: a polynomial of low degree over a product of
// factors drawn from the kind of denominators the pipeline produces.
inline MotClass random_class(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2), pick(0, 4);
  LaurentPoly num(kClassVars);
  for (int k = 0; k < 3; ++k) num += uv(expo(rng), expo(rng), coeff(rng));
  MotClass x = make_class(num, uv(0, 0));
  switch (pick(rng)) {
    case 0:
      return x;
    case 1:
      return x / (L() - one());
    case 2:
      return x / (L().pow(2) - one());
    case 3:
      return x / (MotClass::u() + MotClass(2));
    default:
      return x * MotClass::inverse_one_minus(1, 0);
  }
}

inline GradedSeries random_series(std::mt19937& rng, int r_max, int d_max, bool with_constant_one) {
  GradedSeries f(r_max, d_max);
  std::bernoulli_distribution keep(0.35);
  for (int r = 0; r <= r_max; ++r) {
    for (int d = 0; d <= d_max; ++d) {
      if (r == 0 && d == 0) continue;
      if (keep(rng)) f.set(r, d, random_class(rng));
    }
  }
  if (with_constant_one) f.set(0, 0, MotClass(1));
  return f;
}

}  // namespace higgsmot::testing

#endif  // HIGGSMOT_TESTS_SUPPORT_HPP
