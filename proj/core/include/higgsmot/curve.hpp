#ifndef HIGGSMOT_CURVE_HPP
#define HIGGSMOT_CURVE_HPP

#include <vector>

#include "higgsmot/mot_class.hpp"
#include "higgsmot/series_z.hpp"

namespace higgsmot {

// A smooth projective curve of genus g in the E-polynomial realization:
// P_X(T) = (1 - uT)^g (1 - vT)^g.
class CurveModel {
 public:
  // Throws NegativeGenus for g < 0.
  explicit CurveModel(int genus);

  int genus() const { return genus_; }
  // Coefficients of P_X, constant term first; degree 2g.
  const std::vector<MotClass>& p_coefficients() const { return p_coeffs_; }
  const MotClass& class_of_x() const { return class_of_x_; }
  const MotClass& jac() const { return jac_; }
  // [Pic^d] = [Jac] / (L - 1).
  const MotClass& pic_stack() const { return pic_stack_; }

  // P_X(x^e) as a polynomial in nvars variables (u, v first).
  LaurentPoly p_at_monomial(std::size_t nvars, const Exponent& e) const;
  MotClass p_at(const MotClass& x) const;

  // zeta_X(x^e) = P_X(x^e) / ((1 - x^e)(1 - L x^e)); throws PoleAtArgument
  // when x^e is 1 or L^{-1}.
  RationalFunction zeta_at_monomial(std::size_t nvars, const Exponent& e) const;
  // The normalized zeta x^{1-g} zeta_X(x) at x = x^e.
  RationalFunction zeta_tilde_at_monomial(std::size_t nvars, const Exponent& e) const;
  // Its reciprocal, with P_X(x) kept as a product of binomials.
  RationalFunction inverse_zeta_tilde_at_monomial(std::size_t nvars, const Exponent& e) const;

 private:
  int genus_ = 0;
  std::vector<MotClass> p_coeffs_;
  MotClass class_of_x_;
  MotClass jac_;
  MotClass pic_stack_;
};

inline CurveModel make_curve(int genus) { return CurveModel(genus); }

// zeta_X(L^a z^b) as a function of (u, v, z). b = 0 gives a constant, and
// then a must avoid 0 and -1 (PoleAtArgument).
RationalFunction zeta_eval(const CurveModel& c, int a, int b);
// zeta_X(L^a) for a not in {0, -1}.
MotClass zeta_value(const CurveModel& c, int a);

// The regularized zeta function at L^{-p} z^q.
RationalFunction zeta_star(const CurveModel& c, int p, int q);

// zeta_A(z) = Exp(A z) up to z^D.
SeriesZ zeta_of_class(const MotClass& a, int truncation);

// vol_r = L^{(g-1)(r^2-1)} [Jac] zeta_X(L^-2) ... zeta_X(L^-r) / (L - 1).
MotClass vol(const CurveModel& c, int r);

// zeta_X(1/(L z)) == L^{1-g} z^{2-2g} zeta_X(z) in Q(u, v, z).
bool functional_equation_holds(const CurveModel& c);

}  // namespace higgsmot

#endif  // HIGGSMOT_CURVE_HPP
