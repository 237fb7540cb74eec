#ifndef HIGGSMOT_RATIONAL_FUNCTION_HPP
#define HIGGSMOT_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "higgsmot/cyclotomic.hpp"
#include "higgsmot/laurent_poly.hpp"

namespace higgsmot {

// Exact element of Q(x_1, ..., x_n) stored as
//
//   numerator / (prod_i Phi_{m_i}(x^{dir_i})^{e_i} * generic)
//
// The numerator is a Laurent polynomial. Every binomial-cyclotomic factor of
// the denominator is kept factored (they are irreducible, so cancellation is
// a divisibility test); whatever is left over lives in `generic`, a primitive
// polynomial without monomial or binomial factors that is reduced against the
// numerator by a full gcd. With these normalizations the representation is
// unique, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(std::size_t nvars);
  explicit RationalFunction(LaurentPoly numerator);

  static RationalFunction constant(std::size_t nvars, const mpq_class& c);
  // num / den for arbitrary Laurent polynomials; throws ZeroDenominator.
  static RationalFunction from_fraction(const LaurentPoly& num, const LaurentPoly& den);
  // num / prod(factors); factors may share directions or divide num.
  static RationalFunction from_factors(LaurentPoly num, const FactorMap& factors);
  // 1 / (1 - x^e), e nonzero.
  static RationalFunction inverse_one_minus(std::size_t nvars, const Exponent& e);
  // Sum over a common denominator with a single final reduction.
  static RationalFunction sum(const std::vector<RationalFunction>& terms);
  static RationalFunction product(const RationalFunction& a, const RationalFunction& b);
  // sum of weight * a * b over one common denominator; a null b stands for 1.
  struct WeightedProduct {
    const RationalFunction* a;
    const RationalFunction* b;
    mpq_class weight;
  };
  static RationalFunction sum_of_products(const std::vector<WeightedProduct>& items);

  std::size_t nvars() const { return nvars_; }
  const LaurentPoly& numerator() const { return num_; }
  const FactorMap& cyclotomic_factors() const { return cyclo_; }
  const LaurentPoly& generic_factor() const { return generic_; }
  // The expanded denominator prod(Phi^e) * generic.
  LaurentPoly denominator() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return cyclo_.empty() && generic_.is_one(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) { return product(a, b); }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.cyclo_ == b.cyclo_ && a.generic_ == b.generic_;
  }

  RationalFunction scaled(const mpq_class& c) const&;
  RationalFunction scaled(const mpq_class& c) &&;
  RationalFunction inverse() const;
  RationalFunction pow(int n) const;
  // Applies x_i -> y^{images[i]}; throws PoleAtSubstitution when a
  // denominator factor collapses to zero.
  RationalFunction substitute(const MonomialMap& map) const;
  RationalFunction with_nvars(std::size_t nvars) const;

  // Canonical integer fraction: both polynomials have nonnegative exponents,
  // are coprime, have joint integer content 1, and the denominator's leading
  // coefficient in graded-lex order (x_1 > x_2 > ...) is positive.
  std::pair<LaurentPoly, LaurentPoly> canonical_fraction() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  // Cancels common factors between the numerator and the denominator.
  void reduce();
  void absorb_generic(const LaurentPoly& poly);

  std::size_t nvars_ = 0;
  LaurentPoly num_;
  FactorMap cyclo_;
  LaurentPoly generic_;
};

// Multiplies out prod(Phi^e) for a factor map.
LaurentPoly expand_factors(const FactorMap& factors, std::size_t nvars);

// Graded-lex leading term index (x_1 > x_2 > ...) of a nonzero polynomial.
std::size_t grlex_leading_index(const LaurentPoly& p);

}  // namespace higgsmot

#endif  // HIGGSMOT_RATIONAL_FUNCTION_HPP
