#ifndef HIGGSMOT_CYCLOTOMIC_HPP
#define HIGGSMOT_CYCLOTOMIC_HPP

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "higgsmot/laurent_poly.hpp"

namespace higgsmot {

// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_coefficients(unsigned m);
unsigned euler_phi(unsigned m);

// Normalizes a nonzero exponent vector to a primitive one whose first nonzero
// entry is positive. Returns the gcd multiplier with the sign of the
// original first nonzero entry, so that e == multiplier * dir.
std::int32_t primitive_direction(const Exponent& e, Exponent& dir);

// The irreducible Laurent polynomial Phi_order(x^dir). dir is primitive with
// positive first nonzero entry, which makes the factor unique up to units.
struct CycloFactor {
  Exponent dir{};
  unsigned order = 1;

  auto operator<=>(const CycloFactor&) const = default;
  LaurentPoly expand(std::size_t nvars) const;
};

using FactorMap = std::map<CycloFactor, int>;

// unit_coeff * x^unit_exp * prod(factors).
struct FactoredBinomial {
  mpq_class unit_coeff = 1;
  Exponent unit_exp{};
  std::vector<CycloFactor> factors;
};

// Phi_m(x^e) for nonzero e, split into irreducible factors.
FactoredBinomial factor_cyclotomic_power(unsigned m, const Exponent& e);
// 1 - x^e for nonzero e.
FactoredBinomial factor_one_minus(const Exponent& e);

// Exact quotient p / f, or nullopt when f does not divide p.
std::optional<LaurentPoly> divide_by(const LaurentPoly& p, const CycloFactor& f);

struct BinomialSplit {
  FactorMap factors;
  LaurentPoly rest;
};

// Pulls every factor of the form Phi_m(x^dir) out of a nonzero p.
BinomialSplit split_binomial_factors(const LaurentPoly& p);

}  // namespace higgsmot

#endif  // HIGGSMOT_CYCLOTOMIC_HPP
