#ifndef HIGGSMOT_POLY_GCD_HPP
#define HIGGSMOT_POLY_GCD_HPP

#include <optional>

#include "higgsmot/laurent_poly.hpp"

namespace higgsmot {

// Multivariate gcd and exact division over Q, treating monomials as units.
// These are the slow general-purpose routines; binomial factors go through
// cyclotomic.hpp instead.

// p / x^{min exponents}: the polynomial associate with no monomial factor.
LaurentPoly strip_monomial(const LaurentPoly& p, Exponent* removed = nullptr);

// Integer coefficients, content 1, positive coefficient on the largest term.
// scale (if given) receives c with result == c * p.
LaurentPoly primitive_normalized(const LaurentPoly& p, mpq_class* scale = nullptr);

// Exact quotient in the Laurent ring, or nullopt when b does not divide a.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

// Gcd up to units (nonzero rationals times monomials), returned normalized
// with no monomial factor. gcd(0, 0) is 0.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace higgsmot

#endif  // HIGGSMOT_POLY_GCD_HPP
