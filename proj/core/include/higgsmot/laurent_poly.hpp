#ifndef HIGGSMOT_LAURENT_POLY_HPP
#define HIGGSMOT_LAURENT_POLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace higgsmot {

// Upper bound on the number of variables a polynomial can carry:
// u, v and up to six auxiliary variables.
inline constexpr std::size_t kMaxVars = 8;

using Exponent = std::array<std::int32_t, kMaxVars>;

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);
Exponent scaled(const Exponent& a, std::int32_t k);
bool is_zero_exponent(const Exponent& a);
Exponent unit_exponent(std::size_t index, std::int32_t power = 1);

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

// Monomial substitution x_i -> y^{images[i]} into a ring with target_vars variables.
struct MonomialMap {
  std::size_t target_vars = 0;
  std::vector<Exponent> images;

  Exponent apply(const Exponent& e) const;
  static MonomialMap identity(std::size_t nvars);
};

// Sparse Laurent polynomial with rational coefficients in nvars variables.
// Terms are kept sorted by exponent with no zero coefficients, so two
// polynomials are equal iff their term lists are equal.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    mpq_class coeff;

    friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
  };

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars);

  static LaurentPoly constant(std::size_t nvars, const mpq_class& c);
  static LaurentPoly monomial(std::size_t nvars, const Exponent& e, const mpq_class& c = 1);
  static LaurentPoly variable(std::size_t nvars, std::size_t index);
  // Sums duplicate exponents and drops zeros.
  static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms);
  // sum of weight * a * b; a null b stands for 1.
  struct WeightedProduct {
    const LaurentPoly* a;
    const LaurentPoly* b;
    mpq_class weight;
  };
  static LaurentPoly linear_combination(std::size_t nvars, const std::vector<WeightedProduct>& items);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  mpq_class constant_term() const;
  mpq_class coefficient(const Exponent& e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator+=(LaurentPoly&& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  LaurentPoly scaled(const mpq_class& c) const&;
  LaurentPoly scaled(const mpq_class& c) &&;
  // Multiplication by the monomial x^e.
  LaurentPoly shifted(const Exponent& e) const;
  LaurentPoly pow(unsigned n) const;
  LaurentPoly substitute(const MonomialMap& map) const;
  // Reinterprets the polynomial in a ring with a different variable count;
  // variables at or beyond the new count must not occur.
  LaurentPoly with_nvars(std::size_t nvars) const;

  Exponent min_exponents() const;
  Exponent max_exponents() const;
  bool depends_on(std::size_t var) const;
  // Groups terms by the power of `var`; the returned coefficients have that
  // exponent zeroed.
  std::map<int, LaurentPoly> collect(std::size_t var) const;

  // Least common multiple of the coefficient denominators.
  mpz_class denominator_lcm() const;
  // Gcd of the numerators of the coefficients (zero for the zero polynomial).
  mpz_class numerator_gcd() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void canonicalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace higgsmot

#endif  // HIGGSMOT_LAURENT_POLY_HPP
