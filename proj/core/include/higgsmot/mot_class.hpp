#ifndef HIGGSMOT_MOT_CLASS_HPP
#define HIGGSMOT_MOT_CLASS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "higgsmot/rational_function.hpp"

namespace higgsmot {

// Variable slots shared by every ring in the library. Motivic classes live in
// Q(u, v); z-dependent functions add one series variable; the residue engine
// appends z_1, ..., z_n after u and v.
inline constexpr std::size_t kU = 0;
inline constexpr std::size_t kV = 1;
inline constexpr std::size_t kZ = 2;
inline constexpr std::size_t kClassVars = 2;
inline constexpr std::size_t kSeriesVars = 3;

inline constexpr std::size_t z_index(std::size_t i) { return kClassVars + i - 1; }

// A motivic class in the E-polynomial realization: an element of Q(u, v)
// with L = uv.
class MotClass {
 public:
  MotClass() : rf_(kClassVars) {}
  MotClass(long c) : rf_(RationalFunction::constant(kClassVars, c)) {}  // NOLINT(google-explicit-constructor)
  explicit MotClass(const mpq_class& c) : rf_(RationalFunction::constant(kClassVars, c)) {}
  // Throws InvalidArgument when rf depends on anything but u and v.
  explicit MotClass(const RationalFunction& rf);

  static MotClass u();
  static MotClass v();
  static MotClass L();
  static MotClass L_pow(int k);
  static MotClass monomial(int a, int b, const mpq_class& c = 1);
  // 1 / (1 - u^a v^b), (a, b) != (0, 0).
  static MotClass inverse_one_minus(int a, int b);
  // One common denominator and one reduction for the whole sum.
  static MotClass sum(const std::vector<MotClass>& terms);
  // sum of weight * a * b; a null b stands for 1.
  struct WeightedProduct {
    const MotClass* a;
    const MotClass* b;
    mpq_class weight;
  };
  static MotClass sum_of_products(const std::vector<WeightedProduct>& items);

  const RationalFunction& rational() const { return rf_; }
  bool is_zero() const { return rf_.is_zero(); }
  bool is_one() const { return rf_.is_constant() && rf_.numerator().is_one(); }

  MotClass operator-() const { return MotClass(-rf_); }
  MotClass& operator+=(const MotClass& o) { rf_ += o.rf_; return *this; }
  MotClass& operator-=(const MotClass& o) { rf_ -= o.rf_; return *this; }
  MotClass& operator*=(const MotClass& o) { rf_ *= o.rf_; return *this; }
  MotClass& operator/=(const MotClass& o) { rf_ /= o.rf_; return *this; }
  friend MotClass operator+(MotClass a, const MotClass& b) { return a += b; }
  friend MotClass operator-(MotClass a, const MotClass& b) { return a -= b; }
  friend MotClass operator*(const MotClass& a, const MotClass& b) {
    MotClass r;
    r.rf_ = RationalFunction::product(a.rf_, b.rf_);
    return r;
  }
  friend MotClass operator/(MotClass a, const MotClass& b) { return a /= b; }
  friend bool operator==(const MotClass& a, const MotClass& b) { return a.rf_ == b.rf_; }

  MotClass scaled(const mpq_class& c) const& {
    MotClass r;
    r.rf_ = rf_.scaled(c);
    return r;
  }
  MotClass scaled(const mpq_class& c) && {
    rf_ = std::move(rf_).scaled(c);
    return std::move(*this);
  }
  MotClass inverse() const { return MotClass(rf_.inverse()); }
  MotClass pow(int n) const { return MotClass(rf_.pow(n)); }

  // Coprime integer pair with nonnegative exponents; see canonical_fraction.
  std::pair<LaurentPoly, LaurentPoly> canonical() const { return rf_.canonical_fraction(); }
  // "u*v/(u*v - 1)" style rendering of the canonical fraction.
  std::string to_string() const;
  // Upper bound on the u,v-degree: deg(num) - deg(den) in total degree.
  long dimension() const;

 private:
  RationalFunction rf_;
};

// make_class: num / den reduced to canonical form. Throws ZeroDenominator.
MotClass make_class(const LaurentPoly& num, const LaurentPoly& den);

// The Adams operation u -> u^n, v -> v^n.
MotClass adams(unsigned n, const MotClass& x);

// [GL_n] = prod_{i<n} (L^n - L^i).
MotClass gl_class(unsigned n);

// [N_d] = L^{d(d-1)} / prod_{i<d} (L^d - L^i).
MotClass nilcone_class(unsigned d);

// Univariate Laurent polynomial in L, when x lies in Q(L): the pair
// (numerator, denominator) as coefficient maps keyed by the power of L.
struct LForm {
  std::map<int, mpq_class> num;
  std::map<int, mpq_class> den;
};
std::optional<LForm> as_l_form(const MotClass& x);

}  // namespace higgsmot

#endif  // HIGGSMOT_MOT_CLASS_HPP
