#include <gtest/gtest.h>

#include <random>

#include "higgsmot/cyclotomic.hpp"
#include "higgsmot/errors.hpp"
#include "higgsmot/mot_class.hpp"
#include "higgsmot/poly_gcd.hpp"
#include "support.hpp"

namespace higgsmot {
namespace {

using testing::L;
using testing::one;
using testing::uv;

TEST(LaurentPoly, ArithmeticAndPrinting) {
  const LaurentPoly p = uv(1, 1) - uv(0, 0);
  EXPECT_EQ(p.to_string({"u", "v"}), "u*v - 1");
  EXPECT_EQ((p * p).to_string({"u", "v"}), "u^2*v^2 - 2*u*v + 1");
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.pow(3).size(), 4u);
  EXPECT_EQ(p.constant_term(), -1);
}

TEST(LaurentPoly, NegativeExponentsAndShift) {
  const LaurentPoly p = uv(-1, 0) + uv(1, 0);
  EXPECT_EQ(p.min_exponents()[kU], -1);
  EXPECT_EQ(p.shifted(unit_exponent(kU)), uv(0, 0) + uv(2, 0));
}

TEST(Cyclotomic, Coefficients) {
  EXPECT_EQ(cyclotomic_coefficients(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_coefficients(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(euler_phi(12), 4u);
}

TEST(PolyGcd, CommonFactorRecovered) {
  const LaurentPoly a = (uv(1, 0) + uv(0, 1) + uv(0, 0)) * (uv(2, 1) - uv(0, 0));
  const LaurentPoly b = (uv(1, 0) + uv(0, 1) + uv(0, 0)) * (uv(1, 0) + uv(0, 3));
  const LaurentPoly g = polynomial_gcd(a, b);
  EXPECT_TRUE(exact_quotient(g, uv(1, 0) + uv(0, 1) + uv(0, 0)).has_value());
  EXPECT_EQ(g.size(), 3u);
}

TEST(MakeClass, AlreadyCanonical) {
  const MotClass x = make_class(uv(1, 1) - uv(0, 0), uv(0, 0));
  EXPECT_EQ(x.to_string(), "u*v - 1");
  const auto [num, den] = x.canonical();
  EXPECT_TRUE(den.is_one());
}

TEST(MakeClass, NoCommonFactor) {
  const MotClass x = make_class(uv(2, 1) - uv(1, 1), uv(1, 1) - uv(0, 0));
  EXPECT_EQ(x.to_string(), "(u^2*v - u*v)/(u*v - 1)");
}

TEST(MakeClass, ContentNormalization) {
  const MotClass x = make_class(uv(1, 0, 2), uv(0, 0, 4));
  EXPECT_EQ(x.to_string(), "u/2");
  EXPECT_EQ(x, MotClass::u().scaled(mpq_class(1, 2)));
}

TEST(MakeClass, CommonFactorCancels) {
  const LaurentPoly f = uv(1, 0) - uv(0, 1);
  const MotClass x = make_class(f * (uv(1, 1) + uv(0, 0)), f * (uv(2, 0) + uv(0, 0)));
  EXPECT_EQ(x, make_class(uv(1, 1) + uv(0, 0), uv(2, 0) + uv(0, 0)));
}

TEST(MakeClass, ZeroDenominatorThrows) {
  EXPECT_THROW(make_class(uv(0, 0), LaurentPoly(kClassVars)), ZeroDenominator);
}

TEST(MakeClass, CanonicalSignOnDenominator) {
  const MotClass x = make_class(uv(0, 0), uv(0, 0) - uv(1, 1));
  EXPECT_EQ(x.to_string(), "-1/(u*v - 1)");
}

TEST(Adams, Examples) {
  EXPECT_EQ(adams(2, MotClass::u()), MotClass::monomial(2, 0));
  EXPECT_EQ(adams(2, one() / (L() - one())), one() / (L().pow(2) - one()));
  std::mt19937 rng(7);
  for (int k = 0; k < 10; ++k) {
    const MotClass x = testing::random_class(rng);
    EXPECT_EQ(adams(1, x), x);
  }
}

TEST(Adams, RingEndomorphismAndComposition) {
  std::mt19937 rng(11);
  for (int k = 0; k < 20; ++k) {
    const MotClass x = testing::random_class(rng);
    const MotClass y = testing::random_class(rng);
    EXPECT_EQ(adams(3, x * y), adams(3, x) * adams(3, y));
    EXPECT_EQ(adams(2, x + y), adams(2, x) + adams(2, y));
    EXPECT_EQ(adams(2, adams(3, x)), adams(6, x));
  }
}

TEST(RingAxioms, RandomSamples) {
  std::mt19937 rng(3);
  for (int k = 0; k < 30; ++k) {
    const MotClass x = testing::random_class(rng);
    const MotClass y = testing::random_class(rng);
    const MotClass z = testing::random_class(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    if (!x.is_zero()) EXPECT_TRUE((x * x.inverse()).is_one());
  }
}

TEST(RingAxioms, CanonicalizationIdempotent) {
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    const MotClass x = testing::random_class(rng);
    const auto [num, den] = x.canonical();
    const MotClass y = make_class(num, den);
    EXPECT_EQ(x, y);
    EXPECT_EQ(y.canonical(), x.canonical());
  }
}

TEST(GlClass, Examples) {
  EXPECT_EQ(gl_class(0), one());
  EXPECT_EQ(gl_class(1), L() - one());
  EXPECT_EQ(gl_class(2), (L().pow(2) - one()) * (L().pow(2) - L()));
}

TEST(NilconeClass, Examples) {
  EXPECT_EQ(nilcone_class(0), one());
  EXPECT_EQ(nilcone_class(1), one() / (L() - one()));
  EXPECT_EQ(nilcone_class(2), L().pow(2) / ((L().pow(2) - one()) * (L().pow(2) - L())));
}

TEST(NilconeClass, TimesGlIsPowerOfL) {
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(gl_class(n) * nilcone_class(n), MotClass::L_pow(static_cast<int>(n * (n - 1))));
  }
}

TEST(LForm, DetectsClassesInQofL) {
  const auto lf = as_l_form(one() / (L() - one()));
  ASSERT_TRUE(lf.has_value());
  EXPECT_EQ(lf->num.size(), 1u);
  EXPECT_EQ(lf->den.at(1), 1);
  EXPECT_EQ(lf->den.at(0), -1);
  EXPECT_FALSE(as_l_form(MotClass::u()).has_value());
}

TEST(MotClass, RejectsForeignVariables) {
  EXPECT_THROW(MotClass(RationalFunction(LaurentPoly::variable(kSeriesVars, kZ))), InvalidArgument);
}

}  // namespace
}  // namespace higgsmot
