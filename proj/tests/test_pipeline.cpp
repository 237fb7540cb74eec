#include <gtest/gtest.h>

#include "higgsmot/errors.hpp"
#include "higgsmot/pipeline.hpp"
#include "support.hpp"

namespace higgsmot {
namespace {

using testing::L;
using testing::one;

MotClass rank_one(const CurveModel& c) { return L().pow(c.genus()) * c.jac() / (L() - one()); }

TEST(Omega, LowOrderCoefficients) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    const GradedSeries omega = omega_series(c, 2, 3);
    EXPECT_TRUE(omega.get(0, 0).is_one());
    for (int d = 1; d <= 3; ++d) EXPECT_TRUE(omega.get(0, d).is_zero());
    const MotClass linv = MotClass::L_pow(-1);
    const MotClass expected = L().pow(g - 1) * c.p_at(linv) / (one() - linv);
    for (int d = 0; d <= 3; ++d) EXPECT_EQ(omega.get(1, d), expected) << "g=" << g << " d=" << d;
  }
}

TEST(Omega, GenusZeroRankTwo) {
  // (2): L^{-2} * L/(L-1) * 1; (1,1): L^{-4} zeta(L^{-2}) L/(L-1) * (1 - 1/L).
  const GradedSeries omega = omega_series(make_curve(0), 2, 1);
  EXPECT_EQ(omega.get(2, 0), L() / ((L() - one()) * (L().pow(2) - one())));
  EXPECT_EQ(omega.get(2, 1), one() / (L() - one()).pow(2));
}

TEST(BClasses, RankOneAndRankZero) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    const ClassMap b = b_classes(c, 2, 3);
    const MotClass linv = MotClass::L_pow(-1);
    for (int d = 0; d <= 3; ++d) EXPECT_EQ(b.at({1, d}), L().pow(g) * c.p_at(linv) / (one() - linv));
    for (const auto& [key, value] : b) EXPECT_GT(key.first, 0);
  }
}

TEST(BClasses, GenusZeroTwoOne) {
  // L (Omega_{2,1} - Omega_{1,0} Omega_{1,1}) = L (1/(L-1)^2 - 1/(L-1)^2).
  const ClassMap b = b_classes(make_curve(0), 2, 1);
  const auto it = b.find({2, 1});
  EXPECT_TRUE(it == b.end() || it->second.is_zero());
}

TEST(HRd, RankOneClosedForm) {
  for (int g = 0; g <= 3; ++g) {
    const CurveModel c = make_curve(g);
    for (int d = 0; d <= 5; ++d) EXPECT_EQ(h_rd(c, 1, d), rank_one(c)) << "g=" << g << " d=" << d;
  }
}

TEST(HRd, OddDegreeRankTwoIsFirstOrder) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    const ClassMap b = b_classes(c, 2, 1);
    const MotClass b21 = b.count({2, 1}) ? b.at({2, 1}) : MotClass();
    EXPECT_EQ(h_rd(c, 2, 1), L().pow(4 * (g - 1)) * b21);
  }
}

TEST(HRd, GenusZeroPeriodicRankTwo) {
  const CurveModel c = make_curve(0);
  EXPECT_EQ(h_rd(c, 2, 2), h_rd(c, 2, 4));
  EXPECT_EQ(h_rd(c, 2, 0), one() / gl_class(2));
}

TEST(HRd, NegativeDegreeIsZero) { EXPECT_TRUE(h_rd(make_curve(1), 2, -1).is_zero()); }

TEST(HiggsTable, BoundsAreEnforced) {
  const HiggsTable t(make_curve(0), 2, 3);
  EXPECT_THROW(t.h(3, 0), InsufficientTruncation);
  EXPECT_THROW(t.h(1, 4), InsufficientTruncation);
  EXPECT_THROW(higgs_table(make_curve(1), 7, 2), InsufficientTruncation);
  EXPECT_THROW(h_rd(make_curve(1), 2, 10, Limits{2, 8}), InsufficientTruncation);
}

TEST(HiggsTable, SharedTablesCoverSmallerRequests) {
  clear_table_cache();
  const auto big = higgs_table(make_curve(1), 3, 5);
  const auto small = higgs_table(make_curve(1), 2, 2);
  EXPECT_EQ(big.get(), small.get());
}

TEST(MssTwist, LeastAdmissibleTwist) {
  for (int g = 0; g <= 3; ++g) {
    for (int r = 1; r <= 3; ++r) {
      for (int d = -4; d <= 4; ++d) {
        const int e = mss_twist(g, r, d);
        const mpq_class bound = mpq_class((r - 1) * (g - 1)) - mpq_class(d, r);
        EXPECT_GT(mpq_class(e), bound);
        EXPECT_GE(d + e * r, 0);
        EXPECT_TRUE(mpq_class(e - 1) <= bound || d + (e - 1) * r < 0);
      }
    }
  }
}

TEST(MssClass, Examples) {
  for (int g = 0; g <= 2; ++g) EXPECT_EQ(mss_class(make_curve(g), 1, -5), rank_one(make_curve(g)));
  const CurveModel c0 = make_curve(0);
  EXPECT_TRUE(mss_class(c0, 2, 1).is_zero());
  EXPECT_EQ(mss_class(c0, 2, 1), h_rd(c0, 2, 3));
  const MssResult res = mss_class_detailed(make_curve(1), 2, 0);
  EXPECT_EQ(res.value, res.witness);
}

TEST(MssClass, StabilizationWitness) {
  for (int g = 0; g <= 2; ++g) {
    for (int r = 1; r <= 3; ++r) {
      for (int d = -3; d <= 3; ++d) {
        const MssResult res = mss_class_detailed(make_curve(g), r, d);
        EXPECT_EQ(res.value, res.witness) << "g=" << g << " r=" << r << " d=" << d;
      }
    }
  }
}

TEST(ConnClass, Examples) {
  for (int g = 0; g <= 2; ++g) EXPECT_EQ(conn_class(make_curve(g), 1), rank_one(make_curve(g)));
  EXPECT_EQ(conn_class(make_curve(0), 2), mss_class(make_curve(0), 2, 0));
  const CurveModel c1 = make_curve(1);
  EXPECT_EQ(conn_class(c1, 2), h_rd(c1, 2, 2));
  EXPECT_EQ(conn_class(c1, 2), h_rd(c1, 2, 4));
}

TEST(NonnegClasses, Examples) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    const NonnegClasses zero = nonneg_classes(c, 0, 0);
    EXPECT_TRUE(zero.e_nilp.is_one());
    EXPECT_TRUE(zero.e_end.is_one());
    EXPECT_TRUE(zero.m_nonneg.is_one());
    const MotClass linv = MotClass::L_pow(-1);
    for (int d = 0; d <= 2; ++d) {
      const NonnegClasses n = nonneg_classes(c, 1, d);
      EXPECT_EQ(n.e_nilp, L().pow(g - 1) * c.p_at(linv) / (one() - linv));
      EXPECT_EQ(n.e_end, L() * n.e_nilp);
      EXPECT_EQ(n.m_nonneg, L().pow(g - 1) * n.e_end);
    }
  }
}

TEST(SlopeFactorization, Holds) {
  EXPECT_TRUE(slope_factorization_check(make_curve(0), 2, 4).ok);
  EXPECT_TRUE(slope_factorization_check(make_curve(1), 3, 6).ok);
  EXPECT_TRUE(slope_factorization_check(make_curve(2), 2, 4).ok);
}

TEST(SlopeFactorization, PerturbationIsCaught) {
  const CheckResult res = slope_factorization_check(make_curve(0), 2, 4, RankDegree{2, 2});
  EXPECT_FALSE(res.ok);
  ASSERT_TRUE(res.mismatch.has_value());
  EXPECT_EQ(*res.mismatch, (RankDegree{2, 2}));
}

TEST(Torsion, IdentityAndFault) {
  EXPECT_TRUE(nilcone_identity_check(10));
  for (int g : {0, 2}) {
    EXPECT_TRUE(torsion_identity_check(make_curve(g), 8));
    EXPECT_FALSE(torsion_identity_check(make_curve(g), 8, true));
  }
}

TEST(FlagClass, Examples) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    const MotClass pic = c.pic_stack();
    EXPECT_EQ(flag_class(c, {3}), pic);
    EXPECT_EQ(flag_class(c, {1, 4}), L().pow(g - 1 + 4 - 1) * pic * pic);
    EXPECT_EQ(flag_class(c, {2, 2}), L().pow(g - 1) * pic * pic);
    EXPECT_EQ(flag_class(c, {0}, FlagNormalization::jacobian), c.jac());
  }
}

TEST(Harder, Examples) {
  EXPECT_TRUE(harder_limit_check(make_curve(0), 2, 0));
  EXPECT_TRUE(harder_limit_check(make_curve(1), 3, 1));
  EXPECT_FALSE(harder_limit_check(make_curve(1), 2, 0, {FlagNormalization::jacobian, 0}));
  EXPECT_THROW(harder_limit_check(make_curve(1), 3, 0, {FlagNormalization::picard_stack, 1}), NonConstantExponent);
}

TEST(Periodicity, Examples) {
  EXPECT_TRUE(periodicity_check(make_curve(0), 2, -1, 4));
  EXPECT_TRUE(periodicity_check(make_curve(2), 2, 3, 6));
  EXPECT_TRUE(periodicity_check(make_curve(1), 3, 1, 6));
  EXPECT_THROW(periodicity_check(make_curve(1), 2, 0, 3), InvalidArgument);
}

}  // namespace
}  // namespace higgsmot
