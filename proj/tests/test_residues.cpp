#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "higgsmot/errors.hpp"
#include "higgsmot/residues.hpp"
#include "support.hpp"

#ifndef HIGGSMOT_GOLDEN_DIR
#error "HIGGSMOT_GOLDEN_DIR must point at tests/golden"
#endif

namespace higgsmot {
namespace {

using testing::L;
using testing::one;

LaurentPoly z_poly(int power, long coeff = 1) {
  return LaurentPoly::monomial(kSeriesVars, unit_exponent(kZ, power), coeff);
}

RationalFunction one_minus_z() { return RationalFunction(z_poly(0) - z_poly(1)); }

std::vector<std::string> names(int n) {
  std::vector<std::string> out{"u", "v"};
  for (int i = 1; i <= n; ++i) out.push_back("z" + std::to_string(i));
  return out;
}

// Golden files hold "key<TAB>canonical form" lines. Setting
// HIGGSMOT_UPDATE_GOLDEN=1 rewrites them from the current results.
class Golden {
 public:
  explicit Golden(const std::string& file) : path_(std::string(HIGGSMOT_GOLDEN_DIR) + "/" + file) {
    update_ = std::getenv("HIGGSMOT_UPDATE_GOLDEN") != nullptr;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      const auto tab = line.find('\t');
      if (tab != std::string::npos) entries_[line.substr(0, tab)] = line.substr(tab + 1);
    }
  }
  ~Golden() {
    if (!update_) return;
    std::ofstream out(path_);
    for (const auto& [k, v] : entries_) out << k << '\t' << v << '\n';
  }

  void check(const std::string& key, const std::string& value) {
    if (update_) {
      entries_[key] = value;
      return;
    }
    auto it = entries_.find(key);
    ASSERT_NE(it, entries_.end()) << "no golden entry for " << key << " in " << path_;
    EXPECT_EQ(it->second, value) << key;
  }

 private:
  std::string path_;
  bool update_ = false;
  std::map<std::string, std::string> entries_;
};

TEST(JMot, Examples) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    const SeriesZ empty = j_mot(c, Partition(), 4);
    EXPECT_TRUE(empty[0].is_one());
    for (int d = 1; d <= 4; ++d) EXPECT_TRUE(empty[d].is_zero());

    const MotClass linv = MotClass::L_pow(-1);
    const MotClass star10 = c.p_at(linv) / (one() - linv);
    const SeriesZ box = j_mot(c, Partition({1}), 4);
    EXPECT_EQ(box[0], star10);
    for (int d = 1; d <= 4; ++d) EXPECT_TRUE(box[d].is_zero());

    // Boxes of (2): (1,1) has arm 1, leg 0; (2,1) is a corner.
    const SeriesZ two = j_mot(c, Partition({2}), 6);
    const SeriesZ zeta = expand_in_z(zeta_eval(c, -1, 1), 6);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(two[d], zeta[d] * star10);
  }
}

TEST(LMot, RankOne) {
  for (int g = 0; g <= 2; ++g) {
    const RationalFunction f = l_mot(make_curve(g), 1);
    const LaurentPoly z1 = LaurentPoly::variable(3, z_index(1));
    EXPECT_EQ(f, RationalFunction::from_fraction(LaurentPoly::constant(3, 1), LaurentPoly::constant(3, 1) - z1));
  }
}

TEST(LMot, SymmetricUnderRelabelling) {
  // L^mot * zeta~(z_1/z_2) is the permutation sum itself, hence symmetric.
  for (int g = 0; g <= 1; ++g) {
    const CurveModel c = make_curve(g);
    const RationalFunction f = l_mot(c, 2);
    RationalFunction prod = RationalFunction::constant(4, 1);
    prod *= c.zeta_tilde_at_monomial(4, unit_exponent(z_index(1)) - unit_exponent(z_index(2)));
    const RationalFunction sum = f * prod;
    MonomialMap swap = MonomialMap::identity(4);
    swap.images[z_index(1)] = unit_exponent(z_index(2));
    swap.images[z_index(2)] = unit_exponent(z_index(1));
    EXPECT_EQ(sum.substitute(swap), sum);
  }
}

TEST(LMot, DenominatorFactorsAreExpected) {
  // Every candidate pole factor is a binomial, so nothing is left in the
  // generic part of the denominator.
  const RationalFunction f = l_mot(make_curve(1), 3);
  EXPECT_TRUE(f.generic_factor().is_one());
}

TEST(LMot, Golden) {
  Golden golden("l_mot.txt");
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 3; ++n) {
      golden.check("g=" + std::to_string(g) + " n=" + std::to_string(n),
                   l_mot(make_curve(g), n).to_string(names(n)));
    }
  }
}

TEST(ResLambda, Examples) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    EXPECT_EQ(res_lambda(c, Partition({1})), one_minus_z().inverse());
    EXPECT_EQ(res_lambda(c, Partition()), RationalFunction::constant(kSeriesVars, 1));
  }
  EXPECT_EQ(res_lambda(make_curve(0), Partition({2})), RationalFunction(z_poly(0) - z_poly(2)).inverse());
}

TEST(ResLambda, Golden) {
  Golden golden("res_lambda.txt");
  for (int g = 0; g <= 2; ++g) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& p : partitions_of(n)) {
        golden.check("g=" + std::to_string(g) + " " + p.to_string(),
                     res_lambda(make_curve(g), p).to_string({"u", "v", "z"}));
      }
    }
  }
}

TEST(ResLambda, SequentialAgreesWithSimultaneous) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    for (int n = 1; n <= 3; ++n) {
      for (const auto& p : partitions_of(n)) {
        EXPECT_EQ(sequential_res_lambda(c, p), res_lambda(c, p)) << "g=" << g << " " << p.to_string();
      }
    }
  }
}

TEST(ResLambda, QInvertibleAtZeroUpToSizeFour) {
  for (int g = 0; g <= 2; ++g) {
    const CurveModel c = make_curve(g);
    for (int n = 1; n <= 4; ++n) {
      for (const auto& p : partitions_of(n)) {
        EXPECT_NO_THROW(res_lambda(c, p)) << "g=" << g << " " << p.to_string();
      }
    }
  }
}

TEST(HMot, Examples) {
  const CurveModel c = make_curve(1);
  const SeriesZ h1 = h_mot(c, Partition({1}), 5);
  for (int d = 0; d <= 5; ++d) EXPECT_TRUE(h1[d].is_one());
  const SeriesZ h0 = h_mot(c, Partition(), 3);
  EXPECT_TRUE(h0[0].is_one());
  EXPECT_TRUE(h0[3].is_zero());
  for (const auto& p : enumerate_partitions(3)) {
    EXPECT_EQ(h_mot(c, p, 2)[0], evaluate_z(res_lambda(c, p), MotClass())) << p.to_string();
  }
}

TEST(SimplePoleResidue, Examples) {
  EXPECT_TRUE(simple_pole_residue(one_minus_z().inverse(), one()).is_one());
  EXPECT_TRUE(simple_pole_residue(one_minus_z().inverse(), MotClass(2)).is_zero());
  EXPECT_TRUE(simple_pole_residue(RationalFunction(z_poly(2) + z_poly(0)), L()).is_zero());
  EXPECT_THROW(simple_pole_residue(one_minus_z().pow(-2), one()), HigherOrderPole);
  // 1/z at 0: ((0 - z)/z)|_{z=0} = -1.
  EXPECT_EQ(simple_pole_residue(RationalFunction(z_poly(-1)), MotClass()), MotClass(-1));
}

TEST(SimplePoleResidue, MatchesStabilizedLimit) {
  for (int g = 0; g <= 3; ++g) {
    const CurveModel c = make_curve(g);
    const RationalFunction zeta = zeta_eval(c, 0, 1);
    const RationalFunction a = zeta * one_minus_z();
    const RationalFunction b = zeta * RationalFunction(z_poly(0) - LaurentPoly::monomial(kSeriesVars, Exponent{1, 1, 1}));
    const MotClass linv = MotClass::L_pow(-1);
    const int D = 2 * g + 6;
    const auto la = stabilized_limit(a, linv, D, 4);
    const auto lb = stabilized_limit(b, one(), D, 4);
    ASSERT_TRUE(la.has_value());
    ASSERT_TRUE(lb.has_value());
    EXPECT_EQ(*la, simple_pole_residue(a, linv));
    EXPECT_EQ(*lb, simple_pole_residue(b, one()));
  }
}

}  // namespace
}  // namespace higgsmot
