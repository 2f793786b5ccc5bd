#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "gmrk/coupling/cg_value.hpp"
#include "gmrk/coupling/clebsch_gordan.hpp"
#include "gmrk/coupling/irrep.hpp"
#include "gmrk/errors.hpp"

using namespace gmrk;
using namespace gmrk::coupling;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST(HalfInt, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(HalfInt::parse("3/2").twice(), 3);
  EXPECT_EQ(HalfInt::parse("-1/2").twice(), -1);
  EXPECT_EQ(HalfInt::parse("4").twice(), 8);
  EXPECT_EQ(HalfInt::parse("1.5").twice(), 3);
  EXPECT_EQ(HalfInt::from_twice(5).to_string(), "5/2");
  EXPECT_EQ(HalfInt::from_twice(-4).to_string(), "-2");
  EXPECT_THROW(HalfInt::parse("1/3"), std::invalid_argument);
  EXPECT_THROW(HalfInt::parse("abc"), std::invalid_argument);
}

// Oracle values: sympy.physics.quantum.cg.CG(...).doit().
TEST(ClebschGordan, OracleValues) {
  EXPECT_EQ(cg(h(1), h(1), h(1), h(-1), h(2), h(0)), CgValue::sqrt_of(Rational(1, 2)));
  EXPECT_EQ(cg(h(2), h(2), h(2), h(-2), h(0), h(0)), CgValue::sqrt_of(Rational(1, 3)));
  EXPECT_EQ(cg(h(0), h(0), h(4), h(2), h(2), h(2)), CgValue::zero());
  EXPECT_EQ(cg(h(2), h(0), h(2), h(0), h(2), h(0)), CgValue::zero());
  EXPECT_EQ(cg(h(2), h(0), h(2), h(0), h(4), h(0)), CgValue::sqrt_of(Rational(2, 3)));
  EXPECT_EQ(cg(h(4), h(0), h(4), h(0), h(0), h(0)), CgValue::sqrt_of(Rational(1, 5)));
  EXPECT_EQ(cg(h(3), h(1), h(2), h(-2), h(1), h(-1)), CgValue::sqrt_of(Rational(1, 6)));
  EXPECT_EQ(cg(h(2), h(2), h(2), h(-2), h(0), h(0)).to_string(), "+sqrt(1/3)");
}

TEST(ClebschGordan, TrivialCouplingIsIdentity) {
  for (int tj = 0; tj <= 8; ++tj) {
    for (int tm = -tj; tm <= tj; tm += 2) EXPECT_EQ(cg(h(tj), h(tm), h(0), h(0), h(tj), h(tm)), CgValue::one());
  }
}

TEST(ClebschGordan, RejectsMalformedLabels) {
  EXPECT_THROW(cg(h(-2), h(0), h(2), h(0), h(2), h(0)), InvalidLabelError);
  EXPECT_THROW(cg(h(2), h(4), h(2), h(0), h(2), h(0)), InvalidLabelError);
  EXPECT_THROW(cg(h(2), h(1), h(2), h(0), h(2), h(0)), InvalidLabelError);
}

TEST(ClebschGordan, OrthogonalityUpToFour) {
  double worst = 0.0;
  for (int tj1 = 0; tj1 <= 8; ++tj1) {
    for (int tj2 = 0; tj2 <= 8; ++tj2) {
      for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
        for (int tjp = std::abs(tj1 - tj2); tjp <= tj1 + tj2; tjp += 2) {
          for (int tm = -std::min(tj, tjp); tm <= std::min(tj, tjp); tm += 2) {
            if ((tj - tm) % 2 || (tjp - tm) % 2) continue;
            double s = 0.0;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tm - tm1;
              if (std::abs(tm2) > tj2) continue;
              s += cg(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm)).to_double() *
                   cg(h(tj1), h(tm1), h(tj2), h(tm2), h(tjp), h(tm)).to_double();
            }
            worst = std::max(worst, std::abs(s - (tj == tjp ? 1.0 : 0.0)));
          }
        }
      }
    }
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(ClebschGordan, ExchangeSymmetryIsExact) {
  for (int tj1 = 0; tj1 <= 8; ++tj1)
    for (int tj2 = 0; tj2 <= 8; ++tj2)
      for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2)
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
          for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            if (std::abs(tm1 + tm2) > tj) continue;
            const CgValue a = cg(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm1 + tm2));
            const CgValue b = cg(h(tj2), h(tm2), h(tj1), h(tm1), h(tj), h(tm1 + tm2));
            const int phase = ((tj1 + tj2 - tj) / 2) % 2 == 0 ? 1 : -1;
            EXPECT_EQ(a, phase == 1 ? b : -b);
          }
}

TEST(ClebschGordan, SelectionRulesUpToFour) {
  for (int tj1 = 0; tj1 <= 8; ++tj1)
    for (int tj2 = 0; tj2 <= 8; ++tj2)
      for (int tj = 0; tj <= 8; ++tj) {
        if ((tj1 + tj2 + tj) % 2) continue;
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
          for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2)
            for (int tm = -tj; tm <= tj; tm += 2) {
              const CgValue v = cg(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm));
              if (!v.is_zero()) {
                EXPECT_EQ(tm1 + tm2, tm);
                EXPECT_TRUE(triangle(h(tj1), h(tj2), h(tj)));
              }
            }
      }
}

TEST(ClebschGordan, ReversedConventionFlipsByCouplingPhase) {
  const auto cs = cg(h(2), h(2), h(2), h(-2), h(0), h(0));
  const auto rev = cg(h(2), h(2), h(2), h(-2), h(0), h(0), PhaseConvention::reversed);
  EXPECT_EQ(rev, cs);  // (-1)^{1+1-0} = +1
  const auto cs1 = cg(h(2), h(2), h(2), h(0), h(2), h(2));
  const auto rev1 = cg(h(2), h(2), h(2), h(0), h(2), h(2), PhaseConvention::reversed);
  EXPECT_EQ(rev1, -cs1);
}

TEST(ClebschGordan, DoubleMatchesExactAndIsThreadSafe) {
  std::vector<std::thread> pool;
  std::vector<double> sums(4, 0.0);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&sums, t] {
      double s = 0.0;
      for (int tj = 0; tj <= 12; ++tj)
        for (int tm = -tj; tm <= tj; tm += 2) s += cg_double(tj, tm, 4, 0, tj, tm);
      sums[static_cast<size_t>(t)] = s;
    });
  }
  for (auto& th : pool) th.join();
  for (double s : sums) EXPECT_EQ(s, sums[0]);
  EXPECT_DOUBLE_EQ(cg_double(1, 1, 1, -1, 2, 0), std::sqrt(0.5));
}

TEST(Spin4, FactorizesIntoSu2Pairs) {
  const auto j10 = IrrepLabel::spin4(h(2), h(0));
  const auto j00 = IrrepLabel::trivial(4);
  EXPECT_EQ(cg_spin4(j10, Magnetic(h(2), h(0)), j10, Magnetic(h(-2), h(0)), j00, Magnetic(h(0), h(0))),
            CgValue::sqrt_of(Rational(1, 3)));
  const auto j11 = IrrepLabel::spin4(h(2), h(2));
  EXPECT_EQ(cg_spin4(j00, Magnetic(h(0), h(0)), j11, Magnetic(h(2), h(-2)), j11, Magnetic(h(2), h(-2))),
            CgValue::one());
  EXPECT_TRUE(cg_spin4(j10, Magnetic(h(0), h(0)), j10, Magnetic(h(0), h(0)), IrrepLabel::spin4(h(4), h(2)),
                       Magnetic(h(0), h(0)))
                  .is_zero());
  EXPECT_THROW(cg_spin4(IrrepLabel::spin3(h(2)), Magnetic(h(0)), j10, Magnetic(h(0), h(0)), j10, Magnetic(h(0), h(0))),
               InvalidLabelError);
}

TEST(Irrep, DimensionsAndCasimirs) {
  EXPECT_EQ(dim(IrrepLabel::spin3(h(0))), 1);
  EXPECT_EQ(dim(IrrepLabel::spin3(h(4))), 5);
  EXPECT_EQ(dim(IrrepLabel::spin4(h(2), h(2))), 9);
  EXPECT_EQ(casimir2(IrrepLabel::spin3(h(4))), Rational(6));
  EXPECT_EQ(casimir2(IrrepLabel::spin3(h(2))), Rational(2));
  EXPECT_EQ(casimir2(IrrepLabel::spin3(h(6))), Rational(12));
  EXPECT_EQ(casimir2(IrrepLabel::trivial(3)), Rational(0));
  // n=4: {2} = (1,1) gives 2n = 8, adjoint (1,0) gives 2n-4 = 4.
  EXPECT_EQ(casimir2(IrrepLabel::spin4(h(2), h(2))), Rational(8));
  EXPECT_EQ(casimir2(IrrepLabel::spin4(h(2), h(0))), Rational(4));
}

TEST(Irrep, MonotoneInEachPart) {
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto base = IrrepLabel::spin4(h(a), h(b));
      EXPECT_LE(casimir2(base), casimir2(IrrepLabel::spin4(h(a + 1), h(b))));
      EXPECT_LE(dim(base), dim(IrrepLabel::spin4(h(a), h(b + 1))));
    }
  }
}

TEST(Irrep, MagneticStatesAndLabels) {
  const auto states = magnetic_states(IrrepLabel::spin4(h(1), h(2)));
  ASSERT_EQ(states.size(), 6u);
  EXPECT_EQ(states.front().to_string(), "-1/2;-1");
  EXPECT_EQ(magnetic_position(IrrepLabel::spin4(h(1), h(2)), Magnetic(h(1), h(0))), 4);
  EXPECT_EQ(labels_up_to(3, h(2)).size(), 3u);
  EXPECT_EQ(labels_up_to(4, h(2)).size(), 6u);
  EXPECT_THROW(IrrepLabel::spin3(h(-1)), InvalidLabelError);
}
