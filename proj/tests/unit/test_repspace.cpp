#include <gtest/gtest.h>

#include <set>

#include "gmrk/errors.hpp"
#include "gmrk/repspace/basis.hpp"

using namespace gmrk;
using namespace gmrk::repspace;
using operators::DenseMatrix;

namespace {

HalfInt hi(int v) { return HalfInt::from_int(v); }

std::shared_ptr<const BasisIndex> make(int n, int j_max, SpaceMode mode, int m_split = 1) {
  return enumerate_basis({n, hi(j_max), mode, m_split});
}

}  // namespace

TEST(EnumerateBasis, FullN3CountsIncludeSpinors) {
  auto b = make(3, 1, SpaceMode::full);
  EXPECT_EQ(b->size(), 14);
  int half = 0;
  for (const auto& s : b->states()) half += s.J.part(0).is_integer() ? 0 : 1;
  EXPECT_EQ(half, 4);
}

TEST(EnumerateBasis, CosetN3Counts) {
  for (int m : {1, 2}) {
    EXPECT_EQ(make(3, 2, SpaceMode::coset, m)->size(), 9);
    EXPECT_EQ(make(3, 4, SpaceMode::coset, m)->size(), 25);
  }
}

TEST(EnumerateBasis, CosetHasNoHalfIntegerSpin) {
  for (int m : {1, 2}) {
    const auto b = make(3, 3, SpaceMode::coset, m);
    for (const auto& s : b->states()) EXPECT_TRUE(s.J.part(0).is_integer());
  }
  for (int m : {1, 2, 3}) {
    const auto b = make(4, 3, SpaceMode::coset, m);
    for (const auto& s : b->states()) EXPECT_FALSE(s.J.is_spinorial());
  }
}

TEST(EnumerateBasis, FullSizeIsSumOfSquaredDimensions) {
  for (int n : {3, 4}) {
    for (int j = 0; j <= 3; ++j) {
      int expected = 0;
      for (const auto& J : coupling::labels_up_to(n, hi(j))) expected += coupling::dim(J) * coupling::dim(J);
      EXPECT_EQ(make(n, j, SpaceMode::full)->size(), expected);
    }
  }
}

TEST(EnumerateBasis, CosetEqualsFullFilteredByInvariantK) {
  for (int j = 0; j <= 6; ++j) {
    auto full = make(3, j, SpaceMode::full);
    std::set<std::pair<int, int>> expected;
    for (const auto& s : full->states()) {
      if (s.k.k.part(0).twice() == 0 && s.J.part(0).is_integer()) expected.insert({s.J.part(0).twice(), s.m.part(0).twice()});
    }
    for (int m : {1, 2}) {
      std::set<std::pair<int, int>> got;
      const auto coset = make(3, j, SpaceMode::coset, m);
      for (const auto& s : coset->states()) {
        EXPECT_TRUE(s.k.invariant);
        EXPECT_EQ(s.k.to_string(), "0");
        got.insert({s.J.part(0).twice(), s.m.part(0).twice()});
      }
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(EnumerateBasis, SplitTwoColumnIsKZero) {
  auto b = make(3, 3, SpaceMode::coset, 2);
  for (const auto& sec : b->sectors()) {
    const int tj = sec.J.part(0).twice();
    ASSERT_EQ(sec.columns.size(), 1u);
    const auto& v = sec.columns[0].vector;
    EXPECT_NEAR(std::abs(v(tj / 2) - 1.0), 0.0, 1e-12);
  }
}

TEST(EnumerateBasis, CosetColumnsAreAnnihilatedByLittleGroup) {
  for (int n : {3, 4}) {
    for (int m = 1; m < n; ++m) {
      auto b = make(n, 3, SpaceMode::coset, m);
      const auto little = operators::LittleGroup::spin_split(n, m);
      for (const auto& sec : b->sectors()) {
        for (const auto& col : sec.columns) {
          EXPECT_NEAR(col.vector.norm(), 1.0, 1e-12);
          for (const auto& g : little.generators) {
            EXPECT_LE((b->frame().irrep_generator(sec.J, g) * col.vector).cwiseAbs().maxCoeff(), 1e-10);
          }
        }
      }
    }
  }
}

TEST(EnumerateBasis, OrderingAndLookup) {
  auto b = make(3, 2, SpaceMode::full);
  for (int i = 1; i < b->size(); ++i) {
    const auto& p = b->state(i - 1);
    const auto& q = b->state(i);
    EXPECT_TRUE(p.J < q.J || (p.J == q.J && (p.k < q.k || (p.k == q.k && p.m < q.m))));
  }
  for (int i = 0; i < b->size(); ++i) EXPECT_EQ(b->position(b->state(i)), i);
  auto again = make(3, 2, SpaceMode::full);
  EXPECT_EQ(again->states(), b->states());
}

TEST(EnumerateBasis, ConfigErrors) {
  EXPECT_THROW(make(3, 2, SpaceMode::coset, 0), ConfigError);
  EXPECT_THROW(make(3, 2, SpaceMode::coset, 3), ConfigError);
  EXPECT_THROW(make(5, 2, SpaceMode::full), ConfigError);
  EXPECT_THROW(parse_space_mode("partial"), ConfigError);
}

TEST(InteriorProjector, Examples) {
  auto b6 = make(3, 6, SpaceMode::coset);
  EXPECT_EQ(static_cast<int>(interior_projector(*b6, hi(0)).size()), b6->size());
  const auto inner = interior_projector(*b6, hi(2));
  EXPECT_EQ(inner.size(), 25u);
  for (int p : inner) EXPECT_LE(b6->state(p).J.part(0), hi(4));
  EXPECT_TRUE(interior_projector(*make(3, 2, SpaceMode::coset), hi(4)).empty());
}

TEST(MultiplicityAudit, Examples) {
  for (int m : {1, 2}) {
    for (const auto& [J, count] : multiplicity_audit(*make(3, 5, SpaceMode::coset, m))) EXPECT_EQ(count, 1);
  }
  const auto full = multiplicity_audit(*make(3, 1, SpaceMode::full));
  EXPECT_EQ(full.at(coupling::IrrepLabel::spin3(hi(1))), 3);
  const auto empty = multiplicity_audit(BasisIndex({3, hi(0), SpaceMode::full, 1}, operators::Frame::get(3), {}));
  EXPECT_TRUE(empty.empty());
}

TEST(MultiplicityAudit, N4CosetIsMultiplicityFree) {
  for (int m : {1, 2, 3}) {
    auto b = make(4, 4, SpaceMode::coset, m);
    EXPECT_GT(b->size(), 0);
    for (const auto& [J, count] : multiplicity_audit(*b)) {
      EXPECT_EQ(count, 1) << J.to_string();
      if (m == 2) EXPECT_TRUE(J.part(0).is_integer() && J.part(1).is_integer());
      else EXPECT_EQ(J.part(0), J.part(1));
    }
  }
}
