#include <gtest/gtest.h>

#include "gmrk/errors.hpp"
#include "gmrk/operators/frame.hpp"

using namespace gmrk;
using namespace gmrk::operators;
using coupling::IrrepLabel;
using coupling::PhaseConvention;

namespace {

struct FrameCase {
  int n;
  PhaseConvention conv;
};

class FrameTest : public ::testing::TestWithParam<FrameCase> {
 protected:
  std::shared_ptr<const Frame> frame() const { return Frame::get(GetParam().n, GetParam().conv); }
};

Eigen::VectorXd unit(int size, int i) { return Eigen::VectorXd::Unit(size, i); }

}  // namespace

TEST_P(FrameTest, AdjointMapIsUnitary) {
  const auto& c = frame()->tensor_map().adjoint();
  EXPECT_LE((c * c.adjoint() - DenseMatrix::Identity(c.rows(), c.rows())).cwiseAbs().maxCoeff(), 1e-14);
}

TEST_P(FrameTest, SymmetricBasisIsOrthonormalTracelessSymmetric) {
  const auto& s = frame()->tensor_map().symmetric_basis();
  const int n = frame()->n();
  EXPECT_EQ(static_cast<int>(s.size()), n * (n + 1) / 2 - 1);
  for (size_t i = 0; i < s.size(); ++i) {
    EXPECT_LE(std::abs(s[i].trace()), 1e-14);
    EXPECT_LE((s[i] - s[i].transpose()).cwiseAbs().maxCoeff(), 1e-14);
    for (size_t k = 0; k < s.size(); ++k) {
      const Complex ip = (s[i].conjugate().cwiseProduct(s[k])).sum();
      EXPECT_NEAR(std::abs(ip - (i == k ? 1.0 : 0.0)), 0.0, 1e-14);
    }
  }
}

TEST_P(FrameTest, VectorBasisIntertwinesGenerators) {
  const auto f = frame();
  const DenseMatrix& v = f->vector_basis();
  const auto gens = f->irrep_generators(IrrepLabel::vector(f->n()));
  EXPECT_LE((v.adjoint() * v - DenseMatrix::Identity(f->n(), f->n())).cwiseAbs().maxCoeff(), 1e-14);
  for (size_t l = 0; l < gens.size(); ++l) {
    const DenseMatrix lhs = v.adjoint() * f->defining_spherical_generator(static_cast<int>(l)) * v;
    EXPECT_LE((lhs - gens[l]).cwiseAbs().maxCoeff(), 1e-13) << "component " << l;
  }
}

TEST_P(FrameTest, SymmetricGeneratorsMatchCommutatorAction) {
  const auto f = frame();
  const auto& s = f->tensor_map().symmetric_basis();
  const int np = static_cast<int>(f->pairs().size());
  for (int p = 0; p < np; ++p) {
    const DenseMatrix g = f->defining_generator(f->pairs()[static_cast<size_t>(p)].a, f->pairs()[static_cast<size_t>(p)].b);
    const DenseMatrix rep = f->symmetric_generator(unit(np, p));
    for (size_t mu = 0; mu < s.size(); ++mu) {
      DenseMatrix r = g * s[mu] - s[mu] * g;
      for (size_t nu = 0; nu < s.size(); ++nu) r -= rep(static_cast<int>(nu), static_cast<int>(mu)) * s[nu];
      EXPECT_LE(r.cwiseAbs().maxCoeff(), 1e-13);
    }
  }
}

TEST_P(FrameTest, CartesianSymmetricRoundTrip) {
  const auto& map = frame()->tensor_map();
  const int n = frame()->n();
  DenseMatrix x = DenseMatrix::Zero(n, n);
  x(0, 0) = 0.3;
  x(1, 1) = -0.7;
  x(n - 1, n - 1) = 0.4;
  x(0, 1) = x(1, 0) = 0.25;
  EXPECT_LE((map.symmetric_matrix(map.symmetric_components(x)) - x).cwiseAbs().maxCoeff(), 1e-14);
}

INSTANTIATE_TEST_SUITE_P(AllFrames, FrameTest,
                         ::testing::Values(FrameCase{3, PhaseConvention::condon_shortley},
                                           FrameCase{3, PhaseConvention::reversed},
                                           FrameCase{4, PhaseConvention::condon_shortley},
                                           FrameCase{4, PhaseConvention::reversed}));

TEST(Frame, N3ZeroComponentIsM12) {
  const auto f = Frame::get(3);
  // Components ordered mu = -1, 0, +1; M_0 = M_12 (zero-based pair (0,1)).
  EXPECT_EQ(f->adjoint_components()[1].mu.twice(), 0);
  EXPECT_NEAR(std::abs(f->tensor_map().cartesian_to_adjoint(1, 0, 1) - Complex(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f->tensor_map().cartesian_to_adjoint(1, 1, 2)), 0.0, 1e-15);
}

TEST(Frame, UnsupportedRank) {
  EXPECT_THROW(Frame::get(5), ConfigError);
  EXPECT_THROW(LittleGroup::spin_split(3, 0), ConfigError);
  EXPECT_THROW(LittleGroup::spin_split(3, 3), ConfigError);
}

TEST(Frame, LittleGroupSizes) {
  EXPECT_EQ(LittleGroup::spin_split(3, 1).generators.size(), 1u);
  EXPECT_EQ(LittleGroup::spin_split(4, 2).generators.size(), 2u);
  EXPECT_EQ(LittleGroup::spin_split(4, 1).generators.size(), 3u);
  EXPECT_EQ(LittleGroup::unitary(4).generators.size(), 4u);
}

TEST(Frame, IsShared) { EXPECT_EQ(Frame::get(3).get(), Frame::get(3).get()); }
