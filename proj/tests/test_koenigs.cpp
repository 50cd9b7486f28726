#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "isonet/errors.hpp"
#include "isonet/generators.hpp"
#include "isonet/koenigs.hpp"
#include "support.hpp"

using namespace isonet;

namespace {

std::vector<Vec3> curve(int count, std::uint64_t seed, int axis) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::vector<Vec3> out{{0, 0, 0}};
  for (int i = 1; i < count; ++i) {
    Vec3 p = out.back();
    for (int c = 0; c < 3; ++c) p[c] += (c == axis ? 1.0 : 0.0) + u(rng);
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(MixedArea, UnitSquare) {
  const QuadNet sq = translational_net({{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {0, 1, 0}});
  const BiVec a = mixed_area(sq, sq, {0, 0});
  EXPECT_DOUBLE_EQ(a(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(a.norm(), 1.0);
}

TEST(MixedArea, SymmetricBilinear) {
  const QuadNet a = fixtures::moutard_net(2, 2, 1);
  const QuadNet b = fixtures::conjugate_net(2, 2, 2);
  Grid<MVec> sum = a.vertices();
  for (std::size_t i = 0; i < sum.size(); ++i) sum.flat()[i] += 2.0 * b.vertices().flat()[i];
  const QuadNet c(std::move(sum));
  for (FaceIndex f : a.faces()) {
    EXPECT_EQ(mixed_area(a, b, f), mixed_area(b, a, f));
    const BiVec lhs = mixed_area(c, a, f);
    const BiVec rhs = mixed_area(a, a, f) + 2.0 * mixed_area(b, a, f);
    EXPECT_LT((lhs - rhs).norm(), 1e-13);
  }
}

TEST(DiagonalIntersection, Parallelogram) {
  const QuadNet p = translational_net({{0, 0, 0}, {2, 0, 0}}, {{0, 0, 0}, {0.5, 1, 0}});
  const DiagonalIntersection x = diagonal_intersection(p, {0, 0});
  EXPECT_NEAR(x.a, 0.5, 1e-15);
  EXPECT_NEAR(x.b, 0.5, 1e-15);
  EXPECT_LT(x.gap, 1e-15);
}

TEST(DiagonalIntersection, Degenerate) {
  const QuadNet flat = translational_net({{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {1, 0, 0}});
  EXPECT_THROW(diagonal_intersection(flat, {0, 0}), GeometryError);
}

TEST(KoenigsTest, TranslationalExact) {
  const QuadNet net = translational_net(curve(5, 1, 0), curve(6, 2, 1));
  const CheckReport r = koenigs_test(net);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.max_residual, 1e-12);
}

TEST(KoenigsTest, AgreesWithMoutardLift) {
  int koenigs = 0, generic = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const QuadNet net = fixtures::moutard_net(4, 4, 100 + seed);
    EXPECT_TRUE(koenigs_test(net).passed) << seed;
    EXPECT_NO_THROW(moutard_lift(net)) << seed;
    ++koenigs;
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const QuadNet net = fixtures::conjugate_net(4, 4, 200 + seed);
    ASSERT_TRUE(check_planar(net).passed);
    const bool passed = koenigs_test(net).passed;
    bool lifted = true;
    try {
      moutard_lift(net);
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotKoenigs);
      lifted = false;
    }
    EXPECT_EQ(passed, lifted) << seed;
    EXPECT_FALSE(passed) << seed;
    ++generic;
  }
  EXPECT_EQ(koenigs + generic, 100);
}

TEST(KoenigsTest, LorentzInvariantVerdict) {
  std::mt19937_64 rng(4);
  const QuadNet net = fixtures::moutard_net(3, 4, 77);
  const QuadNet bad = fixtures::conjugate_net(3, 4, 78);
  for (int trial = 0; trial < 5; ++trial) {
    const auto L = fixtures::random_lorentz(rng);
    EXPECT_TRUE(koenigs_test(fixtures::transform(L, net)).passed);
    EXPECT_FALSE(koenigs_test(fixtures::transform(L, bad)).passed);
  }
}

TEST(MoutardLift, TranslationalAlternates) {
  const QuadNet net = translational_net(curve(4, 3, 0), curve(5, 4, 1));
  const NuField nu = moutard_lift(net);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      EXPECT_NEAR(nu.values(m, n), n % 2 == 0 ? 1.0 : -1.0, 1e-12);
    }
  }
}

TEST(MoutardLift, TreeIndependent) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QuadNet net = fixtures::moutard_net(4, 5, 300 + seed);
    const NuField a = moutard_lift(net, kCheckTol, TreeOrder::RowMajor);
    const NuField b = moutard_lift(net, kCheckTol, TreeOrder::ColumnMajor);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      EXPECT_NEAR(a.values.flat()[i], b.values.flat()[i],
                  1e-9 * std::abs(a.values.flat()[i]));
    }
  }
}

TEST(MoutardLift, WorksThroughOrigin) {
  // Affine span containing the origin of R^5.
  Grid<MVec> g = translational_net(curve(3, 5, 0), curve(3, 6, 1)).vertices();
  for (MVec& v : g.flat()) v = MVec(v[0], v[1], v[2], v[3], 0.0);
  EXPECT_NO_THROW(moutard_lift(QuadNet(std::move(g))));
}

TEST(ChristoffelDual, TranslationalIsFMinusG) {
  const auto f = curve(4, 7, 0);
  const auto g = curve(5, 8, 1);
  const QuadNet net = translational_net(f, g);
  const DualResult dual = christoffel_dual(net, moutard_lift(net));
  EXPECT_LT(dual.closure_residual, 1e-12);
  const MVec offset = dual.dual(0, 0) - MVec(f[0][0] - g[0][0], f[0][1] - g[0][1],
                                             f[0][2] - g[0][2], 0, 0);
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 5; ++n) {
      const MVec expected =
          MVec(f[m][0] - g[n][0], f[m][1] - g[n][1], f[m][2] - g[n][2], 0, 0) + offset;
      EXPECT_LT(euclidean_norm(dual.dual(m, n) - expected), 1e-12);
    }
  }
  EXPECT_EQ(dual.base, net(0, 0));
}

TEST(ChristoffelDual, DualPairOnMoutardNets) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QuadNet net = fixtures::moutard_net(4, 4, 400 + seed);
    const DualResult dual = christoffel_dual(net, moutard_lift(net));
    const DualPairReport pair = check_dual_pair(net, dual.dual);
    EXPECT_TRUE(pair.passed) << seed;
    EXPECT_TRUE(pair.criteria_agree);
    EXPECT_LT(pair.mixed_area.max_residual, 1e-10);
    EXPECT_TRUE(koenigs_test(dual.dual).passed);
  }
}

TEST(ChristoffelDual, NotDualToItself) {
  const QuadNet net = fixtures::moutard_net(3, 3, 9);
  const DualPairReport pair = check_dual_pair(net, net);
  EXPECT_FALSE(pair.passed);
  EXPECT_NEAR(pair.mixed_area.max_residual, 1.0, 1e-12);
}

TEST(ChristoffelDual, CustomBase) {
  const QuadNet net = fixtures::moutard_net(3, 3, 12);
  const NuField nu = moutard_lift(net);
  const MVec base(1, 2, 3, 4, 5);
  const DualResult a = christoffel_dual(net, nu);
  const DualResult b = christoffel_dual(net, nu, base);
  EXPECT_EQ(b.dual(0, 0), base);
  EXPECT_LT(euclidean_norm((b.dual(2, 3) - a.dual(2, 3)) - (base - net(0, 0))), 1e-12);
}

TEST(ChristoffelDual, WrongNuDoesNotClose) {
  const QuadNet net = fixtures::moutard_net(3, 3, 13);
  NuField nu = moutard_lift(net);
  nu.values(2, 2) *= 1.5;
  try {
    christoffel_dual(net, nu);
    FAIL();
  } catch (const NonClosedError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonClosed);
    EXPECT_GT(e.result().closure_residual, 1e-3);
    EXPECT_FALSE(e.location().empty());
  }
}

TEST(RoundTrip, DualOfDualIsHomothetic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QuadNet net = fixtures::moutard_net(4, 4, 500 + seed);
    const RoundTripReport r = dualize_twice(net);
    EXPECT_TRUE(r.passed) << seed;
    EXPECT_LT(r.relative_error, 1e-9);
  }
}
