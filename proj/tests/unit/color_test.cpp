#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ccbench/color.hpp"
#include "ccbench/error.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace ccbench {
namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::IoError;
}

TEST(Normalize, UniformVectorMapsToWhite) {
  const Chromaticity c = normalize({2, 2, 2});
  EXPECT_NEAR(c.r(), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(c.g(), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(c.b(), 1 / std::sqrt(3.0), 1e-15);
}

TEST(Normalize, PythagoreanQuadruple) {
  const Chromaticity c = normalize({3, 4, 12});
  EXPECT_DOUBLE_EQ(c.r(), 3.0 / 13);
  EXPECT_DOUBLE_EQ(c.g(), 4.0 / 13);
  EXPECT_DOUBLE_EQ(c.b(), 12.0 / 13);
}

TEST(Normalize, RejectsDegenerateInput) {
  EXPECT_EQ(code_of([] { normalize({1, 0, 0}); }), ErrorCode::NonPositiveComponent);
  EXPECT_EQ(code_of([] { normalize({0, 0, 0}); }), ErrorCode::ZeroVector);
  EXPECT_EQ(code_of([] { normalize({-1, 1, 1}); }), ErrorCode::NonPositiveComponent);
  EXPECT_EQ(code_of([] { normalize({NAN, 1, 1}); }), ErrorCode::NonPositiveComponent);
}

TEST(Normalize, FloorIsOptIn) {
  const Chromaticity c = normalize_with_floor({1, 0, 0}, 1e-6);
  EXPECT_GT(c.g(), 0.0);
  EXPECT_NEAR(c.g() / c.r(), 1e-6, 1e-18);
  EXPECT_EQ(code_of([] { normalize_with_floor({0, 0, 0}); }), ErrorCode::ZeroVector);
}

TEST(Normalize, UnitInputIsKeptExactly) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Chromaticity c = testing::random_chromaticity(rng);
    EXPECT_EQ(normalize(c.raw()), c);
    EXPECT_NEAR(std::hypot(c.r(), c.g(), c.b()), 1.0, 1e-9);
  }
}

TEST(ReproductionError, IdenticalInputsGiveZero) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Chromaticity c = testing::random_chromaticity(rng);
    EXPECT_EQ(reproduction_error(c, c).value, 0.0);
  }
}

TEST(ReproductionError, WhiteVersusReddish) {
  // Frozen from the long-double arccos oracle: arccos(2.5 / (sqrt(3) * 1.5)).
  const double expected = 15.79316904826397;
  EXPECT_NEAR(static_cast<double>(oracle::reproduction_deg({1, 1, 1}, {2, 1, 1})), expected, 1e-12);
  EXPECT_NEAR(reproduction_error(Chromaticity::white(), normalize({2, 1, 1})).value, expected, 1e-9);
}

TEST(ReproductionError, MatchesOracleOnRandomPairs) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    const Chromaticity g = testing::random_chromaticity(rng);
    const Chromaticity a = testing::random_chromaticity(rng);
    const double expected = static_cast<double>(oracle::reproduction_deg(g.rgb(), a.rgb()));
    EXPECT_NEAR(reproduction_error(g, a).value, expected, 1e-6);
  }
}

TEST(ReproductionError, ScaleInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const Chromaticity g = testing::random_chromaticity(rng);
    const Chromaticity a = testing::random_chromaticity(rng);
    const double c = scale(rng);
    const double base = reproduction_error(g, a).value;
    EXPECT_NEAR(reproduction_error(g, normalize({c * a.r(), c * a.g(), c * a.b()})).value, base, 1e-9);
    EXPECT_NEAR(reproduction_error(normalize({c * g.r(), c * g.g(), c * g.b()}), a).value, base, 1e-9);
  }
}

TEST(ReproductionError, StaysBelowSupremum) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> log_component(-3.0, 0.0);
  for (int i = 0; i < 20000; ++i) {
    const auto pick = [&] { return std::pow(10.0, log_component(rng)); };
    const Chromaticity g = normalize({pick(), pick(), pick()});
    const Chromaticity a = normalize({pick(), pick(), pick()});
    const double e = reproduction_error(g, a).value;
    EXPECT_GE(e, 0.0);
    EXPECT_LT(e, kReproductionErrorSupremumDeg);
  }
  EXPECT_NEAR(kReproductionErrorSupremumDeg, static_cast<double>(oracle::deg(std::acos(1 / std::sqrt(3.0L)))), 1e-12);
}

TEST(RecoveryError, KnownValues) {
  EXPECT_EQ(recovery_error(Chromaticity::white(), Chromaticity::white()).value, 0.0);
  // arccos(19 / (13 sqrt 3)) from the long-double oracle.
  const double expected = 32.45431193340171;
  EXPECT_NEAR(static_cast<double>(oracle::recovery_deg({1, 1, 1}, {3, 4, 12})), expected, 1e-12);
  EXPECT_NEAR(recovery_error(Chromaticity::white(), normalize({3, 4, 12})).value, expected, 1e-9);
}

TEST(RecoveryError, ApproachesRightAngleForNearAxes) {
  const double eps = 1e-9;
  const double e = recovery_error(normalize({1, eps, eps}), normalize({eps, 1, eps})).value;
  EXPECT_NEAR(e, 90.0, 1e-6);
}

TEST(RecoveryError, Symmetric) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Chromaticity a = testing::random_chromaticity(rng);
    const Chromaticity b = testing::random_chromaticity(rng);
    EXPECT_NEAR(recovery_error(a, b).value, recovery_error(b, a).value, 1e-9);
  }
}

TEST(TwoIlluminantError, Examples) {
  std::mt19937_64 rng(6);
  const Chromaticity g1 = testing::random_chromaticity(rng);
  const Chromaticity g2 = testing::random_chromaticity(rng);
  const Chromaticity a = testing::random_chromaticity(rng);
  EXPECT_EQ(two_illuminant_error(g1, g2, g1, g2), 0.0);
  EXPECT_EQ(two_illuminant_error(g1, g2, g2, g1), 0.0);
  const double r1 = reproduction_error(g1, a).value;
  const double r2 = reproduction_error(g2, a).value;
  EXPECT_EQ(two_illuminant_error(g1, g2, a, a), r1 * r1 + r2 * r2);
}

TEST(TwoIlluminantError, BruteForceAndSymmetry) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const Chromaticity g1 = testing::random_chromaticity(rng);
    const Chromaticity g2 = testing::random_chromaticity(rng);
    const Chromaticity e1 = testing::random_chromaticity(rng);
    const Chromaticity e2 = testing::random_chromaticity(rng);
    const auto sq = [](const Chromaticity& g, const Chromaticity& a) {
      const double r = reproduction_error(g, a).value;
      return r * r;
    };
    const double straight = sq(g1, e1) + sq(g2, e2);
    const double crossed = sq(g1, e2) + sq(g2, e1);
    const double e = two_illuminant_error(g1, g2, e1, e2);
    EXPECT_EQ(e, std::min(straight, crossed));
    EXPECT_EQ(e, two_illuminant_error(g2, g1, e1, e2));
    EXPECT_EQ(e, two_illuminant_error(g1, g2, e2, e1));
    EXPECT_LE(e, straight);
  }
}

}  // namespace
}  // namespace ccbench
