#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <srgc/elements.hpp>
#include <srgc/semimonotone.hpp>

using namespace srgc;

namespace {

// Independent long-double reference for the incremental angle.
double angle_oracle(const Vec& x, const Vec& u, const Vec& y, const Vec& v) {
  long double dd = 0.0L, nx = 0.0L, nu = 0.0L;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const long double dx = (long double)x[k] - (long double)y[k];
    const long double du = (long double)u[k] - (long double)v[k];
    dd += dx * du;
    nx += dx * dx;
    nu += du * du;
  }
  if (nx == 0.0L || nu == 0.0L) return 0.0;
  long double c = dd / (std::sqrt(nx) * std::sqrt(nu));
  if (c > 1.0L) c = 1.0L;
  if (c < -1.0L) c = -1.0L;
  return (double)std::acos(c);
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(IncrementalAngle, OrthogonalDifferencesAreARightAngle) {
  EXPECT_DOUBLE_EQ(incremental_angle({1, 0}, {0, 1}, {0, 0}, {0, 0}), kPi / 2);
}

TEST(IncrementalAngle, DiagonalAgainstAxis) {
  const double a = incremental_angle({1, 1}, {1, 0}, {0, 0}, {0, 0});
  EXPECT_NEAR(a, kPi / 4, 1e-15);
  EXPECT_NEAR(a, angle_oracle({1, 1}, {1, 0}, {0, 0}, {0, 0}), 1e-15);
}

TEST(IncrementalAngle, ZeroDifferencesGiveZero) {
  EXPECT_EQ(incremental_angle({2, 3}, {1, 0}, {2, 3}, {5, 5}), 0.0);
  EXPECT_EQ(incremental_angle({1, 0}, {4, 4}, {0, 0}, {4, 4}), 0.0);
}

TEST(IncrementalAngle, MatchesOracleOnRandomInputs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> box(-5.0, 5.0);
  for (int trial = 0; trial < 2000; ++trial) {
    Vec x(3), u(3), y(3), v(3);
    for (int k = 0; k < 3; ++k) {
      x[k] = box(rng);
      u[k] = box(rng);
      y[k] = box(rng);
      v[k] = box(rng);
    }
    EXPECT_NEAR(incremental_angle(x, u, y, v), angle_oracle(x, u, y, v), 1e-12);
  }
}

TEST(IncrementalAngle, RejectsBadInput) {
  const double nan = std::nan("");
  EXPECT_THROW(incremental_angle({nan}, {0}, {0}, {0}), invalid_input_error);
  EXPECT_THROW(incremental_angle({1}, {HUGE_VAL}, {0}, {0}),
               invalid_input_error);
  EXPECT_THROW(incremental_angle({1, 2}, {1}, {0, 0}, {0}), dimension_error);
}

TEST(GraphPair, ValidatesOnConstruction) {
  EXPECT_NO_THROW(GraphPair({1, 2}, {3, 4}));
  EXPECT_THROW(GraphPair({1, 2}, {3}), dimension_error);
  EXPECT_THROW(GraphPair({}, {}), dimension_error);
  EXPECT_THROW(GraphPair({std::nan("")}, {0}), invalid_input_error);
}

TEST(AngleBoundType, ValidatesRange) {
  EXPECT_NO_THROW(AngleBound(0.0));
  EXPECT_NO_THROW(AngleBound(kPi));
  EXPECT_THROW(AngleBound(-0.1), precondition_error);
  EXPECT_THROW(AngleBound(kPi + 0.1), precondition_error);
}

TEST(SemimonotonePairCheck, IdenticalPointsAlwaysPass) {
  const GraphPair p({1, 2}, {3, 4});
  EXPECT_TRUE(semimonotone_pair_check(p, p, {5.0, 5.0}));
}

TEST(SemimonotonePairCheck, ScalarSlopeAgainstMonotone) {
  const GraphPair origin({0.0}, {0.0});
  EXPECT_TRUE(semimonotone_pair_check(GraphPair({1.0}, {1.0}), origin, {0, 0}));
  EXPECT_FALSE(
      semimonotone_pair_check(GraphPair({1.0}, {-1.0}), origin, {0, 0}));
}

TEST(SemimonotonePairCheck, ToleranceAcceptsBoundary) {
  // Slope exactly one against (1, 0): equality case.
  const GraphPair p({1.0}, {1.0}), q({0.0}, {0.0});
  EXPECT_TRUE(semimonotone_pair_check(p, q, {1.0, 0.0}));
  EXPECT_FALSE(semimonotone_pair_check(p, q, {1.0 + 1e-6, 0.0}, 1e-9));
}

TEST(AnglePairCheck, OrthogonalAtRightAngleBound) {
  const GraphPair p({1, 0}, {0, 1}), q({0, 0}, {0, 0});
  EXPECT_TRUE(angle_pair_check(p, q, AngleBound(kPi / 2)));
}

TEST(AnglePairCheck, SignFlipExceedsThreeQuarters) {
  const GraphPair p({1.0}, {-1.0}), q({0.0}, {0.0});
  EXPECT_FALSE(angle_pair_check(p, q, AngleBound(3 * kPi / 4)));
  EXPECT_TRUE(angle_pair_check(p, q, AngleBound(kPi)));
}

TEST(AnglePairCheck, QuarterAngleEquality) {
  const GraphPair p({1, 1}, {1, 0}), q({0, 0}, {0, 0});
  EXPECT_TRUE(angle_pair_check(p, q, AngleBound(kPi / 4)));
}

TEST(ShiftParams, MonotoneGainsStrongMonotonicity) {
  const SemimonotoneParams s = shift_params({0.0, 0.0}, 0.5);
  EXPECT_EQ(s.mu, 0.5);
  EXPECT_EQ(s.rho, 0.0);
}

TEST(ShiftParams, GoldenShiftCancelsTheOffset) {
  const double alpha = (1.0 - std::sqrt(5.0)) / 2.0;
  const SemimonotoneParams s = shift_params({1.0, -1.0}, alpha);
  EXPECT_NEAR(s.mu, 0.0, 1e-15);
  EXPECT_NEAR(s.rho, -1.0 / std::sqrt(5.0), 1e-15);
}

TEST(ShiftParams, RejectsNonpositiveDenominator) {
  EXPECT_THROW(shift_params({0.0, 1.0}, -1.0), precondition_error);
  EXPECT_THROW(shift_params({0.0, 0.5}, -1.0), precondition_error);
}

TEST(ShiftParams, GeneralValue) {
  const SemimonotoneParams s = shift_params({0.0, -1.0}, -1.0);
  // denominator 3, mu' = (0 + (-1)(1 + 1))/3, rho' = -1/3
  EXPECT_NEAR(s.mu, -2.0 / 3.0, 1e-15);
  EXPECT_NEAR(s.rho, -1.0 / 3.0, 1e-15);
}

TEST(ShiftParams, RoundTripIsIdentity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> draw(-3.0, 3.0);
  int accepted = 0;
  while (accepted < 500) {
    const SemimonotoneParams p{draw(rng), draw(rng)};
    const double alpha = draw(rng);
    if (1.0 + 2.0 * p.rho * alpha < 0.05) continue;
    ++accepted;
    const SemimonotoneParams back = shift_params(shift_params(p, alpha), -alpha);
    EXPECT_NEAR(back.mu, p.mu, 1e-12);
    EXPECT_NEAR(back.rho, p.rho, 1e-12);
  }
}

TEST(InvertParams, SwapsComponents) {
  SemimonotoneParams s = invert_params({2.0, 0.0});
  EXPECT_EQ(s.mu, 0.0);
  EXPECT_EQ(s.rho, 2.0);
  s = invert_params({0.0, 0.0});
  EXPECT_EQ(s.mu, 0.0);
  EXPECT_EQ(s.rho, 0.0);
  s = invert_params({-1.0 / 800.0, 112.5});
  EXPECT_EQ(s.mu, 112.5);
  EXPECT_EQ(s.rho, -1.0 / 800.0);
}

TEST(InvertParams, IsAnInvolution) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> draw(-10.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const SemimonotoneParams p{draw(rng), draw(rng)};
    const SemimonotoneParams back = invert_params(invert_params(p));
    EXPECT_EQ(back.mu, p.mu);
    EXPECT_EQ(back.rho, p.rho);
  }
}

TEST(ClassStatusOf, ThreeRegimes) {
  EXPECT_EQ(class_status({-1.0, -1.0}), ClassStatus::Universal);
  EXPECT_EQ(class_status({1.0, 1.0}), ClassStatus::Empty);
  EXPECT_EQ(class_status({0.0, 0.0}), ClassStatus::Nontrivial);
}

TEST(ClassStatusOf, QuarterProductBoundary) {
  EXPECT_EQ(class_status({-0.5, -0.5}), ClassStatus::Universal);
  EXPECT_EQ(class_status({0.5, 0.5}), ClassStatus::Nontrivial);
}

TEST(ClassStatusOf, InvariantUnderInversion) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> draw(-2.0, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const SemimonotoneParams p{draw(rng), draw(rng)};
    EXPECT_EQ(class_status(p), class_status(invert_params(p)));
  }
}

TEST(AngleToSemimonotone, TransistorParamsSitOnTheBoundary) {
  for (const double rho : {-0.01, -0.5, -10.0}) {
    const SemimonotoneParams p{1.0 / (8.0 * rho), rho};
    EXPECT_TRUE(angle_to_semimonotone(AngleBound(3 * kPi / 4), 0.0, p));
    const double lhs = 1.0 - 4.0 * p.mu * p.rho;
    const double s = std::sin(3 * kPi / 4);
    const double rhs = s * s;  // alpha = 0
    EXPECT_NEAR(lhs, rhs, 1e-12);
  }
}

TEST(AngleToSemimonotone, MonotoneCaseAtRightAngle) {
  EXPECT_TRUE(angle_to_semimonotone(AngleBound(kPi / 2), 0.0, {0.0, -1e-3}));
}

TEST(AngleToSemimonotone, ShiftedComonotoneBoundary) {
  const SemimonotoneParams p{0.0, 0.5 * (1.0 - std::numbers::sqrt2)};
  EXPECT_TRUE(angle_to_semimonotone(AngleBound(3 * kPi / 4), 1.0, p));
  // Equality: (1 - 2*alpha*rho)^2 sin^2(3pi/4) = 2 * 1/2 = 1 = 1 - 4*mu*rho.
  const double g = 1.0 - 2.0 * 1.0 * p.rho;
  const double s = std::sin(3 * kPi / 4);
  EXPECT_NEAR(g * g * s * s, 1.0, 1e-12);
}

TEST(AngleToSemimonotone, RejectsOutOfRangeArguments) {
  EXPECT_THROW(angle_to_semimonotone(AngleBound(3 * kPi / 4), 0.0, {0.0, 0.1}),
               precondition_error);
  EXPECT_THROW(angle_to_semimonotone(AngleBound(3 * kPi / 4), 0.0, {0.0, 0.0}),
               precondition_error);
  EXPECT_THROW(angle_to_semimonotone(AngleBound(3 * kPi / 4), -1.0, {0.0, -1.0}),
               precondition_error);
  EXPECT_THROW(angle_to_semimonotone(AngleBound(kPi / 4), 0.0, {0.0, -1.0}),
               precondition_error);
  EXPECT_THROW(angle_to_semimonotone(AngleBound(kPi), 0.0, {0.0, -1.0}),
               precondition_error);
}

TEST(ComonotoneFromAngle, RightAngleIsPlainMonotone) {
  const SemimonotoneParams p = comonotone_from_angle(AngleBound(kPi / 2), 1.0);
  EXPECT_EQ(p.mu, 0.0);
  EXPECT_EQ(p.rho, 0.0);
}

TEST(ComonotoneFromAngle, ThreeQuarterValues) {
  SemimonotoneParams p = comonotone_from_angle(AngleBound(3 * kPi / 4), 1.0);
  EXPECT_EQ(p.mu, 0.0);
  EXPECT_NEAR(p.rho, 0.5 * (1.0 - std::numbers::sqrt2), 1e-15);
  p = comonotone_from_angle(AngleBound(3 * kPi / 4), 0.1);
  EXPECT_NEAR(p.rho, 5.0 * (1.0 - std::numbers::sqrt2), 1e-12);
}

TEST(ComonotoneFromAngle, RejectsOutOfRangeArguments) {
  EXPECT_THROW(comonotone_from_angle(AngleBound(3 * kPi / 4), 0.0), precondition_error);
  EXPECT_THROW(comonotone_from_angle(AngleBound(3 * kPi / 4), -1.0), precondition_error);
  EXPECT_THROW(comonotone_from_angle(AngleBound(kPi / 4), 1.0), precondition_error);
  EXPECT_THROW(comonotone_from_angle(AngleBound(kPi), 1.0), precondition_error);
}

TEST(ComonotoneFromAngle, ProducedParamsAreTightForTheAngle) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(kPi / 2, 2.8);
  std::uniform_real_distribution<double> scale(0.01, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double theta = angle(rng);
    const double alpha = scale(rng);
    const SemimonotoneParams p = comonotone_from_angle(AngleBound(theta), alpha);
    EXPECT_LE(p.rho, 0.0);
    EXPECT_TRUE(angle_to_semimonotone(AngleBound(theta), alpha, p));
    const double g = 1.0 - 2.0 * alpha * p.rho;
    const double s = std::sin(theta);
    EXPECT_NEAR(g * g * s * s, 1.0 - 4.0 * p.mu * p.rho, 1e-12);
  }
}

TEST(SlopeIntervalParams, LinearSlopesSatisfyThePairCheck) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> box(-10.0, 10.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const double ell = 0.1 + 9.9 * unit(rng);
    const double sigma = -ell + 2.0 * ell * unit(rng);  // in (-ell, ell]
    const double a = sigma + (ell - sigma) * unit(rng);
    const SemimonotoneParams p = slope_to_params(sigma, ell);
    const double x = box(rng), y = box(rng);
    const GraphPair gp({x}, {a * x}), gq({y}, {a * y});
    EXPECT_TRUE(semimonotone_pair_check(gp, gq, p, 1e-12))
        << "sigma=" << sigma << " ell=" << ell << " a=" << a;
  }
}
