#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include "eweno/design.hpp"
#include "eweno/spectral.hpp"
#include "oracles.hpp"

using namespace eweno;
using std::numbers::pi;

namespace {

const ReconstructionTableau kTableau = js_tableau();

double consistency_ratio(const LinearScheme& s) {
  return std::abs(linear_symbol(s, kTableau, 0.05) - 0.05) / std::abs(linear_symbol(s, kTableau, 0.025) - 0.025);
}

}  // namespace

TEST(Symbol, VanishesAtZero) {
  for (const auto& s : {LinearScheme::uw5(), LinearScheme::uw3(0), LinearScheme::uw3(1), LinearScheme::uw3(2),
                        LinearScheme::inner_left(2.0), LinearScheme::inner_right(6.0 / 7.0)})
    EXPECT_EQ(linear_symbol(s, kTableau, 0.0), std::complex<double>(0.0, 0.0)) << s.name;
}

TEST(Symbol, Uw5MatchesSeriesExpansion) {
  for (double phi : {0.05, 0.1}) {
    const auto k = linear_symbol(LinearScheme::uw5(), kTableau, phi);
    EXPECT_NEAR((k.real() - phi) / oracle::uw5_dispersion_leading(phi), 1.0, 0.02);
    EXPECT_NEAR(k.imag() / oracle::uw5_dissipation_leading(phi), 1.0, 0.02);
  }
}

TEST(Symbol, UpwindThirdOrderDispersionCurvesCoincide) {
  for (int i = 0; i <= 64; ++i) {
    const double phi = pi * i / 64.0;
    EXPECT_NEAR(linear_symbol(LinearScheme::uw3(1), kTableau, phi).real(),
                linear_symbol(LinearScheme::uw3(2), kTableau, phi).real(), 1e-14);
  }
}

TEST(Symbol, ConsistencyOrders) {
  // |k* - phi| = O(phi^(m+1)) for a scheme of order m.
  EXPECT_NEAR(std::log2(consistency_ratio(LinearScheme::uw5())), 6.0, 0.1);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::log2(consistency_ratio(LinearScheme::uw3(k))), 4.0, 0.1);
  EXPECT_NEAR(std::log2(consistency_ratio(LinearScheme::inner_left(2.0))), 5.0, 0.1);
  EXPECT_NEAR(std::log2(consistency_ratio(LinearScheme::inner_right(2.0))), 5.0, 0.1);
  EXPECT_NEAR(std::log2(consistency_ratio(LinearScheme::inner_right(6.0 / 7.0))), 4.0, 0.1);
}

TEST(Symbol, LinearInWeights) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    double a = U(rng), b = U(rng), c = U(rng);
    const double s = a + b + c;
    a /= s;
    b /= s;
    c /= s;
    const LinearScheme mix{{a, b, c}, "mix"};
    const double phi = pi * U(rng);
    const auto expected = a * linear_symbol(LinearScheme::uw3(0), kTableau, phi) +
                          b * linear_symbol(LinearScheme::uw3(1), kTableau, phi) +
                          c * linear_symbol(LinearScheme::uw3(2), kTableau, phi);
    EXPECT_NEAR(std::abs(linear_symbol(mix, kTableau, phi) - expected), 0.0, 1e-14);
  }
}

TEST(Symbol, InnerSchemeWithTwoThirdsMatchesUw5Dispersion) {
  const auto a = spectral_curves(LinearScheme::inner_left(2.0 / 3.0), kTableau, 0.5);
  const auto b = spectral_curves(LinearScheme::uw5(), kTableau, 0.5);
  for (std::size_t i = 0; i < a.phi.size(); ++i) EXPECT_NEAR(a.kstar_re[i], b.kstar_re[i], 1e-12);
}

TEST(Symbol, InnerSchemesHaveNoParasiticModes) {
  constexpr double kRoundOff = 4.0 * std::numeric_limits<double>::epsilon();
  for (double c : {2.0 / 3.0, 6.0 / 7.0, 1.0, 2.0})
    for (const auto& s : {LinearScheme::inner_left(c), LinearScheme::inner_right(c)}) {
      const auto curves = spectral_curves(s, kTableau, 0.5, 512);
      for (double im : curves.kstar_im) EXPECT_LE(im, kRoundOff) << s.name << " c=" << c;
    }
}

TEST(Transfer, KnownValues) {
  EXPECT_EQ(rk3_transfer(0.0), std::complex<double>(1.0, 0.0));
  EXPECT_NEAR(std::abs(rk3_transfer(-1.0) - 1.0 / 3.0), 0.0, 1e-15);
  // 1 - 3 + 9/2 - 27/6.
  EXPECT_NEAR(std::abs(rk3_transfer(-3.0) - (-2.0)), 0.0, 1e-15);
  EXPECT_GT(std::abs(rk3_transfer(-3.0)), 1.0);
}

TEST(Transfer, EqualsStageBuiltPolynomial) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const std::complex<double> z(U(rng), U(rng));
    EXPECT_NEAR(std::abs(rk3_transfer(z) - oracle::rk3_by_stages(z)), 0.0, 1e-13);
  }
}

TEST(Curves, ZeroWavenumberRow) {
  for (const auto& s : {LinearScheme::uw5(), LinearScheme::uw3(0), LinearScheme::inner_left(2.0)}) {
    const auto c = spectral_curves(s, kTableau, 0.5, 33);
    EXPECT_EQ(c.phi.front(), 0.0);
    EXPECT_DOUBLE_EQ(c.phi.back(), pi);
    EXPECT_DOUBLE_EQ(c.amp.front(), 1.0);
    EXPECT_EQ(c.phase.front(), 0.0);
    EXPECT_EQ(c.phi.size(), 33u);
    EXPECT_EQ(c.amp.size(), c.kstar_im.size());
  }
}

TEST(Curves, MostUpwindSubstencilIsMostDissipative) {
  const auto uw3 = spectral_curves(LinearScheme::uw3(0), kTableau, 0.5, 3);
  const auto uw5 = spectral_curves(LinearScheme::uw5(), kTableau, 0.5, 3);
  EXPECT_LT(uw3.amp[1], uw5.amp[1]);  // phi = pi / 2
}

TEST(Curves, RejectInvalidArguments) {
  EXPECT_THROW((void)spectral_curves(LinearScheme::uw5(), kTableau, 0.0), std::invalid_argument);
  EXPECT_THROW((void)spectral_curves(LinearScheme::uw5(), kTableau, 0.5, 1), std::invalid_argument);
  EXPECT_THROW((void)LinearScheme::uw3(3), std::invalid_argument);
}
