#pragma once

// Modified-wavenumber analysis of the linear schemes underlying a WENO
// scheme, alone and composed with the three-stage SSP Runge-Kutta method.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "eweno/weno.hpp"

namespace eweno {

/// Fixed convex weights replacing the nonlinear weights.
struct LinearScheme {
  std::array<double, 3> interface_weights{};
  std::string name;

  static LinearScheme uw5() { return {kLinearWeights, "uw5"}; }

  static LinearScheme uw3(int substencil) {
    if (substencil < 0 || substencil > 2) throw std::invalid_argument("uw3 substencil must be 0, 1 or 2");
    LinearScheme s;
    s.interface_weights[static_cast<std::size_t>(substencil)] = 1.0;
    s.name = "uw3-" + std::to_string(substencil);
    return s;
  }

  /// Inner scheme on S_0 u S_1 with relative proportion c2.
  static LinearScheme inner_left(double c2) {
    const double d = c2 * kLinearWeights[0] + kLinearWeights[1];
    return {{c2 * kLinearWeights[0] / d, kLinearWeights[1] / d, 0.0}, "inner01"};
  }

  /// Inner scheme on S_1 u S_2 with relative proportion c0.
  static LinearScheme inner_right(double c0) {
    const double d = kLinearWeights[1] + c0 * kLinearWeights[2];
    return {{0.0, kLinearWeights[1] / d, c0 * kLinearWeights[2] / d}, "inner12"};
  }
};

struct SpectralCurve {
  std::vector<double> phi;
  std::vector<double> kstar_re;
  std::vector<double> kstar_im;
  std::vector<double> amp;
  std::vector<double> phase;
};

/// kappa* dx = -i (1 - e^{-i phi}) h(phi), where h(phi) = lambda^T C e(phi)
/// is the interface value produced from the plane wave e^{i j phi}.
/// Im <= 0 means the mode is damped.
[[nodiscard]] inline std::complex<double> linear_symbol(const LinearScheme& s, const ReconstructionTableau& t,
                                                        double phi) {
  using namespace std::complex_literals;
  std::array<std::complex<double>, 5> e{};
  for (int m = -2; m <= 2; ++m) e[static_cast<std::size_t>(m + 2)] = std::polar(1.0, m * phi);
  std::complex<double> h = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    std::complex<double> row = 0.0;
    for (std::size_t i = 0; i < 5; ++i) row += t.C[k][i] * e[i];
    h += s.interface_weights[k] * row;
  }
  return -1i * (1.0 - std::polar(1.0, -phi)) * h;
}

/// Amplification factor 1 + z + z^2/2 + z^3/6 of the three-stage SSP method.
[[nodiscard]] constexpr std::complex<double> rk3_transfer(std::complex<double> z) noexcept {
  return 1.0 + z * (1.0 + z * (0.5 + z / 6.0));
}

/// Samples phi on a uniform grid over [0, pi] (both ends included). Per
/// sample z = -i sigma kappa* dx, amp = |G(z)|, phase = -arg G(z) / sigma.
[[nodiscard]] inline SpectralCurve spectral_curves(const LinearScheme& s, const ReconstructionTableau& t,
                                                   double sigma, int n = 256) {
  if (!(sigma > 0.0)) throw std::invalid_argument("CFL number must be positive");
  if (n < 2) throw std::invalid_argument("need at least two phi samples");
  using namespace std::complex_literals;
  SpectralCurve c;
  const auto count = static_cast<std::size_t>(n);
  c.phi.resize(count);
  c.kstar_re.resize(count);
  c.kstar_im.resize(count);
  c.amp.resize(count);
  c.phase.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double phi = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
    const auto k = linear_symbol(s, t, phi);
    const auto g = rk3_transfer(-1i * sigma * k);
    c.phi[i] = phi;
    c.kstar_re[i] = k.real();
    c.kstar_im[i] = k.imag();
    c.amp[i] = std::abs(g);
    c.phase[i] = -std::arg(g) / sigma;
  }
  return c;
}

}  // namespace eweno
