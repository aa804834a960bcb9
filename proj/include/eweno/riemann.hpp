#pragma once

// Exact solution of the Euler Riemann problem for an ideal gas. Star-region
// pressure from a safeguarded Newton iteration on the pressure function,
// then self-similar sampling in xi = x / t.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "eweno/laws.hpp"

namespace eweno {

enum class WaveKind { Shock, Rarefaction };

class VacuumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RiemannConvergenceError : public std::runtime_error {
 public:
  RiemannConvergenceError(const std::string& what, double last_iterate)
      : std::runtime_error(what), last_iterate_(last_iterate) {}
  [[nodiscard]] double last_iterate() const noexcept { return last_iterate_; }

 private:
  double last_iterate_;
};

struct RiemannSolution {
  Primitive left;
  Primitive right;
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_l = 0.0;
  double rho_star_r = 0.0;
  WaveKind left_wave = WaveKind::Rarefaction;
  WaveKind right_wave = WaveKind::Rarefaction;
  double gamma_gas = 1.4;
  int iterations = 0;
};

namespace detail {

struct PressureBranch {
  double value;
  double slope;
};

// f_K(p) and f_K'(p) for one side.
inline PressureBranch pressure_branch(double p, const Primitive& s, double gamma) noexcept {
  const double c = std::sqrt(gamma * s.p / s.rho);
  if (p > s.p) {
    const double a = 2.0 / ((gamma + 1.0) * s.rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(a / (p + b));
    return {(p - s.p) * root, root * (1.0 - 0.5 * (p - s.p) / (p + b))};
  }
  const double ratio = p / s.p;
  const double z = (gamma - 1.0) / (2.0 * gamma);
  const double value = 2.0 * c / (gamma - 1.0) * (std::pow(ratio, z) - 1.0);
  const double slope = std::pow(ratio, -(gamma + 1.0) / (2.0 * gamma)) / (s.rho * c);
  return {value, slope};
}

}  // namespace detail

/// Solves f(p, L) + f(p, R) + (u_R - u_L) = 0 for the star pressure. Newton
/// from the two-rarefaction guess; a bisection step replaces any Newton step
/// that leaves the current bracket.
[[nodiscard]] inline RiemannSolution solve_star(const Primitive& left, const Primitive& right,
                                                double gamma = 1.4) {
  if (!(left.rho > 0.0 && right.rho > 0.0 && left.p > 0.0 && right.p > 0.0))
    throw std::invalid_argument("Riemann states need positive density and pressure");

  const double cl = std::sqrt(gamma * left.p / left.rho);
  const double cr = std::sqrt(gamma * right.p / right.rho);
  const double du = right.u - left.u;
  if (2.0 * (cl + cr) / (gamma - 1.0) <= du) throw VacuumError("Riemann data generates vacuum");

  auto residual = [&](double p) {
    const auto fl = detail::pressure_branch(p, left, gamma);
    const auto fr = detail::pressure_branch(p, right, gamma);
    return detail::PressureBranch{fl.value + fr.value + du, fl.slope + fr.slope};
  };

  // f is increasing and f(0) < 0 without vacuum.
  double lo = 0.0;
  double hi = std::max(left.p, right.p);
  while (residual(hi).value < 0.0) hi *= 2.0;

  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p = std::pow((cl + cr - 0.5 * (gamma - 1.0) * du) / (cl / std::pow(left.p, z) + cr / std::pow(right.p, z)),
                      1.0 / z);
  if (!(p > lo && p < hi)) p = 0.5 * (left.p + right.p);
  if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

  constexpr double tol = 1e-12;
  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.gamma_gas = gamma;

  bool converged = false;
  int it = 0;
  for (; it < 100; ++it) {
    const auto f = residual(p);
    if (std::abs(f.value) <= tol) {
      converged = true;
      break;
    }
    if (f.value < 0.0) lo = p;
    else hi = p;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
      converged = true;
      break;
    }
    double next = p - f.value / f.slope;
    // Stagnation at round-off level counts as converged.
    if (std::abs(next - p) <= 4.0 * std::numeric_limits<double>::epsilon() * p) {
      converged = true;
      break;
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    p = next;
  }
  if (!converged)
    throw RiemannConvergenceError("star pressure iteration did not converge in 100 iterations", p);

  const auto fl = detail::pressure_branch(p, left, gamma);
  const auto fr = detail::pressure_branch(p, right, gamma);
  sol.iterations = it;
  sol.p_star = p;
  sol.u_star = 0.5 * (left.u + right.u) + 0.5 * (fr.value - fl.value);

  const double g6 = (gamma - 1.0) / (gamma + 1.0);
  auto star_density = [&](const Primitive& s, WaveKind& kind) {
    const double ratio = p / s.p;
    if (p > s.p) {
      kind = WaveKind::Shock;
      return s.rho * (ratio + g6) / (g6 * ratio + 1.0);
    }
    kind = WaveKind::Rarefaction;
    return s.rho * std::pow(ratio, 1.0 / gamma);
  };
  sol.rho_star_l = star_density(left, sol.left_wave);
  sol.rho_star_r = star_density(right, sol.right_wave);
  return sol;
}

/// Primitive state at similarity coordinate xi = x / t.
[[nodiscard]] inline Primitive sample(const RiemannSolution& s, double xi) noexcept {
  const double g = s.gamma_gas;
  const double ps = s.p_star;
  const double us = s.u_star;

  if (xi <= us) {
    const Primitive& w = s.left;
    const double c = std::sqrt(g * w.p / w.rho);
    if (s.left_wave == WaveKind::Shock) {
      const double speed = w.u - c * std::sqrt((g + 1.0) / (2.0 * g) * ps / w.p + (g - 1.0) / (2.0 * g));
      return xi <= speed ? w : Primitive{s.rho_star_l, us, ps};
    }
    const double head = w.u - c;
    if (xi <= head) return w;
    const double c_star = c * std::pow(ps / w.p, (g - 1.0) / (2.0 * g));
    const double tail = us - c_star;
    if (xi >= tail) return {s.rho_star_l, us, ps};
    const double k = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * c) * (w.u - xi);
    return {w.rho * std::pow(k, 2.0 / (g - 1.0)), 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * w.u + xi),
            w.p * std::pow(k, 2.0 * g / (g - 1.0))};
  }

  const Primitive& w = s.right;
  const double c = std::sqrt(g * w.p / w.rho);
  if (s.right_wave == WaveKind::Shock) {
    const double speed = w.u + c * std::sqrt((g + 1.0) / (2.0 * g) * ps / w.p + (g - 1.0) / (2.0 * g));
    return xi >= speed ? w : Primitive{s.rho_star_r, us, ps};
  }
  const double head = w.u + c;
  if (xi >= head) return w;
  const double c_star = c * std::pow(ps / w.p, (g - 1.0) / (2.0 * g));
  const double tail = us + c_star;
  if (xi <= tail) return {s.rho_star_r, us, ps};
  const double k = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * c) * (w.u - xi);
  return {w.rho * std::pow(k, 2.0 / (g - 1.0)), 2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * w.u + xi),
          w.p * std::pow(k, 2.0 * g / (g - 1.0))};
}

}  // namespace eweno
