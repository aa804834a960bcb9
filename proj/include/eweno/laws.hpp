#pragma once

// Conservation laws understood by the finite-volume solver: flux, wave
// speed bound and eigenstructure.

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

namespace eweno {

template <std::size_t M>
using SquareMatrix = std::array<std::array<double, M>, M>;

template <std::size_t M>
struct Eigensystem {
  SquareMatrix<M> right{};  // columns are right eigenvectors
  SquareMatrix<M> left{};   // inverse of right
  std::array<double, M> eigenvalues{};
};

template <std::size_t M>
[[nodiscard]] constexpr std::array<double, M> mat_vec(const SquareMatrix<M>& a,
                                                      const std::array<double, M>& x) noexcept {
  std::array<double, M> y{};
  for (std::size_t i = 0; i < M; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < M; ++j) s += a[i][j] * x[j];
    y[i] = s;
  }
  return y;
}

template <class L>
concept ConservationLaw = requires(const L& law, const typename L::State& u) {
  { L::components } -> std::convertible_to<std::size_t>;
  requires std::same_as<typename L::State, std::array<double, L::components>>;
  { law.flux(u) } -> std::same_as<typename L::State>;
  { law.max_wave_speed(u) } -> std::convertible_to<double>;
  { law.eigensystem(u) } -> std::same_as<Eigensystem<L::components>>;
  { law.admissible(u) } -> std::same_as<bool>;
  { law.reflect(u) } -> std::same_as<typename L::State>;
  { L::component_names() } -> std::same_as<std::vector<std::string>>;
};

/// u_t + a u_x = 0 for M independent components (M = 2 carries the real and
/// imaginary parts of a complex plane wave).
template <std::size_t M = 1>
struct LinearAdvection {
  static constexpr std::size_t components = M;
  using State = std::array<double, M>;

  double velocity = 1.0;

  [[nodiscard]] State flux(const State& u) const noexcept {
    State f{};
    for (std::size_t i = 0; i < M; ++i) f[i] = velocity * u[i];
    return f;
  }
  [[nodiscard]] double max_wave_speed(const State&) const noexcept { return std::abs(velocity); }
  [[nodiscard]] Eigensystem<M> eigensystem(const State&) const noexcept {
    Eigensystem<M> e;
    for (std::size_t i = 0; i < M; ++i) {
      e.right[i][i] = 1.0;
      e.left[i][i] = 1.0;
      e.eigenvalues[i] = velocity;
    }
    return e;
  }
  [[nodiscard]] bool admissible(const State& u) const noexcept {
    for (double x : u)
      if (!std::isfinite(x)) return false;
    return true;
  }
  [[nodiscard]] State reflect(const State& u) const noexcept { return u; }
  [[nodiscard]] static std::vector<std::string> component_names() {
    if constexpr (M == 1) return {"u"};
    else if constexpr (M == 2) return {"re", "im"};
    else {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < M; ++i) names.push_back("u" + std::to_string(i));
      return names;
    }
  }
};

struct Primitive {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

/// One-dimensional Euler equations for an ideal gas, conserved variables
/// (rho, rho u, E).
struct Euler1D {
  static constexpr std::size_t components = 3;
  using State = std::array<double, 3>;

  double gamma = 1.4;

  [[nodiscard]] double pressure(const State& q) const noexcept {
    return (gamma - 1.0) * (q[2] - 0.5 * q[1] * q[1] / q[0]);
  }
  [[nodiscard]] double sound_speed(const State& q) const noexcept {
    return std::sqrt(gamma * pressure(q) / q[0]);
  }
  [[nodiscard]] Primitive to_primitive(const State& q) const noexcept {
    return {q[0], q[1] / q[0], pressure(q)};
  }
  [[nodiscard]] State to_conserved(const Primitive& w) const noexcept {
    return {w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
  }
  [[nodiscard]] State flux(const State& q) const noexcept {
    const double u = q[1] / q[0];
    const double p = pressure(q);
    return {q[1], q[1] * u + p, u * (q[2] + p)};
  }
  [[nodiscard]] double max_wave_speed(const State& q) const noexcept {
    return std::abs(q[1] / q[0]) + sound_speed(q);
  }

  /// Eigenvectors in conserved variables, parameterized by the total
  /// enthalpy H = (E + p) / rho.
  [[nodiscard]] Eigensystem<3> eigensystem(const State& q) const noexcept {
    const double u = q[1] / q[0];
    const double p = pressure(q);
    const double c = std::sqrt(gamma * p / q[0]);
    const double h = (q[2] + p) / q[0];
    const double b1 = (gamma - 1.0) / (c * c);
    const double b2 = 0.5 * b1 * u * u;

    Eigensystem<3> e;
    e.right = {{{1.0, 1.0, 1.0}, {u - c, u, u + c}, {h - u * c, 0.5 * u * u, h + u * c}}};
    e.left = {{{0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1},
               {1.0 - b2, b1 * u, -b1},
               {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1}}};
    e.eigenvalues = {u - c, u, u + c};
    return e;
  }

  [[nodiscard]] bool admissible(const State& q) const noexcept {
    return std::isfinite(q[0]) && std::isfinite(q[1]) && std::isfinite(q[2]) && q[0] > 0.0 && pressure(q) > 0.0;
  }
  [[nodiscard]] State reflect(const State& q) const noexcept { return {q[0], -q[1], q[2]}; }
  [[nodiscard]] static std::vector<std::string> component_names() { return {"rho", "mom", "E"}; }
};

static_assert(ConservationLaw<LinearAdvection<1>>);
static_assert(ConservationLaw<LinearAdvection<2>>);
static_assert(ConservationLaw<Euler1D>);

}  // namespace eweno
