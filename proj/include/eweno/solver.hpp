#pragma once

// Method-of-lines finite-volume solver: global Lax-Friedrichs flux
// splitting, component- or characteristic-wise WENO reconstruction of the
// split fluxes, SSPRK(3,3) time stepping, and a first-order Godunov solver
// built on the exact Riemann solution.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eweno/laws.hpp"
#include "eweno/riemann.hpp"
#include "eweno/weno.hpp"

namespace eweno {

inline constexpr int kGhostWidth = 3;

/// Uniform grid of n cells on [x_lo, x_hi]; centers at x_lo + (j + 1/2) dx.
class Grid1D {
 public:
  Grid1D(double x_lo, double x_hi, int n) : x_lo_(x_lo), x_hi_(x_hi), n_(n) {
    if (n < 7) throw std::invalid_argument("grid needs at least 7 cells");
    if (!(x_hi > x_lo)) throw std::invalid_argument("grid needs x_hi > x_lo");
  }
  [[nodiscard]] double x_lo() const noexcept { return x_lo_; }
  [[nodiscard]] double x_hi() const noexcept { return x_hi_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(n_); }
  [[nodiscard]] double dx() const noexcept { return (x_hi_ - x_lo_) / n_; }
  [[nodiscard]] double center(int j) const noexcept { return x_lo_ + (j + 0.5) * dx(); }
  [[nodiscard]] std::vector<double> centers() const {
    std::vector<double> x(size());
    for (int j = 0; j < n_; ++j) x[static_cast<std::size_t>(j)] = center(j);
    return x;
  }
  bool operator==(const Grid1D&) const = default;

 private:
  double x_lo_;
  double x_hi_;
  int n_;
};

template <ConservationLaw Law>
struct FieldSnapshot {
  using State = typename Law::State;
  double t = 0.0;
  Grid1D grid;
  std::vector<State> cells;
};

enum class BoundaryKind { Periodic, Outflow, Reflective, ExactGhost };

template <class State>
struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::Periodic;
  // ExactGhost only: value of the ghost cell centred at x at time t.
  std::function<State(double x, double t)> exact;
};

/// Positivity loss or non-finite data in the solver.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, int cell, double time)
      : std::runtime_error(what + " (cell " + std::to_string(cell) + ", t = " + std::to_string(time) + ")"),
        cell_(cell),
        time_(time) {}
  [[nodiscard]] int cell() const noexcept { return cell_; }
  [[nodiscard]] double time() const noexcept { return time_; }

 private:
  int cell_;
  double time_;
};

/// Cells padded with kGhostWidth ghost cells on each side.
template <ConservationLaw Law>
[[nodiscard]] std::vector<typename Law::State> with_ghosts(const FieldSnapshot<Law>& s,
                                                           const BoundaryCondition<typename Law::State>& bc,
                                                           const Law& law) {
  const int n = s.grid.n();
  std::vector<typename Law::State> ext(s.cells.size() + 2 * kGhostWidth);
  std::copy(s.cells.begin(), s.cells.end(), ext.begin() + kGhostWidth);
  auto cell = [&](int j) -> const typename Law::State& { return s.cells[static_cast<std::size_t>(j)]; };
  for (int g = 0; g < kGhostWidth; ++g) {
    auto& left = ext[static_cast<std::size_t>(kGhostWidth - 1 - g)];
    auto& right = ext[static_cast<std::size_t>(kGhostWidth + n + g)];
    switch (bc.kind) {
      case BoundaryKind::Periodic:
        left = cell(n - 1 - g);
        right = cell(g);
        break;
      case BoundaryKind::Outflow:
        left = cell(0);
        right = cell(n - 1);
        break;
      case BoundaryKind::Reflective:
        left = law.reflect(cell(g));
        right = law.reflect(cell(n - 1 - g));
        break;
      case BoundaryKind::ExactGhost:
        if (!bc.exact) throw std::invalid_argument("ExactGhost boundary needs a ghost callback");
        left = bc.exact(s.grid.center(-1 - g), s.t);
        right = bc.exact(s.grid.center(n + g), s.t);
        break;
    }
  }
  return ext;
}

/// f+- = (f(u) +- alpha u) / 2.
template <ConservationLaw Law>
[[nodiscard]] std::pair<typename Law::State, typename Law::State> lax_friedrichs_split(
    const Law& law, const typename Law::State& u, double alpha) {
  const auto f = law.flux(u);
  typename Law::State plus{};
  typename Law::State minus{};
  for (std::size_t i = 0; i < Law::components; ++i) {
    plus[i] = 0.5 * (f[i] + alpha * u[i]);
    minus[i] = 0.5 * (f[i] - alpha * u[i]);
  }
  return {plus, minus};
}

template <ConservationLaw Law>
[[nodiscard]] double max_wave_speed(const Law& law, const std::vector<typename Law::State>& cells) {
  double a = 0.0;
  for (const auto& u : cells) a = std::max(a, law.max_wave_speed(u));
  return a;
}

/// Which average feeds the interface eigensystem.
enum class InterfaceMean { Conserved, Primitive };

struct OperatorOptions {
  bool characteristic = true;
  InterfaceMean mean = InterfaceMean::Conserved;
  // Splitting speed; the maximum over the current cells when unset.
  std::optional<double> alpha;
};

namespace detail {

template <ConservationLaw Law>
[[nodiscard]] typename Law::State interface_state(const Law& law, const typename Law::State& a,
                                                  const typename Law::State& b, InterfaceMean mean) {
  if constexpr (requires { law.to_primitive(a); law.to_conserved(law.to_primitive(a)); }) {
    if (mean == InterfaceMean::Primitive) {
      const auto pa = law.to_primitive(a);
      const auto pb = law.to_primitive(b);
      return law.to_conserved({0.5 * (pa.rho + pb.rho), 0.5 * (pa.u + pb.u), 0.5 * (pa.p + pb.p)});
    }
  }
  typename Law::State m{};
  for (std::size_t i = 0; i < Law::components; ++i) m[i] = 0.5 * (a[i] + b[i]);
  return m;
}

}  // namespace detail

/// L(u)_j = -(F_{j+1/2} - F_{j-1/2}) / dx with F = R(f+) + R(f-), where f+ is
/// reconstructed from the left-biased window and f- from the mirrored
/// right-biased one. Throws NumericalFailure on inadmissible input or a
/// non-finite tendency.
template <ConservationLaw Law>
[[nodiscard]] std::vector<typename Law::State> spatial_operator(const FieldSnapshot<Law>& s, const Law& law,
                                                                const ReconstructionTableau& t,
                                                                const BoundaryCondition<typename Law::State>& bc,
                                                                const OperatorOptions& opt = {}) {
  using State = typename Law::State;
  constexpr std::size_t M = Law::components;
  const int n = s.grid.n();

  for (int j = 0; j < n; ++j)
    if (!law.admissible(s.cells[static_cast<std::size_t>(j)]))
      throw NumericalFailure("inadmissible state (non-finite or non-positive density/pressure)", j, s.t);

  const auto ext = with_ghosts(s, bc, law);
  const double alpha = opt.alpha.value_or(max_wave_speed(law, ext));

  std::vector<State> fp(ext.size());
  std::vector<State> fm(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) std::tie(fp[i], fm[i]) = lax_friedrichs_split(law, ext[i], alpha);

  // face[I] sits between cells I-1 and I; ext index of cell j is j + 3.
  std::vector<State> face(static_cast<std::size_t>(n) + 1);
  for (std::size_t I = 0; I <= static_cast<std::size_t>(n); ++I) {
    State out{};
    if (opt.characteristic) {
      const auto mean = detail::interface_state(law, ext[I + 2], ext[I + 3], opt.mean);
      const auto eig = law.eigensystem(mean);
      std::array<State, 5> wp{};
      std::array<State, 5> wm{};
      for (std::size_t k = 0; k < 5; ++k) {
        wp[k] = mat_vec(eig.left, fp[I + k]);
        wm[k] = mat_vec(eig.left, fm[I + 1 + k]);
      }
      State w{};
      for (std::size_t c = 0; c < M; ++c) {
        const StencilWindow left{{wp[0][c], wp[1][c], wp[2][c], wp[3][c], wp[4][c]}};
        const StencilWindow right{{wm[4][c], wm[3][c], wm[2][c], wm[1][c], wm[0][c]}};
        w[c] = reconstruct_left_interface(left, t) + reconstruct_left_interface(right, t);
      }
      out = mat_vec(eig.right, w);
    } else {
      for (std::size_t c = 0; c < M; ++c) {
        const StencilWindow left{{fp[I][c], fp[I + 1][c], fp[I + 2][c], fp[I + 3][c], fp[I + 4][c]}};
        const StencilWindow right{{fm[I + 5][c], fm[I + 4][c], fm[I + 3][c], fm[I + 2][c], fm[I + 1][c]}};
        out[c] = reconstruct_left_interface(left, t) + reconstruct_left_interface(right, t);
      }
    }
    face[I] = out;
  }

  const double inv_dx = 1.0 / s.grid.dx();
  std::vector<State> rhs(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    for (std::size_t c = 0; c < M; ++c) {
      rhs[j][c] = -(face[j + 1][c] - face[j][c]) * inv_dx;
      if (!std::isfinite(rhs[j][c])) throw NumericalFailure("non-finite tendency", static_cast<int>(j), s.t);
    }
  }
  return rhs;
}

namespace detail {

// out = a * x + b * y + c * dt * r, element-wise.
template <class State>
[[nodiscard]] std::vector<State> combine(double a, const std::vector<State>& x, double b, const std::vector<State>& y,
                                         double c, const std::vector<State>& r) {
  std::vector<State> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = 0; i < x[j].size(); ++i) out[j][i] = a * x[j][i] + b * y[j][i] + c * r[j][i];
  return out;
}

}  // namespace detail

/// One step of the three-stage SSP Runge-Kutta method.
template <ConservationLaw Law, class Operator>
[[nodiscard]] FieldSnapshot<Law> ssprk3_step(const FieldSnapshot<Law>& s, double dt, Operator&& op) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const auto& u0 = s.cells;

  FieldSnapshot<Law> stage{s.t, s.grid, {}};
  stage.cells = detail::combine(1.0, u0, 0.0, u0, dt, op(s));
  stage.t = s.t + dt;

  auto r1 = op(stage);
  stage.cells = detail::combine(0.75, u0, 0.25, stage.cells, 0.25 * dt, r1);
  stage.t = s.t + 0.5 * dt;

  auto r2 = op(stage);
  FieldSnapshot<Law> next{s.t + dt, s.grid, detail::combine(1.0 / 3.0, u0, 2.0 / 3.0, stage.cells, 2.0 / 3.0 * dt, r2)};
  return next;
}

enum class ReferenceKind { Exact, RiemannOracle, GodunovFine, SelfFine, None };

/// Riemann data with the initial jump at x0.
struct RiemannData {
  Primitive left;
  Primitive right;
  double x0 = 0.0;
};

template <ConservationLaw Law>
struct Problem {
  using State = typename Law::State;
  std::string name;
  Law law;
  double x_lo = -1.0;
  double x_hi = 1.0;
  BoundaryCondition<State> bc;
  std::function<State(double)> initial;  // point values of the conserved state
  double t_final = 1.0;
  ReferenceKind reference = ReferenceKind::None;
  std::optional<RiemannData> riemann;
};

/// Cell averages of f over the grid: composite 3-point Gauss rule, 16
/// panels per cell.
template <class State, class F>
[[nodiscard]] std::vector<State> cell_averages(const Grid1D& g, F&& f) {
  constexpr int kPanels = 16;
  static constexpr std::array<double, 3> nodes{-0.7745966692414834, 0.0, 0.7745966692414834};
  static constexpr std::array<double, 3> weights{5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  std::vector<State> avg(g.size());
  const double h = g.dx() / kPanels;
  for (int j = 0; j < g.n(); ++j) {
    State sum{};
    const double left = g.x_lo() + j * g.dx();
    for (int p = 0; p < kPanels; ++p) {
      const double mid = left + (p + 0.5) * h;
      for (std::size_t q = 0; q < 3; ++q) {
        const State v = f(mid + 0.5 * h * nodes[q]);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += 0.5 * weights[q] * v[i];
      }
    }
    for (auto& x : sum) x /= kPanels;
    avg[static_cast<std::size_t>(j)] = sum;
  }
  return avg;
}

template <ConservationLaw Law>
[[nodiscard]] FieldSnapshot<Law> initial_snapshot(const Problem<Law>& p, int n) {
  Grid1D g(p.x_lo, p.x_hi, n);
  return {0.0, g, cell_averages<typename Law::State>(g, p.initial)};
}

struct RunConfig {
  int n = 201;
  double cfl = 0.5;
  std::optional<double> t_final;  // overrides the problem's end time
  std::optional<int> steps;       // run exactly this many steps instead
  OperatorOptions op;
};

template <ConservationLaw Law>
struct RunResult {
  FieldSnapshot<Law> snapshot;
  int steps = 0;
  double wall_seconds = 0.0;
};

/// March to the end time. At the start of every step alpha is the largest
/// wave speed over the cells and dt = cfl dx / alpha; the last step is
/// clipped so the run ends exactly at t_final.
template <ConservationLaw Law>
[[nodiscard]] RunResult<Law> run_simulation(const Problem<Law>& p, const ReconstructionTableau& t,
                                            const RunConfig& cfg) {
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  const auto start = std::chrono::steady_clock::now();
  const double t_end = cfg.t_final.value_or(p.t_final);

  RunResult<Law> res{initial_snapshot(p, cfg.n), 0, 0.0};
  auto& snap = res.snapshot;
  const double dx = snap.grid.dx();
  while (true) {
    if (cfg.steps) {
      if (res.steps >= *cfg.steps) break;
    } else if (snap.t >= t_end) {
      break;
    }
    const double alpha = max_wave_speed(p.law, snap.cells);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw NumericalFailure("invalid wave speed", -1, snap.t);
    double dt = cfg.cfl * dx / alpha;
    bool last = false;
    if (!cfg.steps && snap.t + dt >= t_end) {
      dt = t_end - snap.t;
      last = true;
    }
    OperatorOptions op = cfg.op;
    op.alpha = alpha;
    snap = ssprk3_step(snap, dt, [&](const FieldSnapshot<Law>& s) { return spatial_operator(s, p.law, t, p.bc, op); });
    if (last) snap.t = t_end;
    ++res.steps;
  }
  for (std::size_t j = 0; j < snap.cells.size(); ++j)
    if (!p.law.admissible(snap.cells[j]))
      throw NumericalFailure("inadmissible final state", static_cast<int>(j), snap.t);
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

/// Exact Godunov flux: physical flux of the Riemann solution on x / t = 0.
[[nodiscard]] inline Euler1D::State godunov_flux(const Euler1D& law, const Euler1D::State& a,
                                                 const Euler1D::State& b) {
  const auto sol = solve_star(law.to_primitive(a), law.to_primitive(b), law.gamma);
  return law.flux(law.to_conserved(sample(sol, 0.0)));
}

/// First-order Godunov method with exact Riemann fluxes and the same CFL
/// logic as run_simulation.
[[nodiscard]] inline RunResult<Euler1D> godunov_reference(const Problem<Euler1D>& p, int n, double cfl,
                                                          std::optional<double> t_final = std::nullopt) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  const auto start = std::chrono::steady_clock::now();
  const double t_end = t_final.value_or(p.t_final);
  RunResult<Euler1D> res{initial_snapshot(p, n), 0, 0.0};
  auto& snap = res.snapshot;
  const double dx = snap.grid.dx();
  std::vector<Euler1D::State> face(static_cast<std::size_t>(n) + 1);
  while (snap.t < t_end) {
    for (int j = 0; j < n; ++j)
      if (!p.law.admissible(snap.cells[static_cast<std::size_t>(j)]))
        throw NumericalFailure("inadmissible state", j, snap.t);
    const double alpha = max_wave_speed(p.law, snap.cells);
    double dt = cfl * dx / alpha;
    bool last = false;
    if (snap.t + dt >= t_end) {
      dt = t_end - snap.t;
      last = true;
    }
    const auto ext = with_ghosts(snap, p.bc, p.law);
    for (std::size_t I = 0; I <= static_cast<std::size_t>(n); ++I) {
      try {
        face[I] = godunov_flux(p.law, ext[I + 2], ext[I + 3]);
      } catch (const VacuumError&) {
        throw NumericalFailure("vacuum in interface Riemann problem", static_cast<int>(I), snap.t);
      }
    }
    for (std::size_t j = 0; j < snap.cells.size(); ++j)
      for (std::size_t c = 0; c < 3; ++c) snap.cells[j][c] -= dt / dx * (face[j + 1][c] - face[j][c]);
    snap.t = last ? t_end : snap.t + dt;
    ++res.steps;
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace eweno
