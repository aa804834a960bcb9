#pragma once

// Named benchmark problems, scheme-name parsing, and a type-erased driver
// that runs a problem and evaluates its reference solution on the same grid.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <variant>
#include <vector>

#include "eweno/convergence.hpp"
#include "eweno/design.hpp"
#include "eweno/laws.hpp"
#include "eweno/riemann.hpp"
#include "eweno/solver.hpp"
#include "eweno/spectral.hpp"
#include "eweno/weno.hpp"

namespace eweno {

using ScalarProblem = Problem<LinearAdvection<1>>;
using PlaneWaveProblem = Problem<LinearAdvection<2>>;
using EulerProblem = Problem<Euler1D>;

struct ProblemCase {
  std::string name;
  std::string description;
  std::variant<ScalarProblem, PlaneWaveProblem, EulerProblem, DerivativeCase> problem;
  double default_cfl = 0.5;
  int default_n = 201;
  std::optional<int> default_steps;  // fixed step count instead of t_final
  int reference_n = 0;               // grid for GodunovFine / SelfFine references
};

[[nodiscard]] inline const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names{"shu-linear", "plane-wave-10pi", "plane-wave-20pi", "sod",
                                              "lax",        "r123",            "blast",           "shu-osher",
                                              "tanh-deriv", "sin-crit-deriv"};
  return names;
}

namespace detail {

// Gaussian, square, triangle and half ellipse on [-1, 1].
inline double shu_linear_profile(double x) {
  constexpr double z = -0.7;
  constexpr double a = 0.5;
  constexpr double alpha = 10.0;
  constexpr double delta = 1.0 / 200.0;
  const double beta = std::log(2.0) / (36.0 * delta * delta);
  auto G = [&](double c) { return std::exp(-beta * (x - c) * (x - c)); };
  auto F = [&](double c) { return std::sqrt(std::max(1.0 - alpha * alpha * (x - c) * (x - c), 0.0)); };
  if (x >= -0.8 && x <= -0.6) return (G(z - delta) + G(z + delta) + 4.0 * G(z)) / 6.0;
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6) return (F(a - delta) + F(a + delta) + 4.0 * F(a)) / 6.0;
  return 0.0;
}

// x reduced into [lo, hi) for a periodic domain.
inline double wrap(double x, double lo, double hi) {
  const double len = hi - lo;
  double r = std::fmod(x - lo, len);
  if (r < 0.0) r += len;
  return lo + r;
}

inline EulerProblem riemann_problem(std::string name, Primitive left, Primitive right, double t_final) {
  const Euler1D law{};
  EulerProblem p;
  p.name = std::move(name);
  p.law = law;
  p.x_lo = -1.0;
  p.x_hi = 1.0;
  p.bc.kind = BoundaryKind::Outflow;
  p.initial = [law, left, right](double x) { return law.to_conserved(x < 0.0 ? left : right); };
  p.t_final = t_final;
  p.reference = ReferenceKind::RiemannOracle;
  p.riemann = RiemannData{left, right, 0.0};
  return p;
}

inline PlaneWaveProblem plane_wave(std::string name, double kappa) {
  PlaneWaveProblem p;
  p.name = std::move(name);
  p.law = LinearAdvection<2>{1.0};
  p.x_lo = -1.0;
  p.x_hi = 1.0;
  p.bc.kind = BoundaryKind::Periodic;
  p.initial = [kappa](double x) { return std::array<double, 2>{std::cos(kappa * x), std::sin(kappa * x)}; };
  p.t_final = 4.0;
  p.reference = ReferenceKind::Exact;
  return p;
}

}  // namespace detail

/// Throws std::invalid_argument for unknown names.
[[nodiscard]] inline ProblemCase make_problem(std::string_view name) {
  using std::numbers::pi;
  ProblemCase c;
  c.name = std::string(name);

  if (name == "shu-linear") {
    ScalarProblem p;
    p.name = c.name;
    p.law = LinearAdvection<1>{1.0};
    p.bc.kind = BoundaryKind::Periodic;
    p.initial = [](double x) { return std::array<double, 1>{detail::shu_linear_profile(x)}; };
    p.t_final = 2.0;
    p.reference = ReferenceKind::Exact;
    c.description = "linear advection of four shapes over one period";
    c.problem = p;
  } else if (name == "plane-wave-10pi" || name == "plane-wave-20pi") {
    const double kappa = name == "plane-wave-10pi" ? 10.0 * pi : 20.0 * pi;
    c.description = "complex plane wave advected for 800 steps";
    c.problem = detail::plane_wave(c.name, kappa);
    c.default_steps = 800;
  } else if (name == "sod") {
    c.description = "Sod shock tube";
    c.problem = detail::riemann_problem(c.name, {1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 0.4);
    c.default_cfl = 0.4;
  } else if (name == "lax") {
    c.description = "Lax shock tube";
    c.problem = detail::riemann_problem(c.name, {0.445, 0.689, 3.528}, {0.5, 0.0, 0.5710}, 0.25);
    c.default_cfl = 0.4;
  } else if (name == "r123") {
    c.description = "two strong rarefactions with a near-vacuum star region";
    c.problem = detail::riemann_problem(c.name, {1.0, -2.0, 0.4}, {1.0, 2.0, 0.4}, 0.25);
    c.default_cfl = 0.4;
  } else if (name == "blast") {
    const Euler1D law{};
    EulerProblem p;
    p.name = c.name;
    p.law = law;
    p.x_lo = 0.0;
    p.x_hi = 1.0;
    p.bc.kind = BoundaryKind::Reflective;
    p.initial = [law](double x) {
      const double pr = x <= 0.1 ? 1000.0 : (x >= 0.9 ? 100.0 : 0.01);
      return law.to_conserved({1.0, 0.0, pr});
    };
    p.t_final = 0.038;
    p.reference = ReferenceKind::GodunovFine;
    c.description = "interacting blast waves between reflective walls";
    c.problem = p;
    c.default_cfl = 0.4;
    c.default_n = 400;
    c.reference_n = 20000;
  } else if (name == "shu-osher") {
    const Euler1D law{};
    EulerProblem p;
    p.name = c.name;
    p.law = law;
    p.x_lo = -1.0;
    p.x_hi = 9.0;
    p.bc.kind = BoundaryKind::Outflow;
    p.initial = [law](double x) {
      if (x < 0.0) return law.to_conserved({3.857, 2.629, 10.333});
      return law.to_conserved({1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0});
    };
    p.t_final = 1.8;
    p.reference = ReferenceKind::SelfFine;
    c.description = "Mach 3 shock running into a density wave";
    c.problem = p;
    c.default_cfl = 0.4;
    c.reference_n = 2000;
  } else if (name == "tanh-deriv") {
    c.description = "WENO derivative of tanh(10x)";
    c.problem = tanh_case();
  } else if (name == "sin-crit-deriv") {
    c.description = "WENO derivative of sin(pi x - sin(pi x)/pi)";
    c.problem = sin_critical_case();
  } else {
    throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
  }
  return c;
}

struct SchemeParameters {
  double eps = 1e-6;
  double p = 2.0;
  double mu = 0.25;
};

namespace detail {

// Accepts decimals and fractions such as "2/3".
inline double parse_number(std::string_view s) {
  auto parse = [&](std::string_view part) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || end != part.data() + part.size())
      throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse(s);
  const double den = parse(s.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  return parse(s.substr(0, slash)) / den;
}

}  // namespace detail

/// Scheme names: js, z, linear, weno45 (= ejs:2,2), ejs:<c2>,<c0>, ez:<c2>,<c0>.
[[nodiscard]] inline ReconstructionTableau parse_scheme(std::string_view name, const SchemeParameters& sp = {}) {
  if (name == "js") return js_tableau(sp.eps, sp.p);
  if (name == "z") return z_tableau(sp.eps, sp.p);
  if (name == "linear") return linear_tableau();
  if (name == "weno45") {
    auto t = embedded_js_tableau(2.0, 2.0, sp.eps);
    t.name = "weno45";
    return t;
  }
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const auto head = name.substr(0, colon);
    const auto args = name.substr(colon + 1);
    const auto comma = args.find(',');
    if ((head == "ejs" || head == "ez") && comma != std::string_view::npos) {
      const double c2 = detail::parse_number(args.substr(0, comma));
      const double c0 = detail::parse_number(args.substr(comma + 1));
      auto t = head == "ejs" ? embedded_js_tableau(c2, c0, sp.eps) : embedded_z_tableau(c2, c0, sp.mu, sp.p, sp.eps);
      t.name = std::string(name);
      return t;
    }
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (expected js, z, linear, weno45, ejs:<c2>,<c0> or ez:<c2>,<c0>)");
}

/// Linear schemes for spectral analysis: uw5, uw3-<k>, inner01:<c2>, inner12:<c0>.
[[nodiscard]] inline LinearScheme parse_linear_scheme(std::string_view name) {
  if (name == "uw5") return LinearScheme::uw5();
  if (name.starts_with("uw3-") && name.size() == 5) return LinearScheme::uw3(name[4] - '0');
  if (name.starts_with("inner01:")) return LinearScheme::inner_left(detail::parse_number(name.substr(8)));
  if (name.starts_with("inner12:")) return LinearScheme::inner_right(detail::parse_number(name.substr(8)));
  throw std::invalid_argument("unknown linear scheme '" + std::string(name) +
                              "' (expected uw5, uw3-0, uw3-1, uw3-2, inner01:<c2> or inner12:<c0>)");
}

/// Averages piecewise-constant data from a fine grid onto a coarse one by
/// exact overlap integration.
[[nodiscard]] inline std::vector<double> remap_average(const Grid1D& fine, const std::vector<double>& values,
                                                       const Grid1D& coarse) {
  if (values.size() != fine.size()) throw std::invalid_argument("remap_average: size mismatch");
  std::vector<double> out(coarse.size(), 0.0);
  const double hf = fine.dx();
  for (int j = 0; j < coarse.n(); ++j) {
    const double a = coarse.x_lo() + j * coarse.dx();
    const double b = a + coarse.dx();
    const int first = std::clamp(static_cast<int>(std::floor((a - fine.x_lo()) / hf)), 0, fine.n() - 1);
    const int last = std::clamp(static_cast<int>(std::floor((b - fine.x_lo()) / hf)), 0, fine.n() - 1);
    double sum = 0.0;
    for (int i = first; i <= last; ++i) {
      const double lo = std::max(a, fine.x_lo() + i * hf);
      const double hi = std::min(b, fine.x_lo() + (i + 1) * hf);
      if (hi > lo) sum += (hi - lo) * values[static_cast<std::size_t>(i)];
    }
    out[static_cast<std::size_t>(j)] = sum / coarse.dx();
  }
  return out;
}

enum class ReferenceMode { Auto, On, Off };

/// Result of a time-dependent run, column-major.
struct CaseOutput {
  std::string problem;
  Grid1D grid{0.0, 1.0, 7};
  double t = 0.0;
  int steps = 0;
  double wall_seconds = 0.0;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
  std::vector<std::vector<double>> reference;  // empty when not computed
  ReferenceKind reference_kind = ReferenceKind::None;
};

[[nodiscard]] inline std::string to_string(ReferenceKind k) {
  switch (k) {
    case ReferenceKind::Exact: return "exact";
    case ReferenceKind::RiemannOracle: return "riemann-oracle";
    case ReferenceKind::GodunovFine: return "godunov-fine";
    case ReferenceKind::SelfFine: return "weno-js-fine";
    case ReferenceKind::None: return "none";
  }
  return "unknown";
}

namespace detail {

template <ConservationLaw Law>
std::vector<std::vector<double>> to_columns(const std::vector<typename Law::State>& cells) {
  std::vector<std::vector<double>> cols(Law::components, std::vector<double>(cells.size()));
  for (std::size_t j = 0; j < cells.size(); ++j)
    for (std::size_t c = 0; c < Law::components; ++c) cols[c][j] = cells[j][c];
  return cols;
}

// Exact solution of linear advection: the initial data shifted periodically.
template <std::size_t M>
std::vector<std::vector<double>> advection_reference(const Problem<LinearAdvection<M>>& p, const Grid1D& g,
                                                     double t) {
  const double shift = p.law.velocity * t;
  auto cells = cell_averages<std::array<double, M>>(
      g, [&](double x) { return p.initial(wrap(x - shift, p.x_lo, p.x_hi)); });
  return to_columns<LinearAdvection<M>>(cells);
}

// Exact Riemann solution sampled at cell centres.
inline std::vector<std::vector<double>> riemann_reference(const EulerProblem& p, const Grid1D& g, double t) {
  const auto sol = solve_star(p.riemann->left, p.riemann->right, p.law.gamma);
  std::vector<Euler1D::State> cells(g.size());
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.center(j) - p.riemann->x0;
    const Primitive w = t > 0.0 ? sample(sol, x / t) : (x < 0.0 ? p.riemann->left : p.riemann->right);
    cells[static_cast<std::size_t>(j)] = p.law.to_conserved(w);
  }
  return to_columns<Euler1D>(cells);
}

inline std::vector<std::vector<double>> fine_reference(const EulerProblem& p, const Grid1D& g, double t, int n_fine,
                                                       double cfl) {
  RunResult<Euler1D> fine = [&] {
    if (p.reference == ReferenceKind::GodunovFine) return godunov_reference(p, n_fine, cfl, t);
    RunConfig cfg;
    cfg.n = n_fine;
    cfg.cfl = cfl;
    cfg.t_final = t;
    return run_simulation(p, js_tableau(), cfg);
  }();
  auto cols = to_columns<Euler1D>(fine.snapshot.cells);
  for (auto& col : cols) col = remap_average(fine.snapshot.grid, col, g);
  return cols;
}

}  // namespace detail

/// Runs a time-dependent case. Exact and oracle references are computed
/// unless mode is Off; fine-grid references only when mode is On.
[[nodiscard]] inline CaseOutput run_case(const ProblemCase& c, const ReconstructionTableau& t, const RunConfig& cfg,
                                         ReferenceMode mode = ReferenceMode::Auto,
                                         std::optional<int> reference_n = std::nullopt) {
  return std::visit(
      [&](const auto& p) -> CaseOutput {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, DerivativeCase>) {
          throw std::invalid_argument("'" + c.name + "' is a derivative test; use the convergence command");
        } else {
          using Law = std::decay_t<decltype(p.law)>;
          const auto res = run_simulation(p, t, cfg);
          CaseOutput out;
          out.problem = c.name;
          out.grid = res.snapshot.grid;
          out.t = res.snapshot.t;
          out.steps = res.steps;
          out.wall_seconds = res.wall_seconds;
          out.names = Law::component_names();
          out.columns = detail::to_columns<Law>(res.snapshot.cells);

          const bool cheap = p.reference == ReferenceKind::Exact || p.reference == ReferenceKind::RiemannOracle;
          const bool want = mode == ReferenceMode::On || (mode == ReferenceMode::Auto && cheap);
          if (!want || p.reference == ReferenceKind::None) return out;
          out.reference_kind = p.reference;
          if constexpr (std::is_same_v<Law, Euler1D>) {
            if (p.reference == ReferenceKind::RiemannOracle)
              out.reference = detail::riemann_reference(p, out.grid, out.t);
            else
              out.reference = detail::fine_reference(p, out.grid, out.t, reference_n.value_or(c.reference_n), cfg.cfl);
          } else {
            out.reference = detail::advection_reference(p, out.grid, out.t);
          }
          return out;
        }
      },
      c.problem);
}

/// Run configuration with the case defaults filled in.
[[nodiscard]] inline RunConfig default_config(const ProblemCase& c) {
  RunConfig cfg;
  cfg.n = c.default_n;
  cfg.cfl = c.default_cfl;
  cfg.steps = c.default_steps;
  return cfg;
}

}  // namespace eweno
