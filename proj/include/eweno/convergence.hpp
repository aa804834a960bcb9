#pragma once

// Error norms and grid-convergence studies for WENO differentiation.

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eweno/weno.hpp"

namespace eweno {

/// sum_j |a_j - b_j| dx.
[[nodiscard]] inline double l1_error(std::span<const double> numeric, std::span<const double> reference, double dx) {
  if (numeric.size() != reference.size())
    throw std::invalid_argument("l1_error: grid mismatch (" + std::to_string(numeric.size()) + " vs " +
                                std::to_string(reference.size()) + " values)");
  double sum = 0.0;
  for (std::size_t j = 0; j < numeric.size(); ++j) sum += std::abs(numeric[j] - reference[j]);
  return sum * dx;
}

/// Smooth function with known derivative, sampled at N equispaced nodes
/// x_j = x_lo + j (x_hi - x_lo) / (N - 1).
struct DerivativeCase {
  std::string name;
  std::function<double(double)> u;
  std::function<double(double)> du;
  double x_lo = -1.0;
  double x_hi = 1.0;
};

[[nodiscard]] inline DerivativeCase tanh_case() {
  return {"tanh-deriv", [](double x) { return std::tanh(10.0 * x); },
          [](double x) {
            const double s = 1.0 / std::cosh(10.0 * x);
            return 10.0 * s * s;
          },
          -1.0, 1.0};
}

/// u = sin(pi x - sin(pi x) / pi); u' vanishes where cos(pi x) = 0 (first
/// order critical points).
[[nodiscard]] inline DerivativeCase sin_critical_case() {
  using std::numbers::pi;
  return {"sin-crit-deriv", [](double x) { return std::sin(pi * x - std::sin(pi * x) / pi); },
          [](double x) { return std::cos(pi * x - std::sin(pi * x) / pi) * (pi - std::cos(pi * x)); }, -1.0, 1.0};
}

struct ConvergenceRow {
  int n = 0;
  double error = 0.0;
  double order = 0.0;  // 0 on the first row
};

struct ConvergenceTable {
  std::string case_name;
  std::string scheme;
  std::vector<ConvergenceRow> rows;
};

/// Domain-averaged error (1 / L) sum_j |D u_j - u'(x_j)| dx, where L is the
/// domain length, for the WENO derivative with exact ghost values.
[[nodiscard]] inline double derivative_error(const DerivativeCase& c, const ReconstructionTableau& t, int n) {
  if (n < 5) throw std::invalid_argument("derivative test needs at least 5 nodes");
  const double length = c.x_hi - c.x_lo;
  const double dx = length / (n - 1);
  auto node = [&](int j) { return c.x_lo + j * dx; };

  std::vector<double> u(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) u[static_cast<std::size_t>(j)] = c.u(node(j));
  GhostValues g;
  for (int k = 0; k < 3; ++k) {
    g.left[static_cast<std::size_t>(k)] = c.u(node(k - 3));
    g.right[static_cast<std::size_t>(k)] = c.u(node(n + k));
  }
  const auto du = weno_derivative(u, t, dx, g);
  std::vector<double> exact(du.size());
  for (int j = 0; j < n; ++j) exact[static_cast<std::size_t>(j)] = c.du(node(j));
  return l1_error(du, exact, dx) / length;
}

/// order_k = log2(e_{k-1} / e_k); ns must halve the spacing row to row.
[[nodiscard]] inline ConvergenceTable convergence_study(const DerivativeCase& c, const ReconstructionTableau& t,
                                                        const std::vector<int>& ns) {
  if (ns.empty()) throw std::invalid_argument("convergence study needs at least one grid");
  for (std::size_t k = 1; k < ns.size(); ++k)
    if (ns[k] - 1 != 2 * (ns[k - 1] - 1))
      throw std::invalid_argument("grid spacing must halve between consecutive rows");
  ConvergenceTable table{c.name, t.name, {}};
  for (int n : ns) {
    ConvergenceRow row{n, derivative_error(c, t, n), 0.0};
    if (!table.rows.empty()) row.order = std::log2(table.rows.back().error / row.error);
    table.rows.push_back(row);
  }
  return table;
}

inline const std::vector<int>& default_convergence_grids() {
  static const std::vector<int> ns{101, 201, 401, 801, 1601};
  return ns;
}

}  // namespace eweno
