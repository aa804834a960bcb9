#pragma once

// Five-point WENO reconstruction: substencil polynomials, smoothness
// indicators, nonlinear weights (linear, JS, Z and the two embedded forms)
// and the WENO differentiation operator built on top of them.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eweno {

using Matrix3 = std::array<std::array<double, 3>, 3>;
using SubstencilMatrix = std::array<std::array<double, 5>, 3>;

/// Five ordered values u_{j-2}, ..., u_{j+2} (cell averages or point values).
struct StencilWindow {
  std::array<double, 5> v{};

  /// Mirror image, used to reconstruct at x_{j-1/2} with the left-biased
  /// tableau.
  [[nodiscard]] constexpr StencilWindow reversed() const noexcept {
    return {{v[4], v[3], v[2], v[1], v[0]}};
  }
};

struct SmoothnessTriple {
  std::array<double, 3> beta{};
  double tau = 0.0;  // |beta[2] - beta[0]|
};

struct WeightVector {
  std::array<double, 3> omega{};
};

/// Weights of the inner scheme. The suffix names the non-smooth substencil:
/// alpha0_2 is the weight of S_0 when S_2 holds the discontinuity.
struct InnerWeights {
  double alpha0_2 = 0.0;
  double alpha1_2 = 0.0;
  double alpha1_0 = 0.0;
  double alpha2_0 = 0.0;

  static constexpr InnerWeights fourth_order() noexcept {
    return {0.25, 0.75, 0.5, 0.5};
  }
  // Superfluous weight moved onto the middle substencil.
  static constexpr InnerWeights third_order() noexcept {
    return {0.1, 0.9, 0.7, 0.3};
  }
};

enum class WeightForm { Linear, JS, Z, EmbeddedForm1, EmbeddedForm2 };

[[nodiscard]] inline std::string to_string(WeightForm f) {
  switch (f) {
    case WeightForm::Linear: return "linear";
    case WeightForm::JS: return "js";
    case WeightForm::Z: return "z";
    case WeightForm::EmbeddedForm1: return "embedded-form1";
    case WeightForm::EmbeddedForm2: return "embedded-form2";
  }
  return "unknown";
}

/// Third-order substencil reconstructions at x_{j+1/2} (rows S_0, S_1, S_2).
inline constexpr SubstencilMatrix kJiangShuMatrix{{
    {2.0 / 6.0, -7.0 / 6.0, 11.0 / 6.0, 0.0, 0.0},
    {0.0, -1.0 / 6.0, 5.0 / 6.0, 2.0 / 6.0, 0.0},
    {0.0, 0.0, 2.0 / 6.0, 5.0 / 6.0, -1.0 / 6.0},
}};

inline constexpr std::array<double, 3> kLinearWeights{0.1, 0.6, 0.3};

/// Everything needed to evaluate one (possibly embedded) five-point scheme:
/// the C | gamma | A tableau plus the weight form and its parameters.
struct ReconstructionTableau {
  SubstencilMatrix C = kJiangShuMatrix;
  std::array<double, 3> gamma = kLinearWeights;
  std::optional<Matrix3> A;
  WeightForm form = WeightForm::JS;
  double p = 2.0;
  double eps = 1e-6;
  double c2 = 1.0;
  double c0 = 1.0;
  double mu = 0.25;
  std::string name = "js";
};

[[nodiscard]] inline ReconstructionTableau linear_tableau() {
  ReconstructionTableau t;
  t.form = WeightForm::Linear;
  t.name = "linear";
  return t;
}

[[nodiscard]] inline ReconstructionTableau js_tableau(double eps = 1e-6, double p = 2.0) {
  ReconstructionTableau t;
  t.form = WeightForm::JS;
  t.eps = eps;
  t.p = p;
  t.name = "js";
  return t;
}

[[nodiscard]] inline ReconstructionTableau z_tableau(double eps = 1e-6, double p = 2.0) {
  ReconstructionTableau t;
  t.form = WeightForm::Z;
  t.eps = eps;
  t.p = p;
  t.name = "z";
  return t;
}

namespace detail {

inline constexpr double kRowTolerance = 1e-12;

// p = 2 is the default everywhere; avoid std::pow on the hot path.
[[nodiscard]] inline double power(double x, double p) noexcept {
  if (p == 2.0) return x * x;
  if (p == 1.0) return x;
  return std::pow(x, p);
}

[[nodiscard]] inline WeightVector normalize(const std::array<double, 3>& w) noexcept {
  const double sum = w[0] + w[1] + w[2];
  return {{w[0] / sum, w[1] / sum, w[2] / sum}};
}

// No checks on A; callers validate.
[[nodiscard]] inline WeightVector embedded_weights(const SmoothnessTriple& b, const std::array<double, 3>& gamma,
                                                   const Matrix3& A, bool second_form, double p,
                                                   double eps) noexcept {
  std::array<double, 3> w{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!second_form) {
      double off = 0.0;
      for (std::size_t l = 0; l < 3; ++l)
        if (l != k) off += A[k][l] * b.beta[l];
      w[k] = gamma[k] * (A[k][k] + off / (b.beta[k] + eps));
    } else {
      const double mix = std::abs(A[k][0] * b.beta[0] + A[k][1] * b.beta[1] + A[k][2] * b.beta[2]);
      w[k] = gamma[k] * (1.0 + power(mix / (b.beta[k] + eps), p));
    }
  }
  return normalize(w);
}

}  // namespace detail

/// Throws std::invalid_argument if A breaks the row conditions of the
/// tableau's form (form 1: rows sum to 1; form 2: rows sum to 0 and
/// a_k0 - a_k1/2 + a_k2 = 0).
inline void check_embedding_matrix(const Matrix3& A, WeightForm form) {
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& r = A[k];
    const double row_sum = r[0] + r[1] + r[2];
    if (form == WeightForm::EmbeddedForm1) {
      if (std::abs(row_sum - 1.0) > detail::kRowTolerance)
        throw std::invalid_argument("embedding matrix row " + std::to_string(k) +
                                    " must sum to 1 for form 1");
    } else if (form == WeightForm::EmbeddedForm2) {
      if (std::abs(row_sum) > detail::kRowTolerance)
        throw std::invalid_argument("embedding matrix row " + std::to_string(k) +
                                    " must sum to 0 for form 2");
      if (std::abs(r[0] - 0.5 * r[1] + r[2]) > detail::kRowTolerance)
        throw std::invalid_argument("embedding matrix row " + std::to_string(k) +
                                    " must satisfy a_k0 - a_k1/2 + a_k2 = 0 for form 2");
    }
  }
}

/// Full consistency check of a tableau; throws std::invalid_argument.
inline void validate(const ReconstructionTableau& t) {
  const double gsum = t.gamma[0] + t.gamma[1] + t.gamma[2];
  if (std::abs(gsum - 1.0) > detail::kRowTolerance)
    throw std::invalid_argument("linear weights must sum to 1");
  for (const auto& row : t.C) {
    double s = 0.0;
    for (double c : row) s += c;
    if (std::abs(s - 1.0) > detail::kRowTolerance)
      throw std::invalid_argument("each row of C must sum to 1");
  }
  if (!(t.p > 0.0)) throw std::invalid_argument("power parameter p must be positive");
  if (!(t.eps >= 0.0)) throw std::invalid_argument("eps must be non-negative");
  if (t.form == WeightForm::EmbeddedForm1 || t.form == WeightForm::EmbeddedForm2) {
    if (!t.A) throw std::invalid_argument("embedded tableau requires an embedding matrix A");
    check_embedding_matrix(*t.A, t.form);
  }
}

/// C v: the three third-order estimates at the right interface.
[[nodiscard]] inline std::array<double, 3> substencil_reconstruct(
    const StencilWindow& w, const ReconstructionTableau& t) noexcept {
  std::array<double, 3> u{};
  for (std::size_t k = 0; k < 3; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < 5; ++i) s += t.C[k][i] * w.v[i];
    u[k] = s;
  }
  return u;
}

/// Jiang-Shu indicators in undivided-difference form.
[[nodiscard]] inline SmoothnessTriple smoothness_indicators(const StencilWindow& w) noexcept {
  const auto& [a, b, c, d, e] = w.v;
  const double d0 = a - 2.0 * b + c;
  const double d1 = b - 2.0 * c + d;
  const double d2 = c - 2.0 * d + e;
  const double f0 = a - 4.0 * b + 3.0 * c;
  const double f1 = b - d;
  const double f2 = 3.0 * c - 4.0 * d + e;
  SmoothnessTriple s;
  s.beta[0] = 13.0 / 12.0 * d0 * d0 + 0.25 * f0 * f0;
  s.beta[1] = 13.0 / 12.0 * d1 * d1 + 0.25 * f1 * f1;
  s.beta[2] = 13.0 / 12.0 * d2 * d2 + 0.25 * f2 * f2;
  s.tau = std::abs(s.beta[2] - s.beta[0]);
  return s;
}

[[nodiscard]] inline WeightVector weights_linear(const ReconstructionTableau& t) noexcept {
  return {t.gamma};
}

[[nodiscard]] inline WeightVector weights_js(const SmoothnessTriple& b,
                                             const ReconstructionTableau& t) noexcept {
  std::array<double, 3> w{};
  for (std::size_t k = 0; k < 3; ++k) w[k] = t.gamma[k] / detail::power(b.beta[k] + t.eps, t.p);
  return detail::normalize(w);
}

[[nodiscard]] inline WeightVector weights_z(const SmoothnessTriple& b,
                                            const ReconstructionTableau& t) noexcept {
  std::array<double, 3> w{};
  for (std::size_t k = 0; k < 3; ++k)
    w[k] = t.gamma[k] * (1.0 + detail::power(b.tau / (b.beta[k] + t.eps), t.p));
  return detail::normalize(w);
}

/// Embedded weights. The outer unnormalized weights are the linear weights
/// for both forms; the correction factor is
///   form 1: a_kk + sum_{l != k} a_kl beta_l / (beta_k + eps)
///   form 2: 1 + (|sum_l a_kl beta_l| / (beta_k + eps))^p
/// Throws std::invalid_argument on a missing or malformed A.
[[nodiscard]] inline WeightVector weights_embedded(const SmoothnessTriple& b,
                                                   const ReconstructionTableau& t) {
  if (!t.A) throw std::invalid_argument("embedded weights require an embedding matrix A");
  if (t.form != WeightForm::EmbeddedForm1 && t.form != WeightForm::EmbeddedForm2)
    throw std::invalid_argument("weights_embedded called with a non-embedded tableau");
  check_embedding_matrix(*t.A, t.form);
  return detail::embedded_weights(b, t.gamma, *t.A, t.form == WeightForm::EmbeddedForm2, t.p, t.eps);
}

[[nodiscard]] inline WeightVector nonlinear_weights(const SmoothnessTriple& b,
                                                    const ReconstructionTableau& t) {
  switch (t.form) {
    case WeightForm::Linear: return weights_linear(t);
    case WeightForm::JS: return weights_js(b, t);
    case WeightForm::Z: return weights_z(b, t);
    case WeightForm::EmbeddedForm1:
    case WeightForm::EmbeddedForm2: return weights_embedded(b, t);
  }
  return weights_linear(t);
}

/// omega^T C v at x_{j+1/2}. Apply to w.reversed() for the right-biased value
/// at x_{j-1/2}.
[[nodiscard]] inline double reconstruct_left_interface(const StencilWindow& w,
                                                       const ReconstructionTableau& t) {
  const auto u = substencil_reconstruct(w, t);
  if (t.form == WeightForm::Linear) return t.gamma[0] * u[0] + t.gamma[1] * u[1] + t.gamma[2] * u[2];
  const auto om = nonlinear_weights(smoothness_indicators(w), t).omega;
  return om[0] * u[0] + om[1] * u[1] + om[2] * u[2];
}

/// Three exact values on each side of the sample array, ordered left to right.
struct GhostValues {
  std::array<double, 3> left{};
  std::array<double, 3> right{};
};

/// WENO differentiation: D u_j = (u_{j+1/2} - u_{j-1/2}) / dx with left-biased
/// reconstructions of the point values themselves.
[[nodiscard]] inline std::vector<double> weno_derivative(std::span<const double> samples,
                                                         const ReconstructionTableau& t,
                                                         double dx, const GhostValues& ghost) {
  const std::size_t n = samples.size();
  if (n < 5) throw std::invalid_argument("weno_derivative needs at least 5 samples");
  if (!(dx > 0.0)) throw std::invalid_argument("weno_derivative needs dx > 0");

  std::vector<double> ext(n + 6);
  std::copy(ghost.left.begin(), ghost.left.end(), ext.begin());
  std::copy(samples.begin(), samples.end(), ext.begin() + 3);
  std::copy(ghost.right.begin(), ghost.right.end(), ext.begin() + 3 + static_cast<std::ptrdiff_t>(n));

  // face[i] is the value at the right edge of extended cell i + 2.
  std::vector<double> face(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const StencilWindow w{{ext[i], ext[i + 1], ext[i + 2], ext[i + 3], ext[i + 4]}};
    face[i] = reconstruct_left_interface(w, t);
  }
  std::vector<double> du(n);
  for (std::size_t j = 0; j < n; ++j) du[j] = (face[j + 1] - face[j]) / dx;
  return du;
}

}  // namespace eweno
