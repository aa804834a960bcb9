#pragma once

// Construction and verification of embedding matrices A for the two general
// forms, and plain-text rendering of C | gamma | A tableaux.

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eweno/weno.hpp"

namespace eweno {

enum class EmbeddingForm { Form1, Form2 };

struct EmbeddingSpec {
  double c2 = 2.0;
  double c0 = 2.0;
  EmbeddingForm form = EmbeddingForm::Form1;
  double p = 2.0;
  double mu = 0.25;
  // Form-1 free parameters (a01, a02, a20, a21). Unset means the all-round
  // choice a01 = a21 = 0, a02 = c2/3, a20 = c0/3.
  std::optional<std::array<double, 4>> free;
};

struct VerificationReport {
  bool consistency_ok = false;
  bool embedding_ok = false;
  std::array<double, 2> limit_errors{};  // {S_2 discontinuous, S_0 discontinuous}
  std::vector<std::string> messages;

  [[nodiscard]] bool ok() const noexcept { return consistency_ok && embedding_ok; }
};

/// Relative proportions (c2, c0) of an inner scheme against the linear weights.
[[nodiscard]] inline std::pair<double, double> proportions_from_inner(
    const InnerWeights& in, const std::array<double, 3>& gamma = kLinearWeights) {
  const double c2 = (in.alpha0_2 / in.alpha1_2) * (gamma[1] / gamma[0]);
  const double c0 = (in.alpha2_0 / in.alpha1_0) * (gamma[1] / gamma[2]);
  return {c2, c0};
}

/// Inverse of proportions_from_inner.
[[nodiscard]] inline InnerWeights inner_from_proportions(
    double c2, double c0, const std::array<double, 3>& gamma = kLinearWeights) {
  const double left = c2 * gamma[0] + gamma[1];
  const double right = gamma[1] + c0 * gamma[2];
  return {c2 * gamma[0] / left, gamma[1] / left, gamma[1] / right, c0 * gamma[2] / right};
}

[[nodiscard]] inline Matrix3 design_form1(const EmbeddingSpec& spec) {
  if (spec.form != EmbeddingForm::Form1) throw std::invalid_argument("design_form1 needs a form-1 spec");
  const double c2 = spec.c2;
  const double c0 = spec.c0;
  if (!(c2 > 0.0 && c2 < 3.0) || !(c0 > 0.0 && c0 < 3.0))
    throw std::invalid_argument("form 1 needs c2 and c0 in (0, 3) for convex weights");

  const auto [a01, a02, a20, a21] = spec.free.value_or(std::array<double, 4>{0.0, c2 / 3.0, c0 / 3.0, 0.0});
  Matrix3 A{};
  A[0] = {1.0 - a01 - a02, a01, a02};
  A[1] = {a20 / c0, 1.0 - a20 / c0 - a02 / c2, a02 / c2};
  A[2] = {a20, a21, 1.0 - a20 - a21};
  return A;
}

/// Rows (s_k, 0, -s_k) with s_1 = mu^(1/p), s_0 = c2^(1/p) s_1, s_2 = c0^(1/p) s_1.
/// Row signs are fixed positive.
[[nodiscard]] inline Matrix3 design_form2(const EmbeddingSpec& spec) {
  if (spec.form != EmbeddingForm::Form2) throw std::invalid_argument("design_form2 needs a form-2 spec");
  if (!(spec.mu > 0.0)) throw std::invalid_argument("form 2 needs mu > 0");
  if (!(spec.p >= 1.0)) throw std::invalid_argument("form 2 needs p >= 1");
  if (!(spec.c2 > 0.0) || !(spec.c0 > 0.0)) throw std::invalid_argument("form 2 needs c2, c0 > 0");
  const double inv_p = 1.0 / spec.p;
  const double s1 = std::pow(spec.mu, inv_p);
  const double s0 = std::pow(spec.c2, inv_p) * s1;
  const double s2 = std::pow(spec.c0, inv_p) * s1;
  return Matrix3{{{s0, 0.0, -s0}, {s1, 0.0, -s1}, {s2, 0.0, -s2}}};
}

[[nodiscard]] inline Matrix3 design(const EmbeddingSpec& spec) {
  return spec.form == EmbeddingForm::Form1 ? design_form1(spec) : design_form2(spec);
}

/// WENO-JS(c2, c0): form 1 with the all-round free parameters.
[[nodiscard]] inline ReconstructionTableau embedded_js_tableau(double c2, double c0, double eps = 1e-6) {
  ReconstructionTableau t;
  t.form = WeightForm::EmbeddedForm1;
  t.c2 = c2;
  t.c0 = c0;
  t.eps = eps;
  t.A = design_form1({c2, c0, EmbeddingForm::Form1, 1.0, 0.25, std::nullopt});
  t.name = "ejs";
  return t;
}

/// WENO-Z(c2, c0): form 2, default mu = 1/4.
[[nodiscard]] inline ReconstructionTableau embedded_z_tableau(double c2, double c0, double mu = 0.25,
                                                              double p = 2.0, double eps = 1e-6) {
  ReconstructionTableau t;
  t.form = WeightForm::EmbeddedForm2;
  t.c2 = c2;
  t.c0 = c0;
  t.mu = mu;
  t.p = p;
  t.eps = eps;
  t.A = design_form2({c2, c0, EmbeddingForm::Form2, p, mu, std::nullopt});
  t.name = "ez";
  return t;
}

namespace detail {

inline SmoothnessTriple make_triple(double b0, double b1, double b2) {
  return {{b0, b1, b2}, std::abs(b2 - b0)};
}

}  // namespace detail

/// Checks the algebraic row conditions, the embedding ratio conditions, and
/// the numerical limit at beta contrast 1e12. Never throws; failures are
/// reported in the messages.
[[nodiscard]] inline VerificationReport verify_embedding(const Matrix3& A, const EmbeddingSpec& spec) {
  constexpr double kTol = 1e-12;
  constexpr double kContrast = 1e12;
  constexpr double kLimitTol = 1e-6;

  VerificationReport rep;
  rep.consistency_ok = true;
  for (std::size_t k = 0; k < 3; ++k) {
    const double s = A[k][0] + A[k][1] + A[k][2];
    if (spec.form == EmbeddingForm::Form1) {
      if (std::abs(s - 1.0) > kTol) {
        rep.consistency_ok = false;
        rep.messages.push_back("row " + std::to_string(k) + " sums to " + std::to_string(s) + ", expected 1");
      }
    } else {
      if (std::abs(s) > kTol) {
        rep.consistency_ok = false;
        rep.messages.push_back("row " + std::to_string(k) + " sums to " + std::to_string(s) + ", expected 0");
      }
      const double fourth = A[k][0] - 0.5 * A[k][1] + A[k][2];
      if (std::abs(fourth) > kTol) {
        rep.consistency_ok = false;
        rep.messages.push_back("row " + std::to_string(k) + " leaves a fourth-order residual " +
                               std::to_string(fourth));
      }
    }
  }

  // a02 / a12 = c2^(1/p), a20 / a10 = c0^(1/p); p = 1 for form 1.
  const double p_ratio = spec.form == EmbeddingForm::Form1 ? 1.0 : spec.p;
  const double r2 = std::pow(spec.c2, 1.0 / p_ratio);
  const double r0 = std::pow(spec.c0, 1.0 / p_ratio);
  bool ratios_ok = true;
  if (A[1][2] == 0.0 || std::abs(A[0][2] - r2 * A[1][2]) > kTol * std::max(1.0, std::abs(A[0][2]))) {
    ratios_ok = false;
    rep.messages.push_back("a02 / a12 does not equal c2^(1/p)");
  }
  if (A[1][0] == 0.0 || std::abs(A[2][0] - r0 * A[1][0]) > kTol * std::max(1.0, std::abs(A[2][0]))) {
    ratios_ok = false;
    rep.messages.push_back("a20 / a10 does not equal c0^(1/p)");
  }

  const InnerWeights inner = inner_from_proportions(spec.c2, spec.c0);
  const bool second = spec.form == EmbeddingForm::Form2;
  const auto w2 = detail::embedded_weights(detail::make_triple(1.0, 1.0, kContrast), kLinearWeights, A, second,
                                           p_ratio, 0.0)
                      .omega;
  const auto w0 = detail::embedded_weights(detail::make_triple(kContrast, 1.0, 1.0), kLinearWeights, A, second,
                                           p_ratio, 0.0)
                      .omega;
  rep.limit_errors[0] = std::abs(w2[0] - inner.alpha0_2) + std::abs(w2[1] - inner.alpha1_2) + std::abs(w2[2]);
  rep.limit_errors[1] = std::abs(w0[0]) + std::abs(w0[1] - inner.alpha1_0) + std::abs(w0[2] - inner.alpha2_0);
  const bool limits_ok = rep.limit_errors[0] < kLimitTol && rep.limit_errors[1] < kLimitTol;
  if (!limits_ok)
    rep.messages.push_back("limit weights miss the inner scheme (errors " + std::to_string(rep.limit_errors[0]) +
                           ", " + std::to_string(rep.limit_errors[1]) + ")");

  rep.embedding_ok = ratios_ok && limits_ok;
  return rep;
}

/// Small-denominator rational approximation of x, if one exists within tol.
[[nodiscard]] inline std::optional<std::pair<long, long>> to_fraction(double x, long max_den = 64,
                                                                      double tol = 1e-12) {
  for (long d = 1; d <= max_den; ++d) {
    const double n = std::round(x * d);
    if (std::abs(x * d - n) <= tol * d) return std::pair<long, long>{static_cast<long>(n), d};
  }
  return std::nullopt;
}

namespace detail {

// Renders x as n/den when x * den is an integer, otherwise as a reduced
// fraction or a decimal. den = 0 means "reduce".
inline std::string format_entry(double x, long den) {
  if (den > 0) {
    const double n = std::round(x * static_cast<double>(den));
    if (std::abs(x * static_cast<double>(den) - n) <= 1e-12 * static_cast<double>(den))
      return std::to_string(static_cast<long>(n)) + "/" + std::to_string(den);
  }
  if (auto f = to_fraction(x)) {
    if (f->second == 1) return std::to_string(f->first);
    return std::to_string(f->first) + "/" + std::to_string(f->second);
  }
  // Square roots of rationals, e.g. sqrt(2)/2 = sqrt(n d)/d for x^2 = n/d.
  if (auto f = to_fraction(x * x, 64, 1e-10)) {
    const std::string sign = x < 0.0 ? "-" : "";
    const std::string root = "sqrt(" + std::to_string(f->first * f->second) + ")";
    return f->second == 1 ? sign + root : sign + root + "/" + std::to_string(f->second);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8g", x);
  return buf;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace detail

/// C | gamma [| A] layout, one substencil per line. C entries are shown over
/// 6 and gamma over 10 as in the usual five-point tableau; blank C cells are
/// structural zeros.
[[nodiscard]] inline std::string emit_tableau(const ReconstructionTableau& t) {
  std::vector<std::array<std::string, 3>> a_cells;
  std::size_t a_width = 0;
  if (t.A) {
    for (const auto& row : *t.A) {
      std::array<std::string, 3> cells;
      for (std::size_t l = 0; l < 3; ++l) {
        cells[l] = detail::format_entry(row[l], 0);
        a_width = std::max(a_width, cells[l].size());
      }
      a_cells.push_back(cells);
    }
  }

  std::ostringstream os;
  for (std::size_t k = 0; k < 3; ++k) {
    std::string line;
    for (std::size_t i = 0; i < 5; ++i) {
      const std::string cell = t.C[k][i] == 0.0 ? "" : detail::format_entry(t.C[k][i], 6);
      line += detail::pad_left(cell, 6);
    }
    line += " | " + detail::pad_left(detail::format_entry(t.gamma[k], 10), 5);
    if (t.A) {
      line += " |";
      for (const auto& cell : a_cells[k]) line += " " + detail::pad_left(cell, a_width);
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace eweno
