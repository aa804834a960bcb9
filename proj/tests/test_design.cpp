#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eweno/design.hpp"

using namespace eweno;

namespace {

EmbeddingSpec form1(double c2, double c0) { return {c2, c0, EmbeddingForm::Form1, 1.0, 0.25, std::nullopt}; }
EmbeddingSpec form2(double c2, double c0, double p = 2.0, double mu = 0.25) {
  return {c2, c0, EmbeddingForm::Form2, p, mu, std::nullopt};
}

void expect_matrix(const Matrix3& a, const Matrix3& b, double tol) {
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) EXPECT_NEAR(a[k][l], b[k][l], tol) << "entry " << k << l;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Proportions, InnerSchemeColumns) {
  auto [c2, c0] = proportions_from_inner(InnerWeights::fourth_order());
  EXPECT_NEAR(c2, 2.0, 1e-14);
  EXPECT_NEAR(c0, 2.0, 1e-14);
  std::tie(c2, c0) = proportions_from_inner(InnerWeights::third_order());
  EXPECT_NEAR(c2, 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(c0, 6.0 / 7.0, 1e-14);
}

TEST(Proportions, LinearProportionalInnerGivesOne) {
  const auto g = kLinearWeights;
  const InnerWeights in{g[0] / (g[0] + g[1]), g[1] / (g[0] + g[1]), g[1] / (g[1] + g[2]), g[2] / (g[1] + g[2])};
  const auto [c2, c0] = proportions_from_inner(in);
  EXPECT_NEAR(c2, 1.0, 1e-14);
  EXPECT_NEAR(c0, 1.0, 1e-14);
}

TEST(Proportions, RoundTrip) {
  for (double c2 : {0.3, 1.0, 2.5})
    for (double c0 : {0.5, 6.0 / 7.0, 2.0}) {
      const auto [a, b] = proportions_from_inner(inner_from_proportions(c2, c0));
      EXPECT_NEAR(a, c2, 1e-13);
      EXPECT_NEAR(b, c0, 1e-13);
    }
}

TEST(Form1, DefaultsForFourthOrderInner) {
  expect_matrix(design_form1(form1(2.0, 2.0)),
                {{{1.0 / 3.0, 0.0, 2.0 / 3.0}, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, {2.0 / 3.0, 0.0, 1.0 / 3.0}}}, 1e-15);
}

TEST(Form1, DefaultsForThirdOrderInner) {
  expect_matrix(design_form1(form1(2.0 / 3.0, 6.0 / 7.0)),
                {{{7.0 / 9.0, 0.0, 2.0 / 9.0}, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, {2.0 / 7.0, 0.0, 5.0 / 7.0}}}, 1e-15);
}

TEST(Form1, FamilyRelationsHoldForRandomParameters) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> C(0.05, 2.95);
  std::uniform_real_distribution<double> F(-0.5, 0.5);
  for (int i = 0; i < 200; ++i) {
    auto spec = form1(C(rng), C(rng));
    const std::array<double, 4> free{F(rng), F(rng), F(rng), F(rng)};
    spec.free = free;
    const auto A = design_form1(spec);
    const auto [a01, a02, a20, a21] = free;
    EXPECT_NEAR(A[0][0], 1.0 - a01 - a02, 1e-14);
    EXPECT_NEAR(A[1][1], 1.0 - a20 / spec.c0 - a02 / spec.c2, 1e-14);
    EXPECT_NEAR(A[2][2], 1.0 - a20 - a21, 1e-14);
    EXPECT_NEAR(A[1][2], a02 / spec.c2, 1e-14);
    EXPECT_NEAR(A[1][0], a20 / spec.c0, 1e-14);
    for (const auto& row : A) EXPECT_NEAR(row[0] + row[1] + row[2], 1.0, 1e-14);
  }
}

TEST(Form1, RejectsNonConvexProportions) {
  EXPECT_THROW((void)design_form1(form1(3.0, 1.0)), std::invalid_argument);
  EXPECT_THROW((void)design_form1(form1(1.0, 0.0)), std::invalid_argument);
  EXPECT_THROW((void)design_form1(form2(1.0, 1.0)), std::invalid_argument);
}

TEST(Form2, PrintedTableau) {
  const double h = std::sqrt(2.0) / 2.0;
  expect_matrix(design_form2(form2(2.0, 2.0)), {{{h, 0.0, -h}, {0.5, 0.0, -0.5}, {h, 0.0, -h}}}, 1e-15);
}

TEST(Form2, UnitProportionsReduceToZ) {
  const auto A = design_form2(form2(1.0, 1.0, 2.0, 1.0));
  expect_matrix(A, {{{1.0, 0.0, -1.0}, {1.0, 0.0, -1.0}, {1.0, 0.0, -1.0}}}, 1e-15);
  ReconstructionTableau t = embedded_z_tableau(1.0, 1.0, 1.0, 2.0);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> U(0.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    SmoothnessTriple b{{U(rng), U(rng), U(rng)}, 0.0};
    b.tau = std::abs(b.beta[2] - b.beta[0]);
    const auto we = weights_embedded(b, t).omega;
    const auto wz = weights_z(b, z_tableau(t.eps, 2.0)).omega;
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(we[k], wz[k], 1e-14);
  }
}

TEST(Form2, MatchesClosedFormCorrections) {
  // gamma_k (1 + mu c_k (tau / (beta_k + eps))^p) with c = (c2, 1, c0).
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> U(-6.0, 1.0);
  for (double p : {1.0, 2.0, 3.0}) {
    const double c2 = 2.0 / 3.0;
    const double c0 = 2.0;
    const double mu = 0.25;
    const auto t = embedded_z_tableau(c2, c0, mu, p);
    for (int i = 0; i < 200; ++i) {
      SmoothnessTriple b{{std::pow(10.0, U(rng)), std::pow(10.0, U(rng)), std::pow(10.0, U(rng))}, 0.0};
      b.tau = std::abs(b.beta[2] - b.beta[0]);
      const std::array<double, 3> c{c2, 1.0, c0};
      std::array<double, 3> w{};
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) {
        w[k] = kLinearWeights[k] * (1.0 + mu * c[k] * std::pow(b.tau / (b.beta[k] + t.eps), p));
        s += w[k];
      }
      const auto got = weights_embedded(b, t).omega;
      for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(got[k], w[k] / s, 1e-14);
    }
  }
}

TEST(Form2, RatiosHoldForAnySpec) {
  for (double p : {1.0, 2.0, 4.0})
    for (double c : {0.4, 1.0, 2.0}) {
      const auto A = design_form2(form2(c, 3.0 * c, p, 0.7));
      EXPECT_NEAR(A[0][2] / A[1][2], std::pow(c, 1.0 / p), 1e-14);
      EXPECT_NEAR(A[2][0] / A[1][0], std::pow(3.0 * c, 1.0 / p), 1e-14);
    }
}

TEST(Form2, RejectsInvalidParameters) {
  EXPECT_THROW((void)design_form2(form2(1.0, 1.0, 2.0, 0.0)), std::invalid_argument);
  EXPECT_THROW((void)design_form2(form2(1.0, 1.0, 0.5, 0.25)), std::invalid_argument);
  EXPECT_THROW((void)design_form2(form2(-1.0, 1.0)), std::invalid_argument);
}

TEST(Verify, BothFormsBothInnerColumns) {
  for (const auto& in : {InnerWeights::fourth_order(), InnerWeights::third_order()}) {
    const auto [c2, c0] = proportions_from_inner(in);
    for (const auto& spec : {form1(c2, c0), form2(c2, c0)}) {
      const auto rep = verify_embedding(design(spec), spec);
      EXPECT_TRUE(rep.ok());
      EXPECT_LT(rep.limit_errors[0], 1e-6);
      EXPECT_LT(rep.limit_errors[1], 1e-6);
    }
  }
}

TEST(Verify, IdentityIsConsistentButNotEmbedding) {
  const Matrix3 I{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
  const auto rep = verify_embedding(I, form1(2.0, 2.0));
  EXPECT_TRUE(rep.consistency_ok);
  EXPECT_FALSE(rep.embedding_ok);
}

TEST(Verify, BadRowSumFailsConsistency) {
  auto A = design_form1(form1(2.0, 2.0));
  A[1][1] -= 0.1;
  const auto rep = verify_embedding(A, form1(2.0, 2.0));
  EXPECT_FALSE(rep.consistency_ok);
  EXPECT_FALSE(rep.messages.empty());
}

TEST(Verify, AnySingleEntryPerturbationFails) {
  for (const auto& spec : {form1(2.0, 2.0), form1(2.0 / 3.0, 6.0 / 7.0), form2(2.0, 2.0), form2(2.0 / 3.0, 6.0 / 7.0)}) {
    const auto A = design(spec);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t l = 0; l < 3; ++l) {
        auto B = A;
        B[k][l] += 0.1;
        EXPECT_FALSE(verify_embedding(B, spec).ok()) << "entry " << k << l;
      }
  }
}

TEST(Verify, LimitWeightsRecoverProportions) {
  for (const auto& spec : {form1(2.0 / 3.0, 6.0 / 7.0), form2(2.0 / 3.0, 2.0)}) {
    const auto A = design(spec);
    const bool second = spec.form == EmbeddingForm::Form2;
    const double p = second ? spec.p : 1.0;
    const auto w2 = detail::embedded_weights({{1.0, 1.0, 1e12}, 1e12 - 1.0}, kLinearWeights, A, second, p, 0.0).omega;
    const auto w0 = detail::embedded_weights({{1e12, 1.0, 1.0}, 1e12 - 1.0}, kLinearWeights, A, second, p, 0.0).omega;
    const InnerWeights implied{w2[0] / (w2[0] + w2[1]), w2[1] / (w2[0] + w2[1]), w0[1] / (w0[1] + w0[2]),
                               w0[2] / (w0[1] + w0[2])};
    const auto [c2, c0] = proportions_from_inner(implied);
    EXPECT_NEAR(c2, spec.c2, 1e-6);
    EXPECT_NEAR(c0, spec.c0, 1e-6);
  }
}

TEST(Fractions, SmallDenominators) {
  EXPECT_EQ(to_fraction(2.0 / 3.0), (std::pair<long, long>{2, 3}));
  EXPECT_EQ(to_fraction(-0.5), (std::pair<long, long>{-1, 2}));
  EXPECT_EQ(to_fraction(3.0), (std::pair<long, long>{3, 1}));
  EXPECT_FALSE(to_fraction(std::sqrt(2.0)).has_value());
}

TEST(Emit, JiangShuTableau) {
  const auto l = lines(emit_tableau(js_tableau()));
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "   2/6  -7/6  11/6             |  1/10");
  EXPECT_EQ(l[1], "        -1/6   5/6   2/6       |  6/10");
  EXPECT_EQ(l[2], "               2/6   5/6  -1/6 |  3/10");
}

TEST(Emit, Weno45ShowsEmbeddingMatrix) {
  const auto l = lines(emit_tableau(embedded_js_tableau(2.0, 2.0)));
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "   2/6  -7/6  11/6             |  1/10 | 1/3   0 2/3");
  EXPECT_EQ(l[1], "        -1/6   5/6   2/6       |  6/10 | 1/3 1/3 1/3");
  EXPECT_EQ(l[2], "               2/6   5/6  -1/6 |  3/10 | 2/3   0 1/3");
}

TEST(Emit, FormTwoShowsSquareRoots) {
  const auto l = lines(emit_tableau(embedded_z_tableau(2.0, 2.0)));
  ASSERT_EQ(l.size(), 3u);
  EXPECT_NE(l[0].find("sqrt(2)/2"), std::string::npos);
  EXPECT_NE(l[0].find("-sqrt(2)/2"), std::string::npos);
  EXPECT_NE(l[1].find("1/2"), std::string::npos);
}

TEST(Emit, LinearTableauHasTwoBlocks) {
  const auto text = emit_tableau(linear_tableau());
  for (const auto& line : lines(text)) EXPECT_EQ(line.find(" | ", line.find(" | ") + 1), std::string::npos);
}
