#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "igm/design_gram.hpp"
#include "igm/error.hpp"
#include "igm/linalg.hpp"
#include "igm/methods.hpp"
#include "igm/rng.hpp"
#include "igm/simulation.hpp"
#include "oracles.hpp"

namespace igm {
namespace {

const std::vector<double> kA1Weights{0.533, 0.267, 0.133, 0.067};
const std::vector<double> kA2Weights{0.415, 0.094, 0.035, 0.112, 0.219, 0.125};

void expect_rounded(const PriorityVector& w, const std::vector<double>& expected, int places = 3) {
  ASSERT_EQ(w.size(), expected.size());
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(test::round_dp(w[i], places), expected[i]) << "i=" << i;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

PriorityVector random_weights(Engine& eng, std::size_t n) {
  std::vector<double> w(n);
  for (auto& v : w) v = uniform_real(eng, 0.05, 1.0);
  return PriorityVector::normalize(w);
}

TEST(Pigm, Examples) {
  expect_rounded(pigm(test::a1()).weights, kA1Weights);
  expect_rounded(pigm(test::a2()).weights, kA2Weights);
  const auto ones = pigm(validate_prm(Matrix(7, 7, 1.0)));
  for (double w : ones.weights.weights()) EXPECT_NEAR(w, 1.0 / 7, 1e-15);
  EXPECT_EQ(pigm(test::a1()).label(), "PIGM");
}

TEST(Pigm, A2AgainstExtendedPrecisionOracle) {
  const auto w = pigm(test::a2()).weights;
  const auto ref = test::oracle_weights(test::a2());
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(w[i], ref[i], 1e-14);
  EXPECT_NEAR(ref[0], 0.41503307, 5e-9);
}

TEST(Nigm, ShiftFiveOnA1) {
  const auto inv = invert(shifted_gram(test::a1(), 5).entries());
  const auto v = row_sums(inv);
  const std::vector<double> expected{0.1067, 0.0533, 0.0267, 0.0133};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(test::round_dp(v[i], 4), expected[i]);
  EXPECT_NEAR(std::accumulate(v.begin(), v.end(), 0.0), 0.2, 1e-12);
  const auto res = nigm(test::a1(), 5);
  expect_rounded(res.weights, kA1Weights);
  EXPECT_EQ(res.label(), "NIGM(5)");
  expect_rounded(nigm(test::a1(), 1).weights, kA1Weights);
}

TEST(Nigm, ZeroShiftOnInconsistentA2) {
  const auto v = row_sums(invert(reduced_gram(test::a2()).entries()));
  const std::vector<double> expected{0.655, 0.148, 0.055, 0.177, 0.346, 0.198};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(test::round_dp(v[i], 3), expected[i]);
  const auto ref = test::gauss_jordan_inverse(test::big_gram(test::a2(), false));
  const auto ref_sums = test::to_double(test::big_row_sums(ref));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(v[i], ref_sums[i], 1e-12);
  expect_rounded(nigm(test::a2(), 0).weights, kA2Weights);
}

TEST(Nigm, ZeroShiftOnConsistentFailsFast) {
  EXPECT_EQ(code_of([] { nigm(test::a1(), 0); }), ErrorCode::ZeroShiftOnConsistent);
}

TEST(Ligm, A1) {
  const auto res = ligm(test::a1(), 0);
  expect_rounded(res.weights, kA1Weights);
  ASSERT_TRUE(res.multiplier());
  EXPECT_NEAR(*res.multiplier(), 0.0, 1e-12);
  EXPECT_EQ(res.label(), "LIGM(0)");
}

TEST(Ligm, A2WithUnitShift) {
  const auto res = ligm(test::a2(), 1);
  expect_rounded(res.weights, kA2Weights);
  EXPECT_EQ(test::round_dp(*res.multiplier(), 3), -1.633);
  // The multiplier of the unshifted system is -(minimum objective).
  EXPECT_NEAR(res.kkt_multiplier(), test::oracle_multiplier(test::a2()), 1e-12);
  EXPECT_NEAR(res.kkt_multiplier(), -wls_objective(test::a2(), res.weights), 1e-12);
}

TEST(Ligm, ShiftChangesOnlyTheMultiplier) {
  const auto r0 = ligm(test::a2(), 0);
  const auto r7 = ligm(test::a2(), 7);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(r0.weights[i], r7.weights[i], 1e-14);
  EXPECT_NEAR(*r0.multiplier() - *r7.multiplier(), 7.0, 1e-12);
  EXPECT_NEAR(r0.kkt_multiplier(), r7.kkt_multiplier(), 1e-12);
  EXPECT_THROW(pigm(test::a2()).kkt_multiplier(), Error);
}

TEST(Blankmeyer, Examples) {
  expect_rounded(blankmeyer(test::a2()).weights, kA2Weights);
  try {
    blankmeyer(test::a1());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
    EXPECT_NE(std::string(e.what()).find("consistent"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { blankmeyer(ideal_prm(PriorityVector({0.5, 0.3, 0.2}))); }), ErrorCode::SingularMatrix);
}

TEST(MethodProperties, FourWayEquivalenceAtEightPlaces) {
  Engine eng(2001);
  const auto scale = JudgmentScale::saaty(9);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 3 + uniform_index(eng, 13);
    const auto prm = random_prm(n, scale, eng());
    double r = 0.0;
    while (std::fabs(r) < 1e-6) r = uniform_real(eng, -1000.0, 1000.0);
    const auto ref = pigm(prm).weights;
    const double d = rounded_discrepancy(ref, {nigm(prm, r).weights, ligm(prm, 0).weights, ligm(prm, r).weights}, 8);
    ASSERT_EQ(d, 0.0) << "n=" << n << " r=" << r;
  }
}

TEST(MethodProperties, MatchExtendedPrecisionOracle) {
  Engine eng(2002);
  const auto scale = JudgmentScale::saaty(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + uniform_index(eng, 13);
    const auto prm = random_prm(n, scale, eng());
    const auto ref = test::oracle_weights(prm);
    for (const auto& w : {pigm(prm).weights, nigm(prm, 3.5).weights, ligm(prm, 0).weights}) {
      for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(w[i], ref[i], 1e-11);
    }
    ASSERT_NEAR(ligm(prm, 0).kkt_multiplier(), test::oracle_multiplier(prm), 1e-9 * std::max(1.0, std::fabs(test::oracle_multiplier(prm))));
  }
}

TEST(MethodProperties, PseudoInverseLastColumn) {
  Engine eng(2003);
  const auto scale = JudgmentScale::saaty(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + uniform_index(eng, 13);
    const auto prm = random_prm(n, scale, eng());
    const auto d = build_design_matrix(prm).full();
    const Matrix ginv = invert(gram_elementwise(prm).entries());
    const Matrix pinv = multiply(ginv, transpose(d));
    const auto v = row_sums(ginv);
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(pinv(i, pinv.cols() - 1), v[i], 1e-10);
  }
}

TEST(MethodProperties, ConsistentRecovery) {
  Engine eng(2004);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + uniform_index(eng, 14);
    const auto w = random_weights(eng, n);
    const auto prm = ideal_prm(w);
    const double r = uniform_real(eng, 0.5, 1000.0) * (uniform_index(eng, 2) ? 1 : -1);
    for (const auto& res : {pigm(prm), nigm(prm, r), ligm(prm, 0), ligm(prm, r)}) {
      for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(res.weights[i], w[i], 1e-8) << res.label();
    }
    ASSERT_LT(std::fabs(*ligm(prm, 0).multiplier()), 1e-8);
    ASSERT_EQ(code_of([&] { blankmeyer(prm); }), ErrorCode::SingularMatrix);
  }
}

TEST(MethodProperties, PermutationEquivariance) {
  Engine eng(2005);
  const auto scale = JudgmentScale::saaty(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + uniform_index(eng, 13);
    const auto prm = random_prm(n, scale, eng());
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), eng);
    const auto q = permute(prm, p);
    const auto base = pigm(prm).weights;
    for (const auto& res : {pigm(q), nigm(q, 2.0), ligm(q, 0), blankmeyer(q)}) {
      for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(res.weights[i], base[p[i]], 1e-10) << res.label();
    }
  }
}

TEST(MethodProperties, WeightsSumToOne) {
  Engine eng(2006);
  const auto scale = JudgmentScale::saaty(9);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 3 + uniform_index(eng, 13);
    const auto prm = random_prm(n, scale, eng());
    const double r = uniform_real(eng, -1000.0, 1000.0);
    for (const auto& res : {pigm(prm), nigm(prm, r), ligm(prm, r), blankmeyer(prm)}) {
      const auto w = res.weights.weights();
      ASSERT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-10) << res.label();
    }
  }
}

TEST(MethodProperties, DiagnosticsAreReported) {
  const auto res = pigm(test::a2());
  EXPECT_FALSE(res.has(Diagnostic::NonPositiveWeight));
  EXPECT_FALSE(res.has(Diagnostic::IllConditioned));
  EXPECT_GT(res.min_pivot_ratio, kIllConditionedPivotRatio);
}

}  // namespace
}  // namespace igm
