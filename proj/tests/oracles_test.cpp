#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ikmix/errors.hpp"
#include "ikmix/mixture.hpp"
#include "ikmix/oracles.hpp"
#include "ikmix/ordercheck.hpp"
#include "test_support.hpp"

namespace ikmix {
namespace {

using testing::Rng;
using Vec = std::vector<double>;

const Vec kSweep = Grid{1e-2, 1e2, 50}.nodes();

OracleArgs ex36() {
  return {{0.1, 0.3, 0.6}, {2.0}, {0.1, 0.2, 0.3},
          {0.2, 0.3, 0.5}, {2.0}, {0.5, 1, 2}};
}
OracleArgs ex37() {
  return {{0.1, 0.7, 0.2}, {5, 8, 6}, {2, 1, 1},
          {0.2, 0.5, 0.3}, {3, 4, 2}, {5, 3, 6}};
}
OracleArgs ce36() {
  return {{0.6, 0.25, 0.15}, {1, 3, 5},    {3, 6, 9},
          {0.45, 0.3, 0.25}, {2, 4, 6}, {25, 30, 35}};
}
OracleArgs ex38() {
  return {{0.2, 0.4, 0.4}, {2, 4, 6},    {25, 13, 9},
          {0.3, 0.5, 0.2}, {8, 10, 12}, {3, 4, 1}};
}

TEST(Delta1, Values) {
  EXPECT_EQ(delta1(Vec{0.5, 0.5}, Vec{2, 2}, 0.5, 1.0), 0.0);
  // Extended precision reference.
  const double v = delta1(Vec{0.6, 0.4}, Vec{1, 9}, 0.5, 1.0);
  EXPECT_NEAR(v, 1.2325248046040347651, 1e-14);
  EXPECT_GE(v, 0.0);
  EXPECT_THROW(delta1(Vec{0.5, 0.3, 0.2}, Vec{1, 2, 3}, 0.5, 1.0),
               InvalidInput);
}

TEST(Delta2, Values) {
  EXPECT_EQ(delta2(Vec{0.5, 0.5}, Vec{3, 3}, 0.6, 1.0), 0.0);
  const double v = delta2(Vec{0.2, 0.8}, Vec{6, 2}, 0.6, 1.0);
  EXPECT_NEAR(v, -0.46657444566878534743, 1e-14);
  EXPECT_LE(v, 0.0);
}

TEST(Deltas, SignOverRandomScriptL2Members) {
  Rng rng(71);
  for (int k = 0; k < 100; ++k) {
    const auto a = testing::random_script_l(rng, 2, 0.1, 10);
    const double beta = rng.uniform(0.01, 0.99);
    const auto r1 = sign_sweep(OracleId::kDelta1,
                               {a.row1(), a.row2(), {beta}, {}, {}, {}},
                               kSweep);
    EXPECT_GE(r1.min_value, -1e-12) << to_string(a) << " beta=" << beta;
    EXPECT_EQ(r1.sign_mismatches, 0u);

    const auto b = testing::random_script_l(rng, 2, 0.1, 10);
    const double alpha = rng.log_uniform(0.1, 10);
    const auto r2 = sign_sweep(OracleId::kDelta2,
                               {b.row1(), {alpha}, b.row2(), {}, {}, {}},
                               kSweep);
    EXPECT_LE(r2.max_value, 1e-12) << to_string(b) << " alpha=" << alpha;
    EXPECT_EQ(r2.sign_mismatches, 0u);
  }
}

TEST(Xi310, IdenticalInputsCancel) {
  const Vec p{0.2, 0.3, 0.5};
  const Vec b{0.5, 1, 2};
  for (const double x : kSweep) EXPECT_NEAR(xi_310(p, b, p, b, 1.5, x), 0, 1e-12);
}

TEST(Xi310, NonpositiveAwayFromTheOriginAndMatchesDifferences) {
  const auto r = sign_sweep(OracleId::kXi310, ex36(), kSweep);
  EXPECT_LE(r.max_value, 1e-12);
  EXPECT_EQ(r.sign_mismatches, 0u);
  EXPECT_LT(r.fd_agreement, 1e-5);
}

TEST(Xi311, Cases) {
  const auto same = ex37();
  OracleArgs twin{same.p, same.alpha, same.beta, same.p, same.alpha, same.beta};
  for (const double x : kSweep) {
    EXPECT_NEAR(evaluate(OracleId::kXi311, twin, x), 0.0, 1e-12);
  }
  const auto ex = sign_sweep(OracleId::kXi311, ex37(), kSweep);
  EXPECT_LE(ex.max_value, 1e-12);
  EXPECT_EQ(ex.sign_mismatches, 0u);
  const auto ce = sign_sweep(OracleId::kXi311, ce36(), kSweep);
  EXPECT_FALSE(ce.sign_constant);
  EXPECT_EQ(ce.sign_mismatches, 0u);
}

TEST(Xi312Prime, Cases) {
  const auto same = ex38();
  OracleArgs twin{same.p, same.alpha, same.beta, same.p, same.alpha, same.beta};
  for (const double x : kSweep) {
    EXPECT_NEAR(evaluate(OracleId::kXi312Prime, twin, x), 0.0, 1e-12);
  }
  const auto r = sign_sweep(OracleId::kXi312Prime, ex38(), kSweep);
  EXPECT_GE(r.min_value, -1e-12);
  EXPECT_EQ(r.sign_mismatches, 0u);
}

TEST(K1, AgreesWithMixtureDifference) {
  const Vec beta{5.2, 15.8, 5.6};
  const Vec ones{1, 1, 1};
  const auto m = FiniteMixture::from_vectors({0.2, 0.6, 0.2}, ones, beta);
  const auto ms = FiniteMixture::from_vectors({0.2, 0.5, 0.3}, ones, beta);
  for (const double x : Grid{1e-3, 1e4, 200}.nodes()) {
    EXPECT_NEAR(k1(x), mixture_sf(x, ms) - mixture_sf(x, m), 1e-15) << x;
  }
  EXPECT_NEAR(k1(10.0), -0.036459207209764250978, 1e-14);
  EXPECT_NEAR(k1(100.0), -0.0091282048742540959261, 1e-14);
  EXPECT_NEAR(k1(1e-6), 0.0, 1e-15);
}

TEST(OracleIds, RoundTrip) {
  for (const auto id : {OracleId::kDelta1, OracleId::kDelta2, OracleId::kXi310,
                        OracleId::kXi311, OracleId::kXi312Prime}) {
    EXPECT_EQ(parse_oracle_id(to_string(id)), id);
  }
  EXPECT_THROW(parse_oracle_id("xi_999"), InvalidInput);
}

TEST(OracleProperties, SignAgreementOnRandomInputs) {
  Rng rng(72);
  for (int k = 0; k < 30; ++k) {
    const auto m1 = testing::random_mixture(rng, 3);
    const auto m2 = testing::random_mixture(rng, 3);
    const OracleArgs full{m1.weights(), m1.alphas(), m1.betas(),
                          m2.weights(), m2.alphas(), m2.betas()};
    for (const auto id : {OracleId::kXi311, OracleId::kXi312Prime}) {
      EXPECT_EQ(sign_sweep(id, full, kSweep).sign_mismatches, 0u)
          << to_string(id) << " " << describe(m1) << " / " << describe(m2);
    }
    const OracleArgs common{m1.weights(), {rng.log_uniform(0.3, 5)},
                            m1.betas(),   m2.weights(),
                            {},           m2.betas()};
    EXPECT_EQ(sign_sweep(OracleId::kXi310, common, kSweep).sign_mismatches, 0u);
  }
}

}  // namespace
}  // namespace ikmix
